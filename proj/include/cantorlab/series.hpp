#pragma once

#include "cantorlab/approx.hpp"
#include "cantorlab/missing_digit_set.hpp"

#include <string>
#include <vector>

namespace cantorlab {

enum class SeriesVerdictKind { Convergent, Divergent, Undetermined };
enum class MeasurePrediction { MeasureZero, MeasureFull, NotApplicable };

std::string to_string(SeriesVerdictKind v);
std::string to_string(MeasurePrediction p);

/// Partial sums S_N = sum_{n<=N} f(psi(b^n)) (b^n)^gamma* and the zero/full
/// dichotomy they decide.
struct SeriesVerdict {
    std::vector<Interval> terms;
    std::vector<Interval> partial_sums;
    SeriesVerdictKind verdict = SeriesVerdictKind::Undetermined;
    MeasurePrediction prediction = MeasurePrediction::NotApplicable;
    bool exact = true;
    std::string rule;  // which analytic argument decided the verdict
};

/// Term n of the series, exact where the inputs allow.
Interval series_term(const MissingDigitSet& set, const ApproxFunction& psi, const DimensionFunction& f, int n,
                     int bits = 128);

/// Throws HypothesisViolation when f carries no monotonicity witness.
SeriesVerdict series_classify(const MissingDigitSet& set, const ApproxFunction& psi, const DimensionFunction& f,
                              int n_max, const PrecisionPolicy& policy = {});

struct TailReport {
    int n0 = 1;
    int n_max = 1;
    /// tails[k] = T(n0 + k) = sum_{n0+k <= n <= n_max} f(psi(b^n)) #centers(n)
    std::vector<Interval> tails;
    bool exact = true;
    SeriesVerdictKind verdict = SeriesVerdictKind::Undetermined;
};

/// Natural-cover bound of the convergence half. The sequence is
/// non-increasing in its starting level.
TailReport natural_cover_tail(const MissingDigitSet& set, const ApproxFunction& psi, const DimensionFunction& f, int n0,
                              int n_max, const PrecisionPolicy& policy = {});

} // namespace cantorlab
