#pragma once

#include "cantorlab/approx.hpp"
#include "cantorlab/cantor_measure.hpp"
#include "cantorlab/missing_digit_set.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cantorlab {

/// Window B with t0 the smallest integer such that b^-t0 < r(B).
struct WindowConfig {
    RatInterval window = RatInterval::unit();
    int t0 = 1;

    static WindowConfig for_window(const MissingDigitSet& set, const RatInterval& window);
    Rational radius() const { return window.length() / Rational(2); }
};

/// A*_n(B): balls of radius psi(b^n) around p / b^n in the set (reduced when
/// `coprime`), kept when they meet the window and clipped to it.
class Layer {
public:
    Layer(MissingDigitSet set, int n, WindowConfig cfg, bool coprime, std::vector<std::uint64_t> centers,
          Interval radius);

    const MissingDigitSet& set() const { return set_; }
    int level() const { return n_; }
    const WindowConfig& config() const { return cfg_; }
    bool coprime() const { return coprime_; }
    const std::vector<std::uint64_t>& centers() const { return centers_; }
    const Interval& radius() const { return radius_; }
    Rational center(std::size_t i) const;
    /// psi(b^n) < b^-n / 2 certified, hence pairwise disjoint balls.
    bool disjoint() const { return disjoint_; }

    /// Merged ball union at the given radius, clipped to the window.
    IntervalUnion union_at(const Rational& r) const;

private:
    MissingDigitSet set_;
    int n_;
    WindowConfig cfg_;
    bool coprime_;
    std::vector<std::uint64_t> centers_;
    Interval radius_;
    bool disjoint_;
};

Layer build_layer(const MissingDigitSet& set, const ApproxFunction& psi, int n, const WindowConfig& cfg, bool coprime,
                  std::size_t budget = kDefaultCenterBudget);

CantorMeasureValue layer_measure(const Layer& layer);
/// mu(A*_m(B) n A*_n(B)); the layers must share set and window.
CantorMeasureValue pairwise_measure(const Layer& a, const Layer& b);

/// mu(A*_n(B)) / ((psi(b^n) b^n)^gamma* mu(B)); exact when psi is a power
/// whose exponents combine to integers.
Interval comparability_ratio(const Layer& layer, const ApproxFunction& psi, int bits = 128);

enum class PairCase { Disjoint, Overlapping, Undetermined };  // proof cases (i) / (ii)
std::string to_string(PairCase c);

/// Case (i) when b^-n >= 2 psi(b^m), else case (ii).
PairCase classify_pair(const MissingDigitSet& set, const ApproxFunction& psi, int m, int n);

/// rho = mu(A_m n A_n) mu(B) / (mu(A_m) mu(A_n)); empty when a layer is null.
std::optional<Interval> pair_ratio(const CantorMeasureValue& mu_m, const CantorMeasureValue& mu_n,
                                   const CantorMeasureValue& mu_mn, const Rational& mu_window);

struct PairRow {
    int m = 0;
    int n = 0;
    PairCase pair_case = PairCase::Undetermined;
    bool below_t0 = false;
    CantorMeasureValue mu_m;
    CantorMeasureValue mu_n;
    CantorMeasureValue mu_mn;
    std::optional<Interval> rho;  // empty when mu_m or mu_n is null
};

struct QuasiIndependenceReport {
    std::vector<PairRow> rows;
    std::vector<std::pair<int, int>> skipped;
    /// max rho over all rows, and over rows with m > t0 only (upper ends).
    std::optional<Rational> c_all;
    std::optional<Rational> c_beyond_t0;
    Rational mu_window;
};

/// All pairs m_min <= m < n <= n_max. Rows with m <= t0 are labelled.
QuasiIndependenceReport quasi_independence_scan(const MissingDigitSet& set, const ApproxFunction& psi,
                                                const WindowConfig& cfg, int n_max, int m_min = 1);
QuasiIndependenceReport quasi_independence_scan_serial(const MissingDigitSet& set, const ApproxFunction& psi,
                                                       const WindowConfig& cfg, int n_max, int m_min = 1);

struct BorelCantelliResult {
    Interval ratio;        // (sum mu(E_s))^2 / sum_{s,t} mu(E_s n E_t)
    Interval sum_mu;
    Interval sum_pairs;
    Interval union_mu;     // mu(U_{s<=Q} E_s)
    bool exact = true;
};

BorelCantelliResult borel_cantelli_ratio(const MissingDigitSet& set, const ApproxFunction& psi,
                                         const WindowConfig& cfg, int q);

struct BoxDimensionEstimate {
    int level = 0;  // ceil(tau * n)
    Integer count;
    Interval estimate;  // log(count) / (level * log b)
};

/// Single-layer covering exponent of A_n with psi = r^-tau; a finite-stage
/// quantity, not the dimension of the limsup set.
BoxDimensionEstimate box_dimension_estimate(const MissingDigitSet& set, const Rational& tau, int n, bool coprime,
                                            std::size_t budget = kDefaultCenterBudget);
BoxDimensionEstimate box_dimension_estimate_serial(const MissingDigitSet& set, const Rational& tau, int n,
                                                   bool coprime, std::size_t budget = kDefaultCenterBudget);

} // namespace cantorlab
