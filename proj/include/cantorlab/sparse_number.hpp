#pragma once

#include "cantorlab/continued_fraction.hpp"
#include "cantorlab/missing_digit_set.hpp"
#include "cantorlab/real.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cantorlab {

struct ExponentRule {
    enum class Kind { Power, Factorial };
    Kind kind = Kind::Power;
    RealSpec tau = Rational(3);
    RealSpec lambda = Rational(1);

    static ExponentRule power(RealSpec tau, RealSpec lambda = Rational(1)) {
        return {Kind::Power, std::move(tau), std::move(lambda)};
    }
    static ExponentRule factorial() { return {Kind::Factorial, Rational(3), Rational(1)}; }

    std::string str() const;
};

/// xi = coefficient * sum_n b^-tau_n, kept as S exact truncations plus the
/// next exponent, which bounds the remainder.
class SparseDigitNumber {
public:
    int base() const { return base_; }
    int coefficient() const { return coefficient_; }
    const ExponentRule& rule() const { return rule_; }
    int terms() const { return static_cast<int>(exponents_.size()); }
    const std::vector<long>& exponents() const { return exponents_; }
    long lookahead() const { return lookahead_; }

    /// p_s and q_s = b^tau_s, 1-based.
    const Integer& p(int s) const { return p_.at(static_cast<std::size_t>(s - 1)); }
    const Integer& q(int s) const { return q_.at(static_cast<std::size_t>(s - 1)); }
    Rational truncation(int s) const { return Rational(p(s), q(s)); }

    SparseSeries series() const { return {base_, coefficient_, exponents_, lookahead_}; }
    /// Rational enclosure of the infinite sum.
    Interval enclosure() const;
    /// Digit k (1-based) of the base-b expansion; needs k < lookahead().
    int digit(long k) const;

private:
    friend SparseDigitNumber build_sparse_number(int, int, const ExponentRule&, int, const PrecisionPolicy&);
    int base_ = 3;
    int coefficient_ = 2;
    ExponentRule rule_;
    std::vector<long> exponents_;
    long lookahead_ = 0;
    std::vector<Integer> p_;
    std::vector<Integer> q_;
};

/// Exponents come from floor_power (power rule) or n! (factorial rule).
/// Throws InvalidInput on parameter or exponent-collision errors and
/// propagates UndecidableError from floor_power.
SparseDigitNumber build_sparse_number(int base, int coefficient, const ExponentRule& rule, int terms,
                                      const PrecisionPolicy& policy = {});

/// Membership through the digit stream. Exact for depth < lookahead().
MembershipResult membership(const SparseDigitNumber& x, const MissingDigitSet& set, int depth);

struct TruncationCheck {
    int s = 1;
    Integer q_s;
    Integer q_next;
    bool qs_lower = false;   // b^-1 q_s^tau < q_{s+1}
    bool qs_upper = false;   // q_{s+1} < b^tau q_s^tau
    bool eeg_lower = false;  // c / q_{s+1} < |xi - p_s/q_s|
    bool eeg_upper = false;  // |xi - p_s/q_s| < c b / ((b-1) q_{s+1})
    bool derived_lower = false;  // c b^-tau q_s^-tau < gap
    bool derived_upper = false;  // gap < c b^2 / (b-1) q_s^-tau
    Interval gap;
    bool pass() const {
        return qs_lower && qs_upper && eeg_lower && eeg_upper && derived_lower && derived_upper;
    }
};

/// Checks for one s, 1 <= s < S. The reference exponent is the rule's tau for
/// power numbers; factorial numbers have none and use `reference_tau`.
TruncationCheck truncation_check(const SparseDigitNumber& x, int s, const std::optional<RealSpec>& reference_tau = {},
                                 const PrecisionPolicy& policy = {});

struct TruncationReport {
    std::vector<TruncationCheck> rows;
    /// Smallest s from which every later check passes.
    std::optional<int> s_min;
    RealSpec reference_tau;
    bool liouville_like = false;  // the gaps outgrow the reference exponent
};

TruncationReport truncation_report(const SparseDigitNumber& x, const std::optional<RealSpec>& reference_tau = {},
                                   const PrecisionPolicy& policy = {});

/// Truncations certified as convergents by the Legendre criterion, each
/// located in `cf` when found there.
struct LegendreRow {
    int s = 1;
    LegendreVerdict verdict = LegendreVerdict::NotImplied;
    std::optional<std::size_t> convergent_index;
};
std::vector<LegendreRow> legendre_rows(const SparseDigitNumber& x, const ContinuedFraction& cf);

/// CF of xi; refinements rebuild xi with more terms.
ContinuedFraction sparse_continued_fraction(const SparseDigitNumber& x, int depth, int max_refinements = 6,
                                            const PrecisionPolicy& policy = {});

/// The convergent after p_s/q_s and its size against q_s^(tau-1).
struct NextConvergentCheck {
    int s = 1;
    bool found = false;
    Integer q_star;
    bool lower = false;  // q_s^(tau-1) / 10 < q_*
    bool upper = false;  // q_* < (b^tau / 2) q_s^(tau-1)
};
NextConvergentCheck next_convergent_check(const SparseDigitNumber& x, const ContinuedFraction& cf, int s,
                                          const PrecisionPolicy& policy = {});

/// (tau - 1)(tau + eps - 1) > tau, exact.
bool threshold_inequality(const Rational& tau, const Rational& eps);
/// tau >= (3 + sqrt 5) / 2, exact.
bool exact_order_threshold(const Rational& tau);
/// (2 tau - 1) / (tau - 1)
Rational order_band_upper(const Rational& tau);

} // namespace cantorlab
