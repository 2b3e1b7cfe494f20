#include "cantorlab/sparse_number.hpp"

#include "cantorlab/errors.hpp"
#include "cantorlab/scalar.hpp"

#include <algorithm>
#include <functional>

namespace cantorlab {

namespace {

constexpr long kMaxExponent = 1L << 22;

// Certified sign of a quantity whose enclosure improves with bits.
int certified(const std::function<Interval(int)>& f, const PrecisionPolicy& policy, const char* what) {
    for (int step = 0; step < policy.max_steps; ++step) {
        const Interval v = f(policy.bits_at(step));
        if (auto s = certified_sign(v)) {
            return *s;
        }
    }
    throw PrecisionError(std::string("could not certify ") + what + "; try more terms");
}

// Strict comparison of a fixed enclosure against a bound.
bool strictly_less(const Interval& a, const Rational& bound, const char* what) {
    if (a.hi < bound) {
        return true;
    }
    if (a.lo >= bound) {
        return false;
    }
    throw PrecisionError(std::string("tail enclosure too wide for ") + what + "; rebuild with a larger S");
}

bool strictly_greater(const Interval& a, const Rational& bound, const char* what) {
    if (a.lo > bound) {
        return true;
    }
    if (a.hi <= bound) {
        return false;
    }
    throw PrecisionError(std::string("tail enclosure too wide for ") + what + "; rebuild with a larger S");
}

RealSpec reference_exponent(const SparseDigitNumber& x, const std::optional<RealSpec>& reference_tau) {
    if (x.rule().kind == ExponentRule::Kind::Power) {
        return x.rule().tau;
    }
    return reference_tau ? *reference_tau : RealSpec(Rational(3));
}

} // namespace

std::string ExponentRule::str() const {
    if (kind == Kind::Factorial) {
        return "factorial";
    }
    return "power(tau=" + describe(tau) + ", lambda=" + describe(lambda) + ")";
}

Interval SparseDigitNumber::enclosure() const {
    const Rational sum(p_.back(), q_.back());
    const Rational tail(Integer(coefficient_), ipow(base_, static_cast<unsigned long>(lookahead_)));
    return {sum + tail, sum + tail * Rational(base_) / Rational(base_ - 1)};
}

int SparseDigitNumber::digit(long k) const {
    if (k < 1 || k >= lookahead_) {
        throw InvalidInput("digit position outside the materialized range");
    }
    return std::binary_search(exponents_.begin(), exponents_.end(), k) ? coefficient_ : 0;
}

SparseDigitNumber build_sparse_number(int base, int coefficient, const ExponentRule& rule, int terms,
                                      const PrecisionPolicy& policy) {
    if (base < 3) {
        throw InvalidInput("base must be >= 3");
    }
    if (coefficient < 1 || coefficient >= base) {
        throw InvalidInput("coefficient must be a nonzero digit");
    }
    if (terms < 2) {
        throw InvalidInput("S must be >= 2");
    }
    SparseDigitNumber x;
    x.base_ = base;
    x.coefficient_ = coefficient;
    x.rule_ = rule;
    std::vector<long> exps;
    if (rule.kind == ExponentRule::Kind::Power) {
        if (compare(rule.tau, Rational(2), policy) <= 0) {
            throw InvalidInput("power rule needs tau > 2");
        }
        if (compare(rule.lambda, Rational(0), policy) <= 0) {
            throw InvalidInput("power rule needs lambda > 0");
        }
        for (long n = 1; n <= terms + 1; ++n) {
            const Integer e = floor_power(rule.lambda, rule.tau, n, policy);
            if (e > kMaxExponent) {
                throw ResourceError("exponent tau_" + std::to_string(n) + " exceeds the supported size");
            }
            exps.push_back(e.get_si());
        }
    } else {
        long f = 1;
        for (long n = 1; n <= terms + 1; ++n) {
            f *= n;
            if (f > kMaxExponent) {
                throw ResourceError("exponent " + std::to_string(n) + "! exceeds the supported size");
            }
            exps.push_back(f);
        }
    }
    if (exps.front() < 1) {
        throw InvalidInput("first exponent must be >= 1 (increase lambda)");
    }
    for (std::size_t i = 1; i < exps.size(); ++i) {
        if (exps[i] <= exps[i - 1]) {
            throw InvalidInput("exponent collision: tau_" + std::to_string(i + 1) + " <= tau_" + std::to_string(i));
        }
    }
    x.lookahead_ = exps.back();
    exps.pop_back();
    x.exponents_ = std::move(exps);
    Integer p = 0;
    long prev = 0;
    for (long e : x.exponents_) {
        p = p * ipow(base, static_cast<unsigned long>(e - prev)) + coefficient;
        prev = e;
        Integer q = ipow(base, static_cast<unsigned long>(e));
        if (gcd(p, q) != 1) {
            throw InvalidInput("gcd(p_s, q_s) != 1 at s = " + std::to_string(x.p_.size() + 1) +
                               "; coefficient and base share a factor");
        }
        x.p_.push_back(p);
        x.q_.push_back(std::move(q));
    }
    return x;
}

MembershipResult membership(const SparseDigitNumber& x, const MissingDigitSet& set, int depth) {
    if (set.base() != x.base()) {
        throw InvalidInput("number and set use different bases");
    }
    const long last = std::min<long>(depth, x.lookahead() - 1);
    for (long k = 1; k <= last; ++k) {
        if (!set.allows(x.digit(k))) {
            return {Verdict::Out, static_cast<int>(k)};
        }
    }
    return {Verdict::In, static_cast<int>(last)};
}

TruncationCheck truncation_check(const SparseDigitNumber& x, int s, const std::optional<RealSpec>& reference_tau,
                                 const PrecisionPolicy& policy) {
    if (s < 1 || s >= x.terms()) {
        throw InvalidInput("truncation check needs 1 <= s < S");
    }
    const Scalar tau = Scalar::real(reference_exponent(x, reference_tau));
    const long ts = x.exponents()[static_cast<std::size_t>(s - 1)];
    const long tn = x.exponents()[static_cast<std::size_t>(s)];
    const int b = x.base();
    const Rational c(x.coefficient());

    TruncationCheck r;
    r.s = s;
    r.q_s = x.q(s);
    r.q_next = x.q(s + 1);
    // exponents of b: tau*tau_s - 1 < tau_{s+1} < tau*(tau_s + 1)
    r.qs_lower = (Scalar(Rational(tn + 1)) - tau * Scalar(Rational(ts))).sign(policy) > 0;
    r.qs_upper = (tau * Scalar(Rational(ts + 1)) - Scalar(Rational(tn))).sign(policy) > 0;

    r.gap = x.enclosure() - Interval::point(x.truncation(s));
    const Rational inv_next(Integer(1), r.q_next);
    r.eeg_lower = strictly_greater(r.gap, c * inv_next, "the lower gap bound");
    r.eeg_upper = strictly_less(r.gap, c * Rational(b) / Rational(b - 1) * inv_next, "the upper gap bound");

    const Scalar e_lower = Scalar(Rational(-(ts + 1))) * tau;
    const Scalar e_upper = Scalar(Rational(-ts)) * tau;
    const Interval gap = r.gap;
    r.derived_lower = certified([&](int bits) { return gap - Interval::point(c) * base_power(b, e_lower, bits); },
                                policy, "the derived lower bound") > 0;
    const Rational k = c * Rational(b * b) / Rational(b - 1);
    r.derived_upper = certified([&](int bits) { return Interval::point(k) * base_power(b, e_upper, bits) - gap; },
                                policy, "the derived upper bound") > 0;
    return r;
}

TruncationReport truncation_report(const SparseDigitNumber& x, const std::optional<RealSpec>& reference_tau,
                                   const PrecisionPolicy& policy) {
    TruncationReport rep;
    rep.reference_tau = reference_exponent(x, reference_tau);
    for (int s = 1; s < x.terms(); ++s) {
        rep.rows.push_back(truncation_check(x, s, reference_tau, policy));
    }
    for (auto it = rep.rows.rbegin(); it != rep.rows.rend() && it->pass(); ++it) {
        rep.s_min = it->s;
    }
    rep.liouville_like = !rep.rows.back().qs_upper;
    return rep;
}

std::vector<LegendreRow> legendre_rows(const SparseDigitNumber& x, const ContinuedFraction& cf) {
    std::vector<LegendreRow> rows;
    const Interval enc = x.enclosure();
    for (int s = 1; s <= x.terms(); ++s) {
        LegendreRow row;
        row.s = s;
        row.verdict = legendre_is_convergent(x.p(s), x.q(s), enc);
        row.convergent_index = find_convergent(cf, x.p(s), x.q(s));
        rows.push_back(row);
    }
    return rows;
}

ContinuedFraction sparse_continued_fraction(const SparseDigitNumber& x, int depth, int max_refinements,
                                            const PrecisionPolicy& policy) {
    const int b = x.base();
    const int c = x.coefficient();
    const ExponentRule rule = x.rule();
    const int s0 = x.terms();
    const Interval first = x.enclosure();
    CfSession session(
        [=](int step) {
            return step == 0 ? first : build_sparse_number(b, c, rule, s0 + step, policy).enclosure();
        },
        max_refinements + 1);
    return session.expand(depth);
}

NextConvergentCheck next_convergent_check(const SparseDigitNumber& x, const ContinuedFraction& cf, int s,
                                          const PrecisionPolicy& policy) {
    NextConvergentCheck r;
    r.s = s;
    const auto idx = find_convergent(cf, x.p(s), x.q(s));
    if (!idx || *idx >= cf.size()) {
        return r;
    }
    r.found = true;
    r.q_star = cf.q[*idx];  // convergent idx + 1 (1-based)
    const Scalar tau = Scalar::real(reference_exponent(x, std::nullopt));
    const long ts = x.exponents()[static_cast<std::size_t>(s - 1)];
    const Scalar e = Scalar(Rational(ts)) * (tau - Scalar(Rational(1)));
    const Interval q10 = Interval::point(Rational(10 * r.q_star));
    const Interval q2 = Interval::point(Rational(2 * r.q_star));
    const int b = x.base();
    r.lower = certified([&](int bits) { return q10 - base_power(b, e, bits); }, policy, "the next-convergent bound") > 0;
    r.upper = certified([&](int bits) { return base_power(b, tau + e, bits) - q2; }, policy,
                        "the next-convergent bound") > 0;
    return r;
}

bool threshold_inequality(const Rational& tau, const Rational& eps) {
    return (tau - Rational(1)) * (tau + eps - Rational(1)) > tau;
}

bool exact_order_threshold(const Rational& tau) {
    // tau >= (3 + sqrt 5)/2  <=>  2 tau - 3 >= sqrt 5
    const Rational t = Rational(2) * tau - Rational(3);
    return t.sign() >= 0 && t * t >= Rational(5);
}

Rational order_band_upper(const Rational& tau) {
    if (tau <= Rational(1)) {
        throw DomainError("band needs tau > 1");
    }
    return (Rational(2) * tau - Rational(1)) / (tau - Rational(1));
}

} // namespace cantorlab
