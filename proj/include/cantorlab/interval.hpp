#pragma once

#include "cantorlab/rational.hpp"

#include <optional>

namespace cantorlab {

/// Closed rational interval [lo, hi]. Degenerate intervals carry exact values;
/// everything else is a certified enclosure produced with outward rounding.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    Interval(Rational l, Rational h);
    static Interval point(const Rational& v) { return {v, v}; }

    bool exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / Rational(2); }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
/// Throws DomainError when b contains zero.
Interval operator/(const Interval& a, const Interval& b);

Interval pow(const Interval& a, long exp);
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);

/// +1 / -1 when the sign is certified, 0 for the exact zero, nullopt otherwise.
std::optional<int> certified_sign(const Interval& a);

/// Directed rounding to roughly `bits` significant bits.
Rational round_down(const Rational& q, int bits);
Rational round_up(const Rational& q, int bits);
Interval round_outward(const Interval& a, int bits);

Interval sqrt_enclose(const Rational& x, int bits);
Interval log_enclose(const Rational& x, int bits);
Interval exp_enclose(const Rational& x, int bits);
Interval log(const Interval& x, int bits);
Interval exp(const Interval& x, int bits);

/// base^e for base > 0. Exact for integer e; small-denominator exponents go
/// through integer roots, anything else through exp/log.
Interval rational_power(const Rational& base, const Rational& e, int bits);

/// base^e for an enclosed base > 0 and enclosed exponent.
Interval pow(const Interval& base, const Interval& e, int bits);

} // namespace cantorlab
