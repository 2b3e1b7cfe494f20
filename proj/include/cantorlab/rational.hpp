#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace cantorlab {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}                           // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(static_cast<long>(v)) {}         // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : q_(v) {}                 // NOLINT(google-explicit-constructor)
    template <class E>
    Rational(const __gmp_expr<mpz_t, E>& v) : q_(Integer(v)) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Throws InvalidInput on a zero denominator.
    Rational(const Integer& num, const Integer& den);

    /// Parses "n", "n/d" or a finite decimal "-1.25e-3" exactly.
    static Rational parse(const std::string& text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Integer floor() const;
    Integer ceil() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// Canonical "num/den" (or "num" when the denominator is 1).
    std::string str() const { return q_.get_str(); }

    /// Lossy; for report formatting only.
    double to_double() const { return q_.get_d(); }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n/d reduced, denominator positive. Zero denominator is rejected.
Rational canonicalize_rational(const Integer& n, const Integer& d);

Integer ipow(const Integer& base, unsigned long exp);
Rational rpow(const Rational& base, long exp);
Integer gcd(const Integer& a, const Integer& b);

/// Number of bits of |v| (0 for v == 0).
std::size_t bit_length(const Integer& v);

/// Decimal rendering in scientific notation with `digits` significant digits,
/// rounded to nearest. Reports only; the exact value is always emitted too.
std::string to_decimal(const Rational& r, int digits = 17);

} // namespace cantorlab
