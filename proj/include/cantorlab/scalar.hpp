#pragma once

#include "cantorlab/interval.hpp"
#include "cantorlab/real.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>

namespace cantorlab {

/// A real parameter of the limsup machinery (an exponent tau, s, alpha, ...).
///
/// Values built from rationals and the set exponent gamma* = log m / log b
/// stay symbolic as a Laurent polynomial sum_k c_k gamma*^k, so identities
/// like s * tau = gamma* are decided exactly. Anything else (surds, products
/// involving them) falls back to an enclosure callback.
class Scalar {
public:
    Scalar() : Scalar(Rational(0)) {}
    Scalar(const Rational& r);  // NOLINT(google-explicit-constructor)

    /// c * gamma*^power, where gamma* = log m / log b.
    static Scalar gamma(int m, int b, const Rational& c = Rational(1), int power = 1);
    static Scalar real(const RealSpec& spec);

    bool symbolic() const { return !opaque_; }
    /// Exact rational value when known.
    std::optional<Rational> rational() const;
    /// Symbolically zero. Opaque values are never reported as zero.
    bool is_zero() const;
    /// (m, b) when gamma* appears, and the coefficient map.
    const std::map<int, Rational>& terms() const { return terms_; }
    int gamma_m() const { return m_; }
    int gamma_b() const { return b_; }

    Interval enclose(int bits) const;
    /// Certified sign; 0 only for symbolic zero. Throws UndecidableError.
    int sign(const PrecisionPolicy& policy = {}) const;

    std::string str() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar operator-() const;

private:
    std::map<int, Rational> terms_;
    int m_ = 0;
    int b_ = 0;
    std::function<Interval(int)> opaque_;
    std::string label_;

    void normalize();
    static void merge_context(Scalar& out, const Scalar& a, const Scalar& b);
    static Scalar opaque(std::function<Interval(int)> f, std::string label);
};

/// b^e for an integer base b >= 2. Exact when e = u + v gamma* with integer
/// u, v (gamma* taken with the scalar's own m, b = base).
Interval base_power(int base, const Scalar& e, int bits);

} // namespace cantorlab
