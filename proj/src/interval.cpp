#include "cantorlab/interval.hpp"

#include "cantorlab/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace cantorlab {

namespace {

constexpr int kGuardBits = 32;

Integer fdiv(const Integer& a, const Integer& b) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer cdiv(const Integer& a, const Integer& b) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer shl(const Integer& a, unsigned long k) {
    Integer r;
    mpz_mul_2exp(r.get_mpz_t(), a.get_mpz_t(), k);
    return r;
}

Rational dyadic(const Integer& m, long exp2) {
    if (exp2 >= 0) {
        return Rational(shl(m, static_cast<unsigned long>(exp2)));
    }
    return Rational(m, shl(Integer(1), static_cast<unsigned long>(-exp2)));
}

// floor(q * 2^k) / ceil(q * 2^k) for q >= 0
Integer scaled_floor(const Rational& q, long k) {
    if (k >= 0) {
        return fdiv(shl(q.num(), static_cast<unsigned long>(k)), q.den());
    }
    return fdiv(q.num(), shl(q.den(), static_cast<unsigned long>(-k)));
}

Integer scaled_ceil(const Rational& q, long k) {
    if (k >= 0) {
        return cdiv(shl(q.num(), static_cast<unsigned long>(k)), q.den());
    }
    return cdiv(q.num(), shl(q.den(), static_cast<unsigned long>(-k)));
}

long magnitude(const Rational& q) {
    return static_cast<long>(bit_length(q.num())) - static_cast<long>(bit_length(q.den()));
}

// atanh(z) for 0 <= z <= 1/3, as [lo, hi] * 2^-p.
std::array<Integer, 2> atanh_fixed(const Rational& z, long p) {
    const Integer zn2 = z.num() * z.num();
    const Integer zd2 = z.den() * z.den();
    Integer t_lo = scaled_floor(z, p);
    Integer t_hi = scaled_ceil(z, p);
    Integer s_lo = 0;
    Integer s_hi = 0;
    for (unsigned long k = 0; t_hi > 0; ++k) {
        const Integer d = 2 * k + 1;
        s_lo += fdiv(t_lo, d);
        s_hi += cdiv(t_hi, d);
        t_lo = fdiv(t_lo * zn2, zd2);
        t_hi = cdiv(t_hi * zn2, zd2);
        if (t_hi <= 1) {
            // Remaining terms are below t_hi / (1 - z^2) in total.
            s_hi += cdiv(t_hi * zd2, zd2 - zn2) + 1;
            break;
        }
    }
    return {s_lo, s_hi};
}

// log(y) for 1 <= y <= 2 as fixed point with scale 2^-p.
std::array<Integer, 2> log_small_fixed(const Rational& y, long p) {
    if (y == Rational(1)) {
        return {Integer(0), Integer(0)};
    }
    const Rational z = (y - Rational(1)) / (y + Rational(1));
    auto a = atanh_fixed(z, p);
    return {2 * a[0], 2 * a[1]};
}

Interval ln2_enclose(long p) {
    auto a = atanh_fixed(Rational(1, 3), p);
    return {dyadic(2 * a[0], -p), dyadic(2 * a[1], -p)};
}

// exp(r) for 0 <= r <= 1/2 as fixed point with scale 2^-p.
std::array<Integer, 2> exp_fixed(const Rational& r, long p) {
    Integer t_lo = shl(Integer(1), static_cast<unsigned long>(p));
    Integer t_hi = t_lo;
    Integer s_lo = t_lo;
    Integer s_hi = t_hi;
    for (unsigned long j = 1; t_hi > 0; ++j) {
        t_lo = fdiv(t_lo * r.num(), r.den() * j);
        t_hi = cdiv(t_hi * r.num(), r.den() * j);
        s_lo += t_lo;
        s_hi += t_hi;
        if (t_hi <= 1) {
            // Later ratios are at most r/(j+1) <= 1/4.
            s_hi += 2;
            break;
        }
    }
    return {s_lo, s_hi};
}

Interval exp_nonneg_small(const Rational& r, long p) {
    auto e = exp_fixed(r, p);
    return {dyadic(e[0], -p), dyadic(e[1], -p)};
}

// Integer q-th root enclosure of u/v > 0, relative precision ~bits.
Interval root_enclose(const Rational& x, unsigned long q, int bits) {
    const long mag = magnitude(x) / static_cast<long>(q);
    const long p = std::max<long>(0, bits + kGuardBits - mag);
    // x^(1/q) = (num * den^(q-1))^(1/q) / den
    const Integer radicand = shl(x.num() * ipow(x.den(), q - 1), static_cast<unsigned long>(p) * q);
    Integer root;
    const int exact = mpz_root(root.get_mpz_t(), radicand.get_mpz_t(), q);
    const Integer scale = shl(x.den(), static_cast<unsigned long>(p));
    if (exact != 0) {
        return Interval::point(Rational(root, scale));
    }
    return {Rational(root, scale), Rational(root + 1, scale)};
}

} // namespace

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) {
        throw InvalidInput("interval with lo > hi");
    }
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
    if (a.lo.sign() >= 0 && b.lo.sign() >= 0) {
        return {a.lo * b.lo, a.hi * b.hi};
    }
    const std::array<Rational, 4> p{a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p.begin(), p.end()), *std::max_element(p.begin(), p.end())};
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains(Rational(0))) {
        throw DomainError("interval division by an interval containing zero");
    }
    return a * Interval(Rational(1) / b.hi, Rational(1) / b.lo);
}

Interval pow(const Interval& a, long exp) {
    if (exp < 0) {
        return Interval::point(Rational(1)) / pow(a, -exp);
    }
    if (exp == 0) {
        return Interval::point(Rational(1));
    }
    if (a.lo.sign() >= 0) {
        return {rpow(a.lo, exp), rpow(a.hi, exp)};
    }
    Interval r = Interval::point(Rational(1));
    for (long i = 0; i < exp; ++i) {
        r = r * a;
    }
    if (exp % 2 == 0 && r.lo.sign() < 0) {
        r.lo = Rational(0);
    }
    return r;
}

Interval min(const Interval& a, const Interval& b) { return {std::min(a.lo, b.lo), std::min(a.hi, b.hi)}; }
Interval max(const Interval& a, const Interval& b) { return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)}; }
Interval hull(const Interval& a, const Interval& b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

std::optional<int> certified_sign(const Interval& a) {
    if (a.lo.sign() > 0) {
        return 1;
    }
    if (a.hi.sign() < 0) {
        return -1;
    }
    if (a.lo.sign() == 0 && a.hi.sign() == 0) {
        return 0;
    }
    return std::nullopt;
}

Rational round_down(const Rational& q, int bits) {
    if (q.sign() == 0) {
        return q;
    }
    if (q.sign() < 0) {
        return -round_up(-q, bits);
    }
    const long k = bits - magnitude(q);
    if (q.den() == 1 && k >= 0) {
        return q;
    }
    return dyadic(scaled_floor(q, k), -k);
}

Rational round_up(const Rational& q, int bits) {
    if (q.sign() == 0) {
        return q;
    }
    if (q.sign() < 0) {
        return -round_down(-q, bits);
    }
    const long k = bits - magnitude(q);
    if (q.den() == 1 && k >= 0) {
        return q;
    }
    return dyadic(scaled_ceil(q, k), -k);
}

Interval round_outward(const Interval& a, int bits) {
    if (a.exact()) {
        return a;
    }
    return {round_down(a.lo, bits), round_up(a.hi, bits)};
}

Interval sqrt_enclose(const Rational& x, int bits) {
    if (x.sign() < 0) {
        throw DomainError("sqrt of a negative number");
    }
    if (x.sign() == 0) {
        return Interval::point(x);
    }
    return root_enclose(x, 2, bits);
}

Interval log_enclose(const Rational& x, int bits) {
    if (x.sign() <= 0) {
        throw DomainError("log of a non-positive number");
    }
    if (x == Rational(1)) {
        return Interval::point(Rational(0));
    }
    if (x < Rational(1)) {
        return -log_enclose(Rational(1) / x, bits);
    }
    // x = 2^e * y with 1 <= y < 2
    long e = magnitude(x);
    Rational y = x / dyadic(Integer(1), e);
    while (y >= Rational(2)) {
        y /= Rational(2);
        ++e;
    }
    while (y < Rational(1)) {
        y *= Rational(2);
        --e;
    }
    const long p = bits + kGuardBits + static_cast<long>(bit_length(Integer(std::abs(e)) + 1));
    auto ly = log_small_fixed(y, p);
    Interval r{dyadic(ly[0], -p), dyadic(ly[1], -p)};
    if (e != 0) {
        r = r + Interval::point(Rational(e)) * ln2_enclose(p);
    }
    return round_outward(r, bits + kGuardBits);
}

Interval exp_enclose(const Rational& x, int bits) {
    if (x.sign() == 0) {
        return Interval::point(Rational(1));
    }
    const double approx = x.to_double();
    if (!std::isfinite(approx) || std::abs(approx) > 1e15) {
        throw DomainError("exp argument out of range");
    }
    const long k = std::lround(approx / 0.69314718055994530942);
    const long p = bits + kGuardBits + static_cast<long>(bit_length(Integer(std::abs(k)) + 1));
    const Interval r = Interval::point(x) - Interval::point(Rational(k)) * ln2_enclose(p);
    auto one_side = [p](const Rational& v, bool lower) {
        if (v.sign() >= 0) {
            const Interval e = exp_nonneg_small(v, p);
            return lower ? e.lo : e.hi;
        }
        const Interval e = exp_nonneg_small(-v, p);
        return lower ? Rational(1) / e.hi : Rational(1) / e.lo;
    };
    Interval out{one_side(r.lo, true), one_side(r.hi, false)};
    const Rational scale = dyadic(Integer(1), k);
    out = Interval(out.lo * scale, out.hi * scale);
    return round_outward(out, bits + kGuardBits);
}

Interval log(const Interval& x, int bits) {
    if (x.lo.sign() <= 0) {
        throw DomainError("log of an interval reaching non-positive values");
    }
    if (x.exact()) {
        return log_enclose(x.lo, bits);
    }
    return {log_enclose(x.lo, bits).lo, log_enclose(x.hi, bits).hi};
}

Interval exp(const Interval& x, int bits) {
    if (x.exact()) {
        return exp_enclose(x.lo, bits);
    }
    return {exp_enclose(x.lo, bits).lo, exp_enclose(x.hi, bits).hi};
}

Interval rational_power(const Rational& base, const Rational& e, int bits) {
    if (base.sign() <= 0) {
        throw DomainError("rational_power needs a positive base");
    }
    if (e.is_integer()) {
        return Interval::point(rpow(base, e.num().get_si()));
    }
    const Integer& q = e.den();
    const Integer pnum = e.num();
    if (q <= 64 && abs(pnum) <= 4096) {
        const Rational raised = rpow(base, pnum.get_si());
        return root_enclose(raised, q.get_ui(), bits);
    }
    return exp(Interval::point(e) * log_enclose(base, bits + kGuardBits), bits);
}

Interval pow(const Interval& base, const Interval& e, int bits) {
    if (base.exact() && e.exact()) {
        return rational_power(base.lo, e.lo, bits);
    }
    if (base.lo.sign() <= 0) {
        throw DomainError("pow needs a positive base");
    }
    return exp(e * log(base, bits + kGuardBits), bits);
}

} // namespace cantorlab
