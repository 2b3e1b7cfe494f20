#include "cantorlab/real.hpp"

#include "cantorlab/errors.hpp"

#include <cmath>
#include <sstream>

namespace cantorlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void validate(const LogRatio& l) {
    if (l.num <= 0 || l.den <= 0) {
        throw DomainError("log of a non-positive number");
    }
    if (l.den == 1) {
        throw DomainError("log ratio with log(1) = 0 in the denominator");
    }
}

void validate(const QuadraticSurd& s) {
    if (s.d < 0) {
        throw DomainError("sqrt of a negative number");
    }
}

void validate(const SparseSeries& s) {
    if (s.base < 2 || s.coefficient < 0 || s.coefficient >= s.base) {
        throw InvalidInput("sparse series needs base >= 2 and a digit coefficient");
    }
    for (std::size_t i = 0; i < s.exponents.size(); ++i) {
        if (s.exponents[i] < 1 || (i > 0 && s.exponents[i] <= s.exponents[i - 1])) {
            throw InvalidInput("sparse series exponents must be positive and strictly increasing");
        }
    }
    if (s.lookahead && !s.exponents.empty() && *s.lookahead <= s.exponents.back()) {
        throw InvalidInput("sparse series lookahead must exceed the last exponent");
    }
}

// Smallest c <= 64 with num^c == den^a; gives log num / log den = a/c.
std::optional<Rational> rational_log_ratio(const Integer& num, const Integer& den) {
    if (num == 1) {
        return Rational(0);
    }
    const double r = std::log(num.get_d()) / std::log(den.get_d());
    if (!std::isfinite(r)) {
        return std::nullopt;
    }
    for (long c = 1; c <= 64; ++c) {
        const long a = std::lround(r * static_cast<double>(c));
        if (a <= 0 || std::abs(r * static_cast<double>(c) - static_cast<double>(a)) > 1e-6) {
            continue;
        }
        if (ipow(num, static_cast<unsigned long>(c)) == ipow(den, static_cast<unsigned long>(a))) {
            return Rational(Integer(a), Integer(c));
        }
    }
    return std::nullopt;
}

Interval sparse_enclosure(const SparseSeries& s) {
    const Integer b = s.base;
    Rational sum(0);
    for (long e : s.exponents) {
        sum += Rational(Integer(s.coefficient), ipow(b, static_cast<unsigned long>(e)));
    }
    if (s.lookahead) {
        const Rational next(Integer(s.coefficient), ipow(b, static_cast<unsigned long>(*s.lookahead)));
        // Terms after the lookahead start at exponent lookahead + 1.
        return {sum + next, sum + next + next / Rational(s.base - 1)};
    }
    const long last = s.exponents.empty() ? 0 : s.exponents.back();
    return {sum, sum + Rational(Integer(s.coefficient), ipow(b, static_cast<unsigned long>(last)) * (s.base - 1))};
}

// Certified sign of x + y sqrt(d).
int surd_sign(const Rational& x, const Rational& y, const Integer& d) {
    const int sx = x.sign();
    const int sy = d == 0 ? 0 : y.sign();
    if (sy == 0 || sx == sy) {
        return sx != 0 ? sx : sy;
    }
    if (sx == 0) {
        return sy;
    }
    const Rational xx = x * x;
    const Rational yy = y * y * Rational(d);
    if (xx == yy) {
        return 0;
    }
    return xx > yy ? sx : sy;
}

// floor(lambda (a + b sqrt d)^n) decided in Q(sqrt d).
Integer floor_surd_power(const Rational& lambda, const QuadraticSurd& t, long n, const Interval& guess) {
    Rational x(1);
    Rational y(0);
    for (long i = 0; i < n; ++i) {
        const Rational nx = x * t.a + y * t.b * Rational(t.d);
        y = x * t.b + y * t.a;
        x = nx;
    }
    x *= lambda;
    y *= lambda;
    Integer k = guess.lo.floor();
    // smallest k with value - k - 1 < 0 and value - k >= 0
    while (surd_sign(x - Rational(k), y, t.d) < 0) {
        k -= 1;
    }
    while (surd_sign(x - Rational(k + 1), y, t.d) >= 0) {
        k += 1;
    }
    return k;
}

} // namespace

std::string describe(const RealSpec& spec) {
    std::ostringstream os;
    std::visit(overloaded{
                   [&](const Rational& r) { os << r; },
                   [&](const QuadraticSurd& s) { os << s.a << " + " << s.b << "*sqrt(" << s.d << ")"; },
                   [&](const LogRatio& l) { os << l.coeff << "*log(" << l.num << ")/log(" << l.den << ")"; },
                   [&](const SparseSeries& s) {
                       os << s.coefficient << "*sum " << s.base << "^-t over " << s.exponents.size() << " terms";
                   },
               },
               spec);
    return os.str();
}

std::optional<Rational> exact_value(const RealSpec& spec) {
    return std::visit(overloaded{
                          [](const Rational& r) -> std::optional<Rational> { return r; },
                          [](const QuadraticSurd& s) -> std::optional<Rational> {
                              validate(s);
                              if (s.b.sign() == 0) {
                                  return s.a;
                              }
                              Integer root;
                              if (mpz_root(root.get_mpz_t(), s.d.get_mpz_t(), 2) != 0) {
                                  return s.a + s.b * Rational(root);
                              }
                              return std::nullopt;
                          },
                          [](const LogRatio& l) -> std::optional<Rational> {
                              validate(l);
                              if (auto r = rational_log_ratio(l.num, l.den)) {
                                  return l.coeff * *r;
                              }
                              return std::nullopt;
                          },
                          [](const SparseSeries&) -> std::optional<Rational> { return std::nullopt; },
                      },
                      spec);
}

Interval enclose_at(const RealSpec& spec, int bits) {
    if (auto v = exact_value(spec)) {
        return Interval::point(*v);
    }
    return std::visit(overloaded{
                          [](const Rational& r) { return Interval::point(r); },
                          [bits](const QuadraticSurd& s) {
                              return Interval::point(s.a) + Interval::point(s.b) * sqrt_enclose(Rational(s.d), bits);
                          },
                          [bits](const LogRatio& l) {
                              const Interval q = log_enclose(Rational(l.num), bits) / log_enclose(Rational(l.den), bits);
                              return round_outward(Interval::point(l.coeff) * q, bits + 16);
                          },
                          [](const SparseSeries& s) {
                              validate(s);
                              return sparse_enclosure(s);
                          },
                      },
                      spec);
}

RealEnclosure enclose_real(const RealSpec& spec, const Rational& width_target, const PrecisionPolicy& policy) {
    if (width_target.sign() <= 0) {
        throw InvalidInput("width target must be positive");
    }
    for (int step = 0; step < policy.max_steps; ++step) {
        Interval iv = enclose_at(spec, policy.bits_at(step));
        if (iv.width() <= width_target) {
            return {std::move(iv), spec};
        }
        if (std::holds_alternative<SparseSeries>(spec)) {
            break;  // width is fixed by the materialized prefix
        }
    }
    throw PrecisionError("enclosure of " + describe(spec) + " did not reach width " + width_target.str());
}

RealEnclosure refine(const RealEnclosure& previous, const Rational& width_target, const PrecisionPolicy& policy) {
    RealEnclosure next = enclose_real(previous.source, width_target, policy);
    next.bounds = Interval(std::max(next.lo(), previous.lo()), std::min(next.hi(), previous.hi()));
    return next;
}

Integer floor_power(const RealSpec& lambda, const RealSpec& tau, long n, const PrecisionPolicy& policy) {
    if (n < 1) {
        throw InvalidInput("floor_power needs n >= 1");
    }
    for (int step = 0; step < policy.max_steps; ++step) {
        const int bits = policy.bits_at(step);
        const Interval l = enclose_at(lambda, bits);
        const Interval t = enclose_at(tau, bits);
        if (l.hi.sign() <= 0) {
            throw InvalidInput("floor_power needs lambda > 0");
        }
        if (t.hi <= Rational(1)) {
            throw InvalidInput("floor_power needs tau > 1");
        }
        if (l.lo.sign() <= 0 || t.lo <= Rational(1)) {
            continue;
        }
        const Interval v = round_outward(l * pow(t, n), bits + 32);
        const Integer lo = v.lo.floor();
        if (lo == v.hi.floor()) {
            return lo;
        }
        const auto* surd = std::get_if<QuadraticSurd>(&tau);
        const auto* lam = std::get_if<Rational>(&lambda);
        if (surd && lam) {
            return floor_surd_power(*lam, *surd, n, v);
        }
    }
    throw UndecidableError("floor(lambda * tau^" + std::to_string(n) + ") straddles an integer at the precision cap");
}

int compare(const RealSpec& spec, const Rational& threshold, const PrecisionPolicy& policy) {
    for (int step = 0; step < policy.max_steps; ++step) {
        const Interval v = enclose_at(spec, policy.bits_at(step));
        if (v.lo > threshold) {
            return 1;
        }
        if (v.hi < threshold) {
            return -1;
        }
        if (v.exact()) {
            return 0;
        }
    }
    throw UndecidableError("comparison of " + describe(spec) + " with " + threshold.str() + " undecided");
}

} // namespace cantorlab
