#pragma once

#include "cantorlab/interval.hpp"
#include "cantorlab/rational.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cantorlab {

/// a + b * sqrt(d)
struct QuadraticSurd {
    Rational a;
    Rational b;
    Integer d;
};

/// coeff * log(num) / log(den)
struct LogRatio {
    Rational coeff{1};
    Integer num;
    Integer den;
};

/// coefficient * sum_i base^-exponents[i], exponents strictly increasing.
/// When `lookahead` holds the next exponent, the remainder is bounded using
/// it; otherwise only exponents[last] + 1 is assumed.
struct SparseSeries {
    int base = 3;
    int coefficient = 2;
    std::vector<long> exponents;
    std::optional<long> lookahead;
};

using RealSpec = std::variant<Rational, QuadraticSurd, LogRatio, SparseSeries>;

/// Short human-readable descriptor ("sqrt(5)", "log 2/log 3", ...).
std::string describe(const RealSpec& spec);

struct PrecisionPolicy {
    int start_bits = 64;
    int max_steps = 16;

    int bits_at(int step) const { return start_bits << step; }
};

struct RealEnclosure {
    Interval bounds;
    RealSpec source;

    const Rational& lo() const { return bounds.lo; }
    const Rational& hi() const { return bounds.hi; }
};

/// Enclosure at a fixed working precision. Rational and exact cases come
/// back degenerate.
Interval enclose_at(const RealSpec& spec, int bits);

/// Escalates precision (doubling) until hi - lo <= width_target. Throws
/// PrecisionError when the policy's step cap is reached, DomainError for
/// ill-defined specs.
RealEnclosure enclose_real(const RealSpec& spec, const Rational& width_target,
                           const PrecisionPolicy& policy = {});

/// New enclosure of the same value, nested inside `previous`.
RealEnclosure refine(const RealEnclosure& previous, const Rational& width_target,
                     const PrecisionPolicy& policy = {});

/// Exact value when the spec denotes a rational (rationals, perfect-square
/// surds, log ratios of powers of a common base).
std::optional<Rational> exact_value(const RealSpec& spec);

/// floor(lambda * tau^n), certified. Throws UndecidableError when the cap is hit.
Integer floor_power(const RealSpec& lambda, const RealSpec& tau, long n,
                    const PrecisionPolicy& policy = {});

/// Certified sign of (value - threshold); escalates like floor_power.
int compare(const RealSpec& spec, const Rational& threshold, const PrecisionPolicy& policy = {});

} // namespace cantorlab
