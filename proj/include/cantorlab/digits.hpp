#pragma once

#include "cantorlab/rational.hpp"

#include <cstddef>
#include <vector>

namespace cantorlab {

enum class DigitTail { Zeros, RepeatingMax, Unknown };

/// Finite digit prefix of a base-b expansion of a number in [0, 1].
struct DigitExpansion {
    int base = 3;
    std::vector<int> digits;
    DigitTail tail = DigitTail::Unknown;
};

/// Exact eventually periodic expansion 0.prefix (period)(period)... in base b.
struct PeriodicExpansion {
    int base = 3;
    std::vector<int> prefix;
    std::vector<int> period;

    /// Digit at 1-based position k.
    int digit(std::size_t k) const;
    DigitExpansion truncate(std::size_t n) const;
};

/// All base-b expansions of x in [0, 1]: two for b-adic rationals (terminating
/// and (b-1)-repeating, when both exist in [0, 1]), one otherwise. Throws
/// ResourceError when the pre-period plus period exceeds `max_digits`.
std::vector<PeriodicExpansion> expansions(const Rational& x, int base, std::size_t max_digits = 1u << 22);

/// True if x = p / base^n for some integers p, n >= 0.
bool is_b_adic(const Rational& x, int base);

} // namespace cantorlab
