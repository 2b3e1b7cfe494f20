#include "cantorlab/digits.hpp"

#include "cantorlab/errors.hpp"

#include <unordered_map>

namespace cantorlab {

int PeriodicExpansion::digit(std::size_t k) const {
    if (k <= prefix.size()) {
        return prefix[k - 1];
    }
    return period[(k - prefix.size() - 1) % period.size()];
}

DigitExpansion PeriodicExpansion::truncate(std::size_t n) const {
    DigitExpansion out;
    out.base = base;
    out.digits.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        out.digits.push_back(digit(k));
    }
    if (period.size() == 1 && period[0] == 0) {
        out.tail = DigitTail::Zeros;
    } else if (period.size() == 1 && period[0] == base - 1) {
        out.tail = DigitTail::RepeatingMax;
    }
    return out;
}

bool is_b_adic(const Rational& x, int base) {
    Integer d = x.den();
    const Integer b = base;
    for (;;) {
        const Integer g = gcd(d, b);
        if (g == 1) {
            return d == 1;
        }
        while (d % g == 0) {
            d /= g;
        }
    }
}

std::vector<PeriodicExpansion> expansions(const Rational& x, int base, std::size_t max_digits) {
    if (base < 2) {
        throw InvalidInput("base must be at least 2");
    }
    if (x.sign() < 0 || x > Rational(1)) {
        throw InvalidInput("expansions are defined on [0, 1]");
    }
    if (x == Rational(1)) {
        return {PeriodicExpansion{base, {}, {base - 1}}};
    }
    if (x.sign() == 0) {
        return {PeriodicExpansion{base, {}, {0}}};
    }
    const Integer den = x.den();
    Integer rem = x.num();
    std::unordered_map<std::string, std::size_t> seen;
    std::vector<int> digits;
    std::size_t cycle_start = 0;
    for (;;) {
        if (rem == 0) {
            PeriodicExpansion terminating{base, digits, {0}};
            std::vector<int> alt = digits;
            // last digit is nonzero because rem was nonzero before it
            alt.back() -= 1;
            PeriodicExpansion repeating{base, std::move(alt), {base - 1}};
            return {std::move(terminating), std::move(repeating)};
        }
        auto [it, inserted] = seen.emplace(rem.get_str(16), digits.size());
        if (!inserted) {
            cycle_start = it->second;
            break;
        }
        if (digits.size() >= max_digits) {
            throw ResourceError("digit expansion period exceeds budget");
        }
        rem *= base;
        const Integer d = rem / den;
        rem -= d * den;
        digits.push_back(static_cast<int>(d.get_si()));
    }
    PeriodicExpansion out{base, {}, {}};
    out.prefix.assign(digits.begin(), digits.begin() + static_cast<long>(cycle_start));
    out.period.assign(digits.begin() + static_cast<long>(cycle_start), digits.end());
    return {std::move(out)};
}

} // namespace cantorlab
