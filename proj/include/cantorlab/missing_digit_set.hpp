#pragma once

#include "cantorlab/interval.hpp"
#include "cantorlab/rational.hpp"
#include "cantorlab/real.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cantorlab {

/// K_{J(b)}: reals in [0, 1] with a base-b expansion using only digits in J.
class MissingDigitSet {
public:
    /// Throws InvalidInput unless b >= 3 and 2 <= #J <= b - 1.
    MissingDigitSet(int base, std::vector<int> digits);

    /// Middle-third Cantor set, b = 3, J = {0, 2}.
    static MissingDigitSet middle_third() { return MissingDigitSet(3, {0, 2}); }

    /// Parses "b:d1,d2,...", e.g. "3:0,2".
    static MissingDigitSet parse(const std::string& text);

    int base() const { return base_; }
    const std::vector<int>& digits() const { return digits_; }
    int size() const { return static_cast<int>(digits_.size()); }
    bool allows(int d) const { return d >= 0 && d < base_ && allowed_[static_cast<std::size_t>(d)]; }
    /// #{j in J : j < d}
    int rank_below(int d) const { return rank_[static_cast<std::size_t>(d)]; }

    /// gamma* = log #J / log b.
    RealSpec exponent() const { return LogRatio{Rational(1), size(), base_}; }

    /// True when no two digits of J are consecutive, so distinct basic
    /// intervals of one level never touch.
    bool non_adjacent() const;

    std::string str() const;

    friend bool operator==(const MissingDigitSet& a, const MissingDigitSet& b) {
        return a.base_ == b.base_ && a.digits_ == b.digits_;
    }

private:
    int base_;
    std::vector<int> digits_;
    std::vector<bool> allowed_;
    std::vector<int> rank_;
};

/// Closed interval intersected with [0, 1].
struct RatInterval {
    Rational lo;
    Rational hi;

    /// Clips to [0, 1]; throws InvalidInput when lo > hi or the clipped
    /// interval is empty.
    RatInterval(Rational l, Rational h);
    static RatInterval unit() { return {Rational(0), Rational(1)}; }

    Rational length() const { return hi - lo; }
    friend bool operator==(const RatInterval&, const RatInterval&) = default;
};

enum class Verdict { In, Out, Undetermined };
std::string to_string(Verdict v);

struct MembershipResult {
    Verdict verdict;
    int depth;  // depth used; meaningful for Undetermined
};

/// Exact for rationals: In iff one of the (at most two) expansions uses only
/// digits of J. `depth` is only reported back.
MembershipResult membership(const Rational& x, const MissingDigitSet& set, int depth);

/// For an enclosure: In when every point lies in the level-`depth`
/// approximation of the set, Out when no point does, Undetermined otherwise.
MembershipResult membership(const Interval& x, const MissingDigitSet& set, int depth);

/// Default cap on the number of centers an enumeration may produce.
inline constexpr std::size_t kDefaultCenterBudget = std::size_t{1} << 24;

/// Sorted p with p / b^n in the set (and gcd(p, b^n) = 1 when `coprime`).
std::vector<std::uint64_t> enumerate_centers(const MissingDigitSet& set, int n, bool coprime,
                                             std::size_t budget = kDefaultCenterBudget);
/// Serial reference for the enumeration kernel.
std::vector<std::uint64_t> enumerate_centers_serial(const MissingDigitSet& set, int n, bool coprime,
                                                    std::size_t budget = kDefaultCenterBudget);

/// #{0 <= p <= b^n : p / b^n in the set}, without enumerating. A level-n
/// basic interval contributes its left end when 0 is a digit and its right
/// end when b - 1 is; touching pairs share one.
Integer count_centers(const MissingDigitSet& set, int n);

/// Throws ResourceError when b^n would not fit the 64-bit center encoding.
Integer checked_level_denominator(const MissingDigitSet& set, int n);

} // namespace cantorlab
