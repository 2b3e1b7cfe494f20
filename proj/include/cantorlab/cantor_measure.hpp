#pragma once

#include "cantorlab/missing_digit_set.hpp"
#include "cantorlab/rational.hpp"

#include <vector>

namespace cantorlab {

/// Normalized self-similar measure of a rational interval: mu(K) = 1 and each
/// level-n basic interval carries (#J)^-n. When radii were only enclosed, lo
/// and hi bound the true value and `exact` is false.
struct CantorMeasureValue {
    Rational lo;
    Rational hi;
    bool exact = true;

    static CantorMeasureValue of(const Rational& v) { return {v, v, true}; }
    const Rational& value() const { return lo; }
};

/// F(x) = mu([0, x]). Unrolls F(x) = #{j < d}/m + [d in J] F(bx - d)/m along
/// the base-b digits of x; the digit stream of a rational is eventually
/// periodic, which closes the recursion as a geometric series.
Rational cantor_cdf(const MissingDigitSet& set, const Rational& x);

CantorMeasureValue cantor_measure(const MissingDigitSet& set, const RatInterval& iv);

/// Sorted, pairwise disjoint closed intervals.
using IntervalUnion = std::vector<RatInterval>;

/// Sorts and merges overlapping or touching intervals.
IntervalUnion merge_intervals(std::vector<RatInterval> ivs);
IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion clip(const IntervalUnion& u, const RatInterval& window);

/// Exact mu of a merged union; OpenMP over the pieces.
Rational union_measure(const MissingDigitSet& set, const IntervalUnion& u);
/// Serial reference kernel.
Rational union_measure_serial(const MissingDigitSet& set, const IntervalUnion& u);

/// Whether the radius-b^-n balls around all p / b^n (0 <= p <= b^n) carry the
/// full mass of `window`.
bool full_cover_check(const MissingDigitSet& set, int n, const RatInterval& window);

} // namespace cantorlab
