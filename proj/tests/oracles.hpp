#pragma once

// Reference computations written independently of the library kernels.

#include "cantorlab/missing_digit_set.hpp"
#include "cantorlab/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using cantorlab::Integer;
using cantorlab::MissingDigitSet;
using cantorlab::Rational;

/// mu([a, c]) by counting level-L basic intervals of the set inside [a, c].
/// Exact when a and c are multiples of b^-L (the measure has no atoms).
Rational cell_count_measure(const MissingDigitSet& set, const Rational& a, const Rational& c, int level);

/// F(x) = mu([0, x]) from the linear system F(y) = r(d)/m + [d in J] F(by - d)/m
/// over the finite orbit of x under y -> by mod 1.
Rational orbit_cdf(const MissingDigitSet& set, const Rational& x);

/// mu of a union of closed intervals through orbit_cdf.
Rational orbit_union_measure(const MissingDigitSet& set, std::vector<std::pair<Rational, Rational>> ivs);

/// [0; a_1, ..., a_N] evaluated from the back.
Rational evaluate_cf(const std::vector<Integer>& quotients);

/// Level-L cells [k, k+1] b^-L of the set that meet some closed ball
/// B(p / b^n, b^-(tau n)) with p / b^n in the set, by direct comparison.
std::size_t brute_box_count(const MissingDigitSet& set, int n, int level, bool coprime);

/// Uniform rational in [0, 1] with denominator den.
Rational random_rational(std::mt19937_64& rng, const Integer& den);

} // namespace oracle
