#pragma once

#include "cantorlab/rational.hpp"

namespace cantorlab::calibration {

// Recorded by `cantorlab-calibrate` for the middle-third set, window [0, 1],
// coprime layers. Regenerate with that tool if the kernels change.

/// max rho_{m,n} over t0 < m < n <= 10, psi = r^-2 and r^-3.
inline const Rational c_fix{1};

/// mu(A*_n) / ((psi(3^n) 3^n)^gamma mu(B)) for psi = r^-tau,
/// tau in {3/2, 2, 3}, t0 < n <= 12. The low end brackets 1/sqrt 2 from below.
inline const Rational envelope_lo{Integer(7071), Integer(10000)};
inline const Rational envelope_hi{1};

} // namespace cantorlab::calibration
