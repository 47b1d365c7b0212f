#pragma once

// Random element generators used by the axiom harness and the test suites.

#include <random>

#include "nyq/cd_element.hpp"
#include "nyq/exponential_polynomial.hpp"
#include "nyq/polydisk.hpp"
#include "nyq/rational_function.hpp"

namespace nyq::samplers {

/// Gain k/4 (k = +-1..+-8) times prod (z - a_i) / prod (z - b_j), 0-3 factors each.
/// Zeros a_i on the lattice (Z + iZ)/6 with | |a_i| - 1 | > 0.05 and |a_i| < 2.5; poles b_j on the
/// same lattice with |b_j| > 1.05. Roughly half the draws have a zero inside the disk.
RationalFunction disk_rational(std::mt19937& rng);

/// 1-3 terms c e^{i lambda y}: with probability 0.8 frequencies in {0, 1/2, 1, 3/2, 2} (periodic),
/// otherwise frequencies m + n sqrt(2) (m, n in {0, 1, 2}) with a strictly dominant term.
/// Coefficients uniform in the square [-2, 2]^2; a dominant constant is added with probability 1/2.
ExponentialPolynomial apw_plus(std::mt19937& rng);

/// Atoms c_k at delays {0, 1/2, 1} (atom at 0 of modulus >= 1.5 dominating the others),
/// 0-2 rational terms c/(s+p) or c/(s+p)^2 with p in {1/2, 1, 2, 3}, c in [-4, 4] on the grid 1/2,
/// and with probability 1/5 the cancelled pair c/(s-a) - c e^{a}/(s-a) e^{-s}, a in {1/2, 1}.
CDElement callier_desoer(std::mt19937& rng);

/// Two variables. Numerator: gain times 1-2 factors (a - m), m in {z1, z2, z1 z2, z1 z2^2},
/// a in {1/4, 1/2, 2, 3}, or (2 - z1 - z2/2). Denominator: 1, 3 - z1 z2, or 4 + z1 + z2.
PolyRatio polydisk_rational(std::mt19937& rng);

}  // namespace nyq::samplers
