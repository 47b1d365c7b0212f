#pragma once

#include <complex>
#include <vector>

#include "nyq/poly.hpp"

namespace nyq {

struct Root {
    std::complex<double> value;
    int multiplicity = 1;
};

/// Roots of p with multiplicities taken from the exact square-free decomposition.
/// Each square-free factor is solved through its companion matrix and polished by Newton
/// steps in extended precision. Throws InvalidArgument for constant p.
std::vector<Root> poly_roots(const Poly& p);

/// Roots of a floating polynomial (ascending coefficients, exact zeros trimmed from the top).
/// Companion eigenvalues only; used where coefficients are not exact.
std::vector<std::complex<double>> numeric_roots(std::vector<std::complex<double>> coeffs);

/// Number of roots (with multiplicity) strictly inside the circle |z| = radius.
/// Returns -1 when a root lies within tol of the circle.
int count_roots_inside(const std::vector<Root>& roots, double radius, double tol);

}  // namespace nyq
