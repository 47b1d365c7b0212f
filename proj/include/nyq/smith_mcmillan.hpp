#pragma once

#include <utility>
#include <vector>

#include "nyq/matrix.hpp"
#include "nyq/poly.hpp"
#include "nyq/rational_function.hpp"

namespace nyq {

using PolyMatrix = Matrix<Poly>;
using RationalMatrix = Matrix<RationalFunction>;

/// A = U * S * V with U, V unimodular and S diagonal (invariant factors, monic, each dividing the next).
/// The inverses of U and V are tracked alongside so callers never invert a polynomial matrix.
struct SmithForm {
    PolyMatrix U, U_inv;
    std::vector<Poly> invariants;  // length min(rows, cols); zeros after the rank
    PolyMatrix V, V_inv;
};

SmithForm smith_form(const PolyMatrix& A);

/// M = U * diag(e_i / psi_i) * V, e_i | e_{i+1}, psi_{i+1} | psi_i, gcd(e_i, psi_i) = 1.
/// Rank-deficient positions carry (0, 1).
struct SmithMcMillan {
    PolyMatrix U, U_inv;
    std::vector<std::pair<Poly, Poly>> diagonal;
    PolyMatrix V, V_inv;
    std::size_t rank = 0;

    /// The p x m middle factor.
    RationalMatrix sigma(std::size_t rows, std::size_t cols) const;
};

SmithMcMillan smith_mcmillan(const RationalMatrix& M);

RationalMatrix to_rational(const PolyMatrix& m);

}  // namespace nyq
