#pragma once

#include "nyq/matrix.hpp"
#include "nyq/rational_function.hpp"
#include "nyq/smith_mcmillan.hpp"

namespace nyq {

enum class Side { Right, Left };

/// Right: P = N D^{-1} with X N + Y D = I_m.  Left: P = D^{-1} N with N X + D Y = I_p.
template <class E>
struct CoprimeFactorization {
    Side side = Side::Right;
    Matrix<E> N, D, X, Y;
};

using RationalFactorization = CoprimeFactorization<RationalFunction>;

/// Default base point of the stable denominators (z - gamma)^k.
inline const GaussQ kDefaultGamma = GaussQ(2);

/// Right coprime factorization over rational functions without poles in the closed unit disk.
/// Stable inputs factor trivially (N = P, D = I, X = 0, Y = I). Throws InvalidArgument if |gamma| <= 1.
RationalFactorization right_coprime_factorization(const RationalMatrix& P, const GaussQ& gamma = kDefaultGamma,
                                                  double boundary_tol = 1e-9);

/// Left coprime factorization obtained by factoring the transpose on the right.
RationalFactorization left_coprime_factorization(const RationalMatrix& C, const GaussQ& gamma = kDefaultGamma,
                                                 double boundary_tol = 1e-9);

/// Exact Bezout identity only.
bool verify_bezout(const RationalFactorization& f);
/// Exact Bezout identity and P = N D^{-1} (checked as P D = N), resp. D P = N.
bool verify_bezout(const RationalFactorization& f, const RationalMatrix& P);

/// True iff every pole has modulus > 1 + boundary_tol (no poles in the closed disk).
bool rational_in_disk_ring(const RationalFunction& f, double boundary_tol = 1e-9);

}  // namespace nyq
