#include "nyq/coprime.hpp"

#include <cmath>

#include "nyq/error.hpp"
#include "nyq/roots.hpp"

namespace nyq {

bool rational_in_disk_ring(const RationalFunction& f, double boundary_tol) {
    if (f.den().degree() <= 0) return true;
    for (const auto& r : poly_roots(f.den()))
        if (std::abs(r.value) <= 1.0 + boundary_tol) return false;
    return true;
}

namespace {

bool all_in_ring(const RationalMatrix& m, double tol) {
    for (const auto& f : m.data())
        if (!rational_in_disk_ring(f, tol)) return false;
    return true;
}

// x e + y psi = target, with x reduced modulo psi (or y modulo e when psi is constant).
std::pair<Poly, Poly> scaled_bezout(const Poly& e, const Poly& psi, const Poly& target) {
    if (e.is_zero()) return {Poly(), exact_div(target, psi)};
    Bezout bz = extended_gcd(e, psi);
    if (bz.g.degree() != 0) throw Error(ErrorKind::InvalidArgument, "Smith-McMillan pair not coprime");
    if (psi.degree() > 0) {
        Poly x = divmod(bz.s * target, psi).second;
        Poly y = exact_div(target - x * e, psi);
        return {x, y};
    }
    if (e.degree() > 0) {
        Poly y = divmod(bz.t * target, e).second;
        Poly x = exact_div(target - y * psi, e);
        return {x, y};
    }
    // both constant
    return {Poly(), exact_div(target, psi)};
}

// Best rational approximation with denominator <= max_den (continued fractions).
mpq_class nearest_rational(double x, long max_den) {
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double r = x;
    for (int it = 0; it < 64; ++it) {
        double a = std::floor(r);
        if (std::abs(a) > 1e15) break;
        long ai = static_cast<long>(a);
        long q2 = ai * q1 + q0;
        if (q2 > max_den) break;
        long p2 = ai * p1 + p0;
        p0 = p1, q0 = q1, p1 = p2, q1 = q2;
        if (std::abs(static_cast<double>(p1) / q1 - x) <= 1e-13 * std::max(1.0, std::abs(x))) break;
        if (r == a) break;
        r = 1.0 / (r - a);
    }
    if (q1 == 0) return mpq_class(0);
    return mpq_class(p1, q1);
}

// d = s * u exactly; s gathers the Gaussian-rational roots of d outside the closed disk (units of the
// ring), u keeps everything else. Roots are recovered numerically and kept only if exact.
std::pair<Poly, Poly> split_stable_roots(const Poly& d, double tol) {
    Poly s(1), u = d;
    if (d.degree() <= 0) return {s, u};
    for (const auto& [f, mult] : square_free(d)) {
        if (f.degree() <= 0) continue;
        for (const auto& r : poly_roots(f)) {
            if (std::abs(r.value) <= 1.0 + tol) continue;
            GaussQ c(nearest_rational(r.value.real(), 1L << 24), nearest_rational(r.value.imag(), 1L << 24));
            if (!f.eval(c).is_zero()) continue;
            Poly lin = Poly::linear(c).pow(static_cast<unsigned>(mult));
            u = exact_div(u, lin);
            s *= lin;
        }
    }
    return {s, u};
}

RationalFactorization smith_factorization(const RationalMatrix& P, const GaussQ& gamma, double boundary_tol) {
    const std::size_t p = P.rows(), m = P.cols();
    if (all_in_ring(P, boundary_tol)) {
        return {Side::Right, P, RationalMatrix::identity(m), RationalMatrix(m, p), RationalMatrix::identity(m)};
    }
    SmithMcMillan sm = smith_mcmillan(P);
    const Poly base = Poly::linear(gamma);

    RationalMatrix E(p, m), Psi(m, m), Lambda_inv(m, m), Xh(m, p), Yh(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        Poly e = i < sm.diagonal.size() ? sm.diagonal[i].first : Poly();
        Poly psi = i < sm.diagonal.size() ? sm.diagonal[i].second : Poly(1);
        int k = std::max(e.is_zero() ? 0 : e.degree(), psi.degree());
        Poly target = base.pow(static_cast<unsigned>(k));
        auto [x, y] = scaled_bezout(e, psi, target);
        if (i < p) {
            E(i, i) = RationalFunction(e);
            Xh(i, i) = RationalFunction(x);
        }
        Psi(i, i) = RationalFunction(psi);
        Yh(i, i) = RationalFunction(y);
        Lambda_inv(i, i) = RationalFunction(Poly(1), target);
    }
    RationalMatrix N = to_rational(sm.U) * E * Lambda_inv;
    RationalMatrix D = to_rational(sm.V_inv) * Psi * Lambda_inv;
    RationalMatrix X = Xh * to_rational(sm.U_inv);
    RationalMatrix Y = Yh * to_rational(sm.V);
    return {Side::Right, std::move(N), std::move(D), std::move(X), std::move(Y)};
}

}  // namespace

// Stable poles are units, so they are cleared first: with P s = Q + M (Q polynomial, M having only the
// remaining poles) a factorization of the small M lifts to one of P. Keeps the Smith form small.
RationalFactorization right_coprime_factorization(const RationalMatrix& P, const GaussQ& gamma, double boundary_tol) {
    if (!(gamma.norm() > 1)) throw Error(ErrorKind::InvalidArgument, "base point gamma must satisfy |gamma| > 1");
    const std::size_t p = P.rows(), m = P.cols();
    if (p == 0 || m == 0) throw Error(ErrorKind::DimensionMismatch, "empty plant matrix");
    if (all_in_ring(P, boundary_tol)) return smith_factorization(P, gamma, boundary_tol);

    Poly lcm(1);
    for (const auto& f : P.data()) lcm = exact_div(lcm * f.den(), poly_gcd(lcm, f.den()));
    auto [s, u] = split_stable_roots(lcm, boundary_tol);
    if (s.degree() <= 0) return smith_factorization(P, gamma, boundary_tol);

    RationalMatrix M(p, m), Q(p, m);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const RationalFunction& f = P(i, j);
            auto [q, r] = divmod(exact_div(f.num() * s * u, f.den()), u);
            M(i, j) = RationalFunction(r, u);
            Q(i, j) = RationalFunction(q);
        }
    RationalFactorization f = smith_factorization(M, gamma, boundary_tol);
    const RationalFunction g(Poly::linear(gamma).pow(static_cast<unsigned>(s.degree())));
    const RationalFunction w = RationalFunction(s) / g;
    RationalMatrix N = g.inverse() * (f.N + Q * f.D);
    RationalMatrix Y = w.inverse() * (f.Y - f.X * Q);
    return {Side::Right, std::move(N), w * f.D, g * f.X, std::move(Y)};
}

RationalFactorization left_coprime_factorization(const RationalMatrix& C, const GaussQ& gamma, double boundary_tol) {
    RationalFactorization r = right_coprime_factorization(C.transpose(), gamma, boundary_tol);
    return {Side::Left, r.N.transpose(), r.D.transpose(), r.X.transpose(), r.Y.transpose()};
}

namespace {

bool is_identity(const RationalMatrix& m) {
    if (!m.is_square()) return false;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!(m(r, c) == RationalFunction(r == c ? 1 : 0))) return false;
    return true;
}

bool equal(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && a.data() == b.data();
}

}  // namespace

bool verify_bezout(const RationalFactorization& f) {
    try {
        if (f.side == Side::Right) return is_identity(f.X * f.N + f.Y * f.D);
        return is_identity(f.N * f.X + f.D * f.Y);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::DimensionMismatch) return false;
        throw;
    }
}

bool verify_bezout(const RationalFactorization& f, const RationalMatrix& P) {
    if (!verify_bezout(f)) return false;
    try {
        if (f.side == Side::Right) return equal(P * f.D, f.N);
        return equal(f.D * P, f.N);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::DimensionMismatch) return false;
        throw;
    }
}

}  // namespace nyq
