#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nyq/coprime.hpp"
#include "nyq/error.hpp"
#include "nyq/index.hpp"
#include "nyq/matrix.hpp"
#include "nyq/ring.hpp"
#include "nyq/smith_mcmillan.hpp"

namespace nyq {

enum class Stabilizes { Yes, No, Degenerate };
const char* to_string(Stabilizes s) noexcept;

struct Verdict {
    Stabilizes stabilizes = Stabilizes::Degenerate;
    IndexOutcome det_I_minus_CP;
    IndexOutcome det_DP;
    IndexOutcome det_DtildeC;
    std::optional<IndexValue> index_sum;
    std::vector<std::string> notes;
};

/// Combines the three outcomes: degenerate if any is degenerate or uncertified, no if one is not
/// invertible in S or the index sum is not the identity, yes otherwise.
Verdict assemble_verdict(IndexOutcome det_I_minus_CP, IndexOutcome det_DP, IndexOutcome det_DtildeC);

/// a / (b c) from the outcomes of its three pieces.
IndexOutcome quotient_outcome(const IndexOutcome& a, const IndexOutcome& b, const IndexOutcome& c);

/// H(P, C) = [P; I] (I - CP)^{-1} [-C, I]. Throws IllPosedLoop when det(I - CP) = 0.
RationalMatrix closed_loop(const RationalMatrix& P, const RationalMatrix& C);

/// G_P = [N; D] from a right factorization and G~_C = [-N~, D~] from a left one.
template <class E>
std::pair<Matrix<E>, Matrix<E>> stack_matrices(const CoprimeFactorization<E>& rcf_P, const CoprimeFactorization<E>& lcf_C) {
    if (rcf_P.side != Side::Right || lcf_C.side != Side::Left) {
        throw Error(ErrorKind::InvalidFactorization, "expected a right factorization of P and a left one of C");
    }
    return {vstack(rcf_P.N, rcf_P.D), hstack(-lcf_C.N, lcf_C.D)};
}

/// H(P, C) = G_P (G~_C G_P)^{-1} G~_C from factorizations. `inverse` inverts a ring element inside
/// its representation when it can; nullopt propagates when det(G~_C G_P) has no such inverse.
template <class E, class Inverse>
std::optional<Matrix<E>> closed_loop_factored(const CoprimeFactorization<E>& rcf_P, const CoprimeFactorization<E>& lcf_C,
                                              Inverse&& inverse) {
    auto [G, Gt] = stack_matrices(rcf_P, lcf_C);
    Matrix<E> delta = Gt * G;
    std::optional<E> dinv = inverse(det(delta));
    if (!dinv) return std::nullopt;
    return G * (*dinv * adjugate(delta)) * Gt;
}

enum class OracleAnswer { Yes, No, IllPosed };
const char* to_string(OracleAnswer a) noexcept;

/// Stabilization straight from the definition: every entry of H(P, C) lies in R.
template <RingInstance Ring>
    requires std::same_as<typename Ring::Element, RationalFunction>
OracleAnswer direct_stability_oracle(const RationalMatrix& P, const RationalMatrix& C, const Ring& ring) {
    RationalMatrix H;
    try {
        H = closed_loop(P, C);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::IllPosedLoop) return OracleAnswer::IllPosed;
        throw;
    }
    for (const auto& h : H.data())
        if (!ring.is_member(h)) return OracleAnswer::No;
    return OracleAnswer::Yes;
}

namespace detail {

template <RingInstance Ring>
bool is_identity(const Matrix<typename Ring::Element>& M, const Ring& ring) {
    if (!M.is_square()) return false;
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            if (!ring.equal(M(i, j), i == j ? ring.one() : ring.zero())) return false;
    return true;
}

template <RingInstance Ring>
void require_members(const CoprimeFactorization<typename Ring::Element>& f, const Ring& ring, const char* what) {
    for (const auto* M : {&f.N, &f.D, &f.X, &f.Y})
        for (const auto& x : M->data())
            if (!ring.is_member(x)) {
                throw Error(ErrorKind::InvalidFactorization, std::string(what) + " has an entry outside " + ring.name());
            }
}

}  // namespace detail

/// X N + Y D = I (right) or N X + D Y = I (left), with equality decided by the ring.
template <RingInstance Ring>
bool verify_bezout_in(const CoprimeFactorization<typename Ring::Element>& f, const Ring& ring) {
    try {
        auto M = f.side == Side::Right ? f.X * f.N + f.Y * f.D : f.N * f.X + f.D * f.Y;
        return detail::is_identity(M, ring);
    } catch (const Error&) {
        return false;
    }
}

/// Abstract Nyquist decision for rings whose fraction field is the rational functions:
/// det(I - CP), det D_P and det D~_C are indexed directly.
template <RingInstance Ring>
    requires std::same_as<typename Ring::Element, RationalFunction>
Verdict nyquist_verdict(const RationalMatrix& P, const RationalMatrix& C, const RationalFactorization& rcf_P,
                        const RationalFactorization& lcf_C, const Ring& ring) {
    if (rcf_P.side != Side::Right || !verify_bezout(rcf_P, P)) {
        throw Error(ErrorKind::InvalidFactorization, "plant factorization fails P D = N or X N + Y D = I");
    }
    if (lcf_C.side != Side::Left || !verify_bezout(lcf_C, C)) {
        throw Error(ErrorKind::InvalidFactorization, "controller factorization fails D C = N or N X + D Y = I");
    }
    detail::require_members(rcf_P, ring, "plant factorization");
    detail::require_members(lcf_C, ring, "controller factorization");
    const std::size_t m = P.cols();
    RationalFunction d = det(RationalMatrix::identity(m) - C * P);
    if (d.is_zero()) throw Error(ErrorKind::IllPosedLoop, "det(I - CP) vanishes identically");
    Verdict v = assemble_verdict(ring.index(d), ring.index(det(rcf_P.D)), ring.index(det(lcf_C.D)));
    v.notes.insert(v.notes.begin(), "det(I - CP) = " + d.str());
    return v;
}

/// Abstract Nyquist decision from factorizations alone (rings without an explicit fraction field):
/// det(I - CP) = det(G~_C G_P) / (det D~_C det D_P), indexed piecewise.
template <RingInstance Ring>
Verdict nyquist_verdict_factored(const CoprimeFactorization<typename Ring::Element>& rcf_P,
                                 const CoprimeFactorization<typename Ring::Element>& lcf_C, const Ring& ring) {
    if (rcf_P.side != Side::Right || !verify_bezout_in(rcf_P, ring)) {
        throw Error(ErrorKind::InvalidFactorization, "plant factorization fails X N + Y D = I");
    }
    if (lcf_C.side != Side::Left || !verify_bezout_in(lcf_C, ring)) {
        throw Error(ErrorKind::InvalidFactorization, "controller factorization fails N X + D Y = I");
    }
    detail::require_members(rcf_P, ring, "plant factorization");
    detail::require_members(lcf_C, ring, "controller factorization");
    auto [G, Gt] = stack_matrices(rcf_P, lcf_C);
    auto delta = det(Gt * G);
    IndexOutcome dP = ring.index(det(rcf_P.D)), dC = ring.index(det(lcf_C.D));
    return assemble_verdict(quotient_outcome(ring.index(delta), dP, dC), dP, dC);
}

/// C stabilizes P iff G~_C G_P is invertible over R, decided by the ring's own invertibility test
/// on its determinant (nullopt when the ring cannot decide).
template <RingInstance Ring>
std::optional<bool> factored_stability_oracle(const CoprimeFactorization<typename Ring::Element>& rcf_P,
                                              const CoprimeFactorization<typename Ring::Element>& lcf_C,
                                              const Ring& ring) {
    auto [G, Gt] = stack_matrices(rcf_P, lcf_C);
    return ring.invertible_in_R(det(Gt * G));
}

}  // namespace nyq
