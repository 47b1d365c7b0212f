#include "doctest.h"

#include <cmath>
#include <numbers>

#include "nyq/cd_element.hpp"
#include "nyq/coprime.hpp"
#include "nyq/disk_ring.hpp"
#include "nyq/error.hpp"
#include "nyq/feedback.hpp"
#include "support.hpp"

using namespace nyq;

namespace {

const Poly z = Poly::monomial(1);
Poly c(long a, long b = 1) { return Poly(GaussQ(mpq_class(a, b))); }
RationalFunction rf(const Poly& n, const Poly& d = Poly(1)) { return RationalFunction(n, d); }
RationalMatrix scalar(const RationalFunction& f) { return RationalMatrix::scalar(f); }
long long int_index(const IndexOutcome& o) { return std::get<IntIndex>(*o.index).value; }

Verdict disk_verdict(const RationalMatrix& P, const RationalMatrix& C) {
    return nyquist_verdict(P, C, right_coprime_factorization(P), left_coprime_factorization(C), DiskRing{});
}

const RationalFunction p_half = rf(c(1), z - c(1, 2));

}  // namespace

TEST_CASE("closed_loop examples") {
    RationalMatrix H = closed_loop(scalar(0), scalar(0));
    CHECK(H == RationalMatrix{{0, 0}, {0, 1}});
    H = closed_loop(scalar(p_half), scalar(1));
    for (const auto& h : H.data()) CHECK(h.den() == z - c(3, 2));
    CHECK(H(0, 1) == rf(c(1), z - c(3, 2)));
    try {
        closed_loop(scalar(p_half), scalar(rf(z - c(1, 2))));
        FAIL("expected an ill-posed loop");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IllPosedLoop);
    }
    CHECK_THROWS_AS(closed_loop(RationalMatrix(2, 1), RationalMatrix(2, 1)), Error);
}

TEST_CASE("direct_stability_oracle examples") {
    DiskRing ring;
    CHECK(direct_stability_oracle(scalar(p_half), scalar(1), ring) == OracleAnswer::Yes);
    CHECK(direct_stability_oracle(scalar(p_half), scalar(rf(c(1, 5))), ring) == OracleAnswer::No);
    CHECK(direct_stability_oracle(scalar(rf(c(1), z - c(3))), scalar(0), ring) == OracleAnswer::Yes);
    CHECK(direct_stability_oracle(scalar(p_half), scalar(rf(z - c(1, 2))), ring) == OracleAnswer::IllPosed);
}

TEST_CASE("stack_matrices examples") {
    auto rcf = right_coprime_factorization(scalar(p_half));
    auto [G, Gt] = stack_matrices(rcf, left_coprime_factorization(scalar(0)));
    CHECK(G == RationalMatrix{{rf(c(1), z - c(2))}, {rf(z - c(1, 2), z - c(2))}});
    CHECK(Gt == RationalMatrix{{0, 1}});
    RationalMatrix P = scalar(rf(c(1), z - c(3)));
    auto [G2, Gt2] = stack_matrices(right_coprime_factorization(P), left_coprime_factorization(scalar(0)));
    CHECK(G2 == vstack(P, RationalMatrix::identity(1)));
    CHECK_THROWS_AS(stack_matrices(rcf, rcf), Error);
}

TEST_CASE("nyquist_verdict examples") {
    Verdict v = disk_verdict(scalar(p_half), scalar(1));
    CHECK(v.stabilizes == Stabilizes::Yes);
    CHECK(int_index(v.det_I_minus_CP) == -1);
    CHECK(int_index(v.det_DP) == 1);
    CHECK(int_index(v.det_DtildeC) == 0);
    CHECK(index_is_identity(*v.index_sum));

    v = disk_verdict(scalar(p_half), scalar(rf(c(1, 5))));
    CHECK(v.stabilizes == Stabilizes::No);
    CHECK(std::get<IntIndex>(*v.index_sum).value == 1);

    v = disk_verdict(scalar(0), scalar(0));
    CHECK(v.stabilizes == Stabilizes::Yes);

    v = disk_verdict(scalar(p_half), scalar(rf(c(1, 2))));
    CHECK(v.stabilizes == Stabilizes::Degenerate);
    CHECK_FALSE(v.index_sum.has_value());

    // tampered witnesses
    auto rcf = right_coprime_factorization(scalar(p_half));
    rcf.X = RationalMatrix{{0}};
    CHECK_THROWS_AS(nyquist_verdict(scalar(p_half), scalar(1), rcf, left_coprime_factorization(scalar(1)), DiskRing{}),
                    Error);
}

TEST_CASE("gain sweep") {
    const std::pair<mpq_class, Stabilizes> expected[] = {{mpq_class(1, 5), Stabilizes::No},
                                                         {mpq_class(2, 5), Stabilizes::No},
                                                         {mpq_class(3, 5), Stabilizes::Yes},
                                                         {mpq_class(1), Stabilizes::Yes}};
    for (const auto& [k, want] : expected) {
        CHECK(disk_verdict(scalar(p_half), scalar(rf(Poly(GaussQ(k))))).stabilizes == want);
    }
}

TEST_CASE("closed-loop identities and oracle agreement on random instances") {
    std::mt19937 rng(99);
    DiskRing ring;
    int decided = 0;
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = trial % 3 == 0 ? 2 : 1;
        RationalMatrix P = testing::random_rational_matrix(rng, n, n, 2);
        RationalMatrix C = testing::random_rational_matrix(rng, n, n, 1);
        RationalMatrix I = RationalMatrix::identity(n);
        if (det(I - C * P).is_zero()) continue;
        auto rcf = right_coprime_factorization(P);
        auto lcf = left_coprime_factorization(C);
        auto [G, Gt] = stack_matrices(rcf, lcf);
        CHECK(Gt * G == lcf.D * (I - C * P) * rcf.D);
        CHECK(det(Gt * G) == det(lcf.D) * det(I - C * P) * det(rcf.D));
        Verdict v = nyquist_verdict(P, C, rcf, lcf, ring);
        if (v.stabilizes == Stabilizes::Degenerate) continue;
        ++decided;
        OracleAnswer o = direct_stability_oracle(P, C, ring);
        CHECK((v.stabilizes == Stabilizes::Yes) == (o == OracleAnswer::Yes));
        // the same decision from the factorizations alone
        Verdict f = nyquist_verdict_factored(rcf, lcf, ring);
        CHECK(f.stabilizes == v.stabilizes);
        CHECK(factored_stability_oracle(rcf, lcf, ring) == (o == OracleAnswer::Yes));
    }
    CHECK(decided > 50);
}

TEST_CASE("verdict is invariant under a unimodular change of plant factorization") {
    std::mt19937 rng(17);
    DiskRing ring;
    for (int trial = 0; trial < 20; ++trial) {
        RationalMatrix P = testing::random_rational_matrix(rng, 2, 2, 1);
        RationalMatrix C = testing::random_rational_matrix(rng, 2, 2, 1);
        if (det(RationalMatrix::identity(2) - C * P).is_zero()) continue;
        auto rcf = right_coprime_factorization(P);
        auto lcf = left_coprime_factorization(C);
        // U = [[u, r], [0, 1]] with u a unit of R, r in R
        RationalFunction u = rf(z - c(3), z - c(5, 2)), r = rf(c(1), z - c(4));
        RationalMatrix U{{u, r}, {0, 1}};
        RationalMatrix Uinv{{u.inverse(), -r * u.inverse()}, {0, 1}};
        REQUIRE(U * Uinv == RationalMatrix::identity(2));
        RationalFactorization alt{Side::Right, rcf.N * U, rcf.D * U, Uinv * rcf.X, Uinv * rcf.Y};
        REQUIRE(verify_bezout(alt, P));
        Verdict a = nyquist_verdict(P, C, rcf, lcf, ring), b = nyquist_verdict(P, C, alt, lcf, ring);
        CHECK(a.stabilizes == b.stabilizes);
        if (a.index_sum && b.index_sum) CHECK(index_equal(*a.index_sum, *b.index_sum));
    }
}

TEST_CASE("delay plant over the Callier-Desoer ring") {
    const Poly s = Poly::monomial(1);
    const double e = std::numbers::e;
    CDElement N = CDElement::rational(rf(c(1), s + c(1)), 1);
    CDElement D = CDElement::rational(rf(s - c(1), s + c(1)));
    CDElement X(2.0 * e);
    CDElement Y = CDElement(1) + CDElement::rational(rf(c(2), s - c(1))) -
                  CDElement::rational(rf(Poly(GaussQ::from_double(2.0 * e)), s - c(1)), 1);
    CDRing ring;
    REQUIRE(cd_membership(Y));
    CHECK(cd_grid_distance(X * N + Y * D, CDElement(1)) < 1e-9);
    // P = e^{-s} / (s - 1) sampled against N / D
    for (double y : {-3.0, 0.5, 7.0}) {
        std::complex<double> sv(0.0, y);
        CHECK(std::abs(N.eval(sv) / D.eval(sv) - std::exp(-sv) / (sv - 1.0)) < 1e-12);
    }
    CoprimeFactorization<CDElement> rcf{Side::Right, Matrix<CDElement>::scalar(N), Matrix<CDElement>::scalar(D),
                                        Matrix<CDElement>::scalar(X), Matrix<CDElement>::scalar(Y)};
    auto invert = [](const CDElement& x) { return x.inverse_if_delay_free(); };
    auto all_members = [&](const Matrix<CDElement>& H) {
        return std::all_of(H.data().begin(), H.data().end(), [](const CDElement& h) { return cd_membership(h); });
    };

    SUBCASE("controller built from the witnesses stabilizes") {
        CoprimeFactorization<CDElement> lcf{Side::Left, Matrix<CDElement>::scalar(-X), Matrix<CDElement>::scalar(Y),
                                            Matrix<CDElement>::scalar(-N), Matrix<CDElement>::scalar(D)};
        Verdict v = nyquist_verdict_factored(rcf, lcf, ring);
        CHECK(v.stabilizes == Stabilizes::Yes);
        auto H = closed_loop_factored(rcf, lcf, invert);
        REQUIRE(H.has_value());
        CHECK(all_members(*H));
        CHECK(factored_stability_oracle(rcf, lcf, ring) == true);
    }
    SUBCASE("no controller leaves the loop unstable") {
        CoprimeFactorization<CDElement> lcf{Side::Left, Matrix<CDElement>::scalar(0), Matrix<CDElement>::scalar(1),
                                            Matrix<CDElement>::scalar(0), Matrix<CDElement>::scalar(1)};
        Verdict v = nyquist_verdict_factored(rcf, lcf, ring);
        CHECK(v.stabilizes == Stabilizes::No);
        CHECK(std::get<PairIndex>(*v.index_sum).integer == -1);
        auto H = closed_loop_factored(rcf, lcf, invert);
        REQUIRE(H.has_value());
        CHECK_FALSE(all_members(*H));
    }
    SUBCASE("constant gains agree with the half-plane zero count") {
        for (int k : {-3, -2, 2, 3}) {
            CoprimeFactorization<CDElement> lcf{Side::Left, Matrix<CDElement>::scalar(CDElement(k)),
                                                Matrix<CDElement>::scalar(1), Matrix<CDElement>::scalar(0),
                                                Matrix<CDElement>::scalar(1)};
            Verdict v = nyquist_verdict_factored(rcf, lcf, ring);
            auto oracle = factored_stability_oracle(rcf, lcf, ring);
            REQUIRE(oracle.has_value());
            CHECK((v.stabilizes == Stabilizes::Yes) == *oracle);
        }
    }
}
