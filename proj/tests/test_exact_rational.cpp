#include "doctest.h"

#include <algorithm>

#include "nyq/coprime.hpp"
#include "nyq/error.hpp"
#include "nyq/roots.hpp"
#include "nyq/smith_mcmillan.hpp"
#include "support.hpp"

using namespace nyq;

namespace {

const Poly z = Poly::monomial(1);

GaussQ q(long a, long b = 1) { return GaussQ(mpq_class(a, b)); }
Poly c(long a, long b = 1) { return Poly(q(a, b)); }
RationalFunction rf(const Poly& n, const Poly& d = Poly(1)) { return RationalFunction(n, d); }

bool is_constant_nonzero(const Poly& p) { return p.degree() == 0; }

}  // namespace

TEST_CASE("gaussian rational parsing") {
    CHECK(parse_gauss("1/2") == q(1, 2));
    CHECK(parse_gauss("-3") == q(-3));
    CHECK(parse_gauss("0.25") == q(1, 4));
    CHECK(parse_gauss("1/2+3/4 i") == GaussQ(mpq_class(1, 2), mpq_class(3, 4)));
    CHECK(parse_gauss("1/2-i") == GaussQ(mpq_class(1, 2), mpq_class(-1)));
    CHECK(parse_gauss("-i") == GaussQ(mpq_class(0), mpq_class(-1)));
    CHECK(parse_gauss("2e-1") == q(1, 5));
    CHECK_THROWS_AS(parse_gauss("1/0"), Error);
    CHECK_THROWS_AS(parse_gauss("abc"), Error);
    CHECK(parse_gauss(GaussQ(mpq_class(-1, 3), mpq_class(2, 7)).str()) == GaussQ(mpq_class(-1, 3), mpq_class(2, 7)));
}

TEST_CASE("poly_gcd") {
    CHECK(poly_gcd(z * z - c(1), z - c(1)) == z - c(1));
    CHECK(poly_gcd(z - c(2), z - c(3)) == Poly(1));
    Poly h = z - c(1, 2);
    Poly g = poly_gcd(h * h, h * (z - c(3)));
    CHECK(g == h);
    // exact division check
    CHECK(divmod(h * h, g).second.is_zero());
    CHECK(divmod(h * (z - c(3)), g).second.is_zero());
    CHECK_THROWS_AS(poly_gcd(Poly(), Poly()), Error);
}

TEST_CASE("extended gcd and square-free decomposition") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Poly a = testing::random_poly(rng, 3), b = testing::random_poly(rng, 2);
        Bezout bz = extended_gcd(a, b);
        CHECK(bz.s * a + bz.t * b == bz.g);
        CHECK(bz.g == poly_gcd(a, b));
    }
    Poly p = (z - c(2)).pow(3) * (z + c(1, 3)) * (z * z + c(1)).pow(2);
    auto sf = square_free(p);
    REQUIRE(sf.size() == 3);
    CHECK(sf[0].first == z + c(1, 3));
    CHECK(sf[0].second == 1);
    CHECK(sf[1].first == z * z + c(1));
    CHECK(sf[2].first == z - c(2));
    CHECK(sf[2].second == 3);
}

TEST_CASE("poly_roots") {
    auto r1 = poly_roots(z * z - c(1, 4));
    REQUIRE(r1.size() == 2);
    std::vector<double> re{r1[0].value.real(), r1[1].value.real()};
    std::sort(re.begin(), re.end());
    CHECK(re[0] == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(re[1] == doctest::Approx(0.5).epsilon(1e-14));

    auto r2 = poly_roots((z - c(2)).pow(3));
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].multiplicity == 3);
    CHECK(std::abs(r2[0].value - 2.0) < 1e-14);

    // bisection oracle on [1, 2] for the real root of z^3 - z - 1
    auto f = [](double x) { return x * x * x - x - 1.0; };
    double lo = 1.0, hi = 2.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (f(mid) > 0 ? hi : lo) = mid;
    }
    auto r3 = poly_roots(z.pow(3) - z - c(1));
    REQUIRE(r3.size() == 3);
    int real_roots = 0;
    for (const auto& r : r3) {
        if (std::abs(r.value.imag()) < 1e-12) {
            ++real_roots;
            CHECK(r.value.real() == doctest::Approx(lo).epsilon(1e-13));
        }
    }
    CHECK(real_roots == 1);
    CHECK(lo == doctest::Approx(1.3247).epsilon(1e-4));

    CHECK_THROWS_AS(poly_roots(c(5)), Error);
}

TEST_CASE("rational function normalization") {
    RationalFunction f(c(2) * (z - c(1)) * (z + c(3)), c(4) * (z - c(1)));
    CHECK(f.num() == (z + c(3)) * c(1, 2));
    CHECK(f.den() == Poly(1));
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        Poly n = testing::random_poly(rng, 3), d = testing::random_poly(rng, 3);
        Poly common = testing::random_poly(rng, 1, true);
        RationalFunction g(n * common, d * common);
        RationalFunction again(g.num(), g.den());
        CHECK(again == g);
        CHECK(g.den().leading() == GaussQ(1));
        CHECK(poly_gcd(g.num().is_zero() ? Poly(1) : g.num(), g.den()).degree() == 0);
    }
    CHECK_THROWS_AS(RationalFunction(z, Poly()), Error);
}

TEST_CASE("det_rational") {
    CHECK(det(RationalMatrix::identity(2)) == RationalFunction(1));
    RationalFunction f = rf(z, z - c(1, 2)), g = rf(c(3), z * z + c(2));
    CHECK(det(RationalMatrix{{f, RationalFunction(0)}, {RationalFunction(0), g}}) == f * g);

    RationalMatrix M{{RationalFunction(1), rf(c(1), z - c(2))}, {RationalFunction(z), RationalFunction(1)}};
    RationalFunction d = det(M);
    CHECK(d == rf(c(-2), z - c(2)));
    // cofactor-expansion oracle at sample points
    std::mt19937 rng(11);
    for (int k = 0; k < 5; ++k) {
        GaussQ pt(testing::small_rational(rng), testing::small_rational(rng));
        if (pt == q(2)) continue;
        GaussQ expect = M(0, 0).eval(pt) * M(1, 1).eval(pt) - M(0, 1).eval(pt) * M(1, 0).eval(pt);
        CHECK(d.eval(pt) == expect);
    }
    CHECK_THROWS_AS(det(RationalMatrix(2, 3)), Error);
}

TEST_CASE("det is multiplicative on random matrices") {
    std::mt19937 rng(5);
    auto random_entry = [&] { return rf(testing::random_poly(rng, 1), testing::random_poly(rng, 1, true)); };
    for (int trial = 0; trial < 5; ++trial) {
        RationalMatrix A(2, 2), B(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                A(i, j) = random_entry();
                B(i, j) = random_entry();
            }
        CHECK(det(A * B) == det(A) * det(B));
    }
}

TEST_CASE("smith_mcmillan") {
    SUBCASE("scalar") {
        RationalFunction p = rf(c(3) * (z - c(1)), z * z - c(1, 4));
        auto sm = smith_mcmillan(RationalMatrix::scalar(p));
        REQUIRE(sm.diagonal.size() == 1);
        CHECK(sm.diagonal[0].first == z - c(1));
        CHECK(sm.diagonal[0].second == z * z - c(1, 4));
        CHECK(to_rational(sm.U) * sm.sigma(1, 1) * to_rational(sm.V) == RationalMatrix::scalar(p));
    }
    SUBCASE("diagonal input") {
        RationalMatrix M{{rf(c(1), z - c(1, 2)), RationalFunction(0)}, {RationalFunction(0), RationalFunction(z)}};
        auto sm = smith_mcmillan(M);
        CHECK(sm.rank == 2);
        CHECK(sm.diagonal[0].first == Poly(1));
        CHECK(sm.diagonal[0].second == z - c(1, 2));
        CHECK(sm.diagonal[1].first == z);
        CHECK(sm.diagonal[1].second == Poly(1));
        CHECK(to_rational(sm.U) * sm.sigma(2, 2) * to_rational(sm.V) == M);
    }
    SUBCASE("random round trip") {
        std::mt19937 rng(17);
        for (int trial = 0; trial < 6; ++trial) {
            std::size_t rows = 1 + trial % 2, cols = 2 - (trial / 3) % 2;
            RationalMatrix M(rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    M(i, j) = rf(testing::random_poly(rng, 2), testing::random_poly(rng, 2, true));
            auto sm = smith_mcmillan(M);
            CHECK(to_rational(sm.U) * sm.sigma(rows, cols) * to_rational(sm.V) == M);
            CHECK(is_constant_nonzero(det(sm.U)));
            CHECK(is_constant_nonzero(det(sm.V)));
            CHECK(sm.U * sm.U_inv == PolyMatrix::identity(rows));
            CHECK(sm.V * sm.V_inv == PolyMatrix::identity(cols));
            for (std::size_t i = 0; i + 1 < sm.rank; ++i) {
                CHECK(divmod(sm.diagonal[i + 1].first, sm.diagonal[i].first).second.is_zero());
                CHECK(divmod(sm.diagonal[i].second, sm.diagonal[i + 1].second).second.is_zero());
            }
        }
    }
    SUBCASE("rank deficient") {
        RationalFunction f = rf(c(1), z - c(3));
        RationalMatrix M{{f, f}, {f, f}};
        auto sm = smith_mcmillan(M);
        CHECK(sm.rank == 1);
        CHECK(to_rational(sm.U) * sm.sigma(2, 2) * to_rational(sm.V) == M);
    }
}

TEST_CASE("right_coprime_factorization") {
    SUBCASE("unstable scalar") {
        RationalMatrix P = RationalMatrix::scalar(rf(c(1), z - c(1, 2)));
        auto f = right_coprime_factorization(P, q(2));
        CHECK(f.N(0, 0) == rf(c(1), z - c(2)));
        CHECK(f.D(0, 0) == rf(z - c(1, 2), z - c(2)));
        CHECK(f.X(0, 0) == RationalFunction(q(-3, 2)));
        CHECK(f.Y(0, 0) == RationalFunction(1));
        // (-3/2) / (z-2) + (z-1/2)/(z-2) = 1 exactly
        CHECK(f.X(0, 0) * f.N(0, 0) + f.Y(0, 0) * f.D(0, 0) == RationalFunction(1));
        CHECK(verify_bezout(f, P));
    }
    SUBCASE("stable scalar") {
        RationalMatrix P = RationalMatrix::scalar(rf(c(1), z - c(3)));
        auto f = right_coprime_factorization(P);
        CHECK(f.N == P);
        CHECK(f.D(0, 0) == RationalFunction(1));
        CHECK(f.X(0, 0) == RationalFunction(0));
        CHECK(f.Y(0, 0) == RationalFunction(1));
    }
    SUBCASE("diagonal 2x2") {
        RationalFunction p = rf(c(1), z - c(1, 2));
        RationalMatrix P{{p, RationalFunction(0)}, {RationalFunction(0), p}};
        auto f = right_coprime_factorization(P);
        CHECK(f.X * f.N + f.Y * f.D == RationalMatrix::identity(2));
        CHECK(verify_bezout(f, P));
        for (const auto* m : {&f.N, &f.D, &f.X, &f.Y})
            for (const auto& e : m->data()) CHECK(rational_in_disk_ring(e));
    }
    SUBCASE("random matrices") {
        std::mt19937 rng(23);
        for (int trial = 0; trial < 6; ++trial) {
            std::size_t rows = 1 + trial % 2, cols = 1 + (trial / 2) % 2;
            RationalMatrix P(rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    P(i, j) = rf(testing::random_poly(rng, 1), testing::poly_with_safe_roots(rng, 2));
            auto f = right_coprime_factorization(P, q(3, 2));
            CHECK(verify_bezout(f, P));
            for (const auto* m : {&f.N, &f.D, &f.X, &f.Y})
                for (const auto& e : m->data()) CHECK(rational_in_disk_ring(e));
        }
    }
    CHECK_THROWS_AS(right_coprime_factorization(RationalMatrix::scalar(RationalFunction(1)), q(1, 2)), Error);
}

TEST_CASE("left_coprime_factorization") {
    SUBCASE("constant") {
        auto f = left_coprime_factorization(RationalMatrix::scalar(RationalFunction(q(5, 3))));
        CHECK(f.side == Side::Left);
        CHECK(f.D(0, 0) == RationalFunction(1));
        CHECK(f.N(0, 0) == RationalFunction(q(5, 3)));
    }
    SUBCASE("unstable scalar") {
        RationalMatrix C = RationalMatrix::scalar(rf(c(1), z - c(1, 2)));
        auto f = left_coprime_factorization(C);
        CHECK(f.D(0, 0) == rf(z - c(1, 2), z - c(2)));
        CHECK(f.N(0, 0) == rf(c(1), z - c(2)));
        CHECK(verify_bezout(f, C));
    }
    SUBCASE("stable 2x2") {
        RationalMatrix C{{rf(c(1), z - c(3)), RationalFunction(2)}, {RationalFunction(z), rf(z, z + c(4))}};
        auto f = left_coprime_factorization(C);
        CHECK(f.D == RationalMatrix::identity(2));
        CHECK(f.N == C);
        CHECK(verify_bezout(f, C));
    }
    SUBCASE("random 2x1") {
        std::mt19937 rng(29);
        RationalMatrix C(2, 1);
        C(0, 0) = rf(c(1), testing::poly_with_safe_roots(rng, 2));
        C(1, 0) = rf(z, testing::poly_with_safe_roots(rng, 1));
        auto f = left_coprime_factorization(C);
        CHECK(verify_bezout(f, C));
    }
}

TEST_CASE("verify_bezout rejects broken factorizations") {
    RationalMatrix P = RationalMatrix::scalar(rf(c(1), z - c(1, 2)));
    auto f = right_coprime_factorization(P);
    CHECK(verify_bezout(f, P));
    auto zeroed = f;
    zeroed.X = RationalMatrix(1, 1);
    zeroed.Y = RationalMatrix(1, 1);
    CHECK_FALSE(verify_bezout(zeroed, P));

    // N, D sharing a zero at 1/2: X N + Y D vanishes there for any witnesses
    auto shared = f;
    shared.N = RationalMatrix::scalar(rf(z - c(1, 2), z - c(2)));
    shared.D = RationalMatrix::scalar(rf((z - c(1, 2)) * (z - c(1, 2)), (z - c(2)) * (z - c(2))));
    std::mt19937 rng(31);
    for (int k = 0; k < 5; ++k) {
        shared.X = RationalMatrix::scalar(rf(testing::random_poly(rng, 2)));
        shared.Y = RationalMatrix::scalar(rf(testing::random_poly(rng, 2)));
        auto residual = shared.X * shared.N + shared.Y * shared.D;
        CHECK(residual(0, 0).eval(q(1, 2)) == GaussQ(0));
        CHECK_FALSE(verify_bezout(shared));
    }
}

TEST_CASE("disk_winding_exact") {
    CHECK(disk_winding_exact(RationalFunction(z)) == 1);
    RationalFunction f = rf(z - c(1, 2), z - c(2));
    CHECK(disk_winding_exact(f) == 1);
    CHECK(testing::dense_winding_oracle([&](auto w) { return f.eval(w); }) == 1);
    // Blaschke factor with a = 0.3 e^{i pi/5}, coefficients rounded to exact rationals
    GaussQ a = GaussQ::from_complex(std::polar(0.3, 0.6283185307179586));
    RationalFunction b(z - Poly(a), Poly(1) - Poly(a.conj()) * z);
    CHECK(disk_winding_exact(b) == 1);
    CHECK(testing::dense_winding_oracle([&](auto w) { return b.eval(w); }) == 1);
    CHECK_THROWS_AS(disk_winding_exact(RationalFunction(z - c(1))), Error);
    try {
        disk_winding_exact(rf(c(1), z * z + c(1)));
        FAIL("expected degenerate boundary");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateBoundary);
    }
}

TEST_CASE("disk_winding_exact is additive") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        RationalFunction f(testing::poly_with_safe_roots(rng, 2), testing::poly_with_safe_roots(rng, 2));
        RationalFunction g(testing::poly_with_safe_roots(rng, 3), testing::poly_with_safe_roots(rng, 1));
        CHECK(disk_winding_exact(f * g) == disk_winding_exact(f) + disk_winding_exact(g));
    }
}
