#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "nyq/error.hpp"
#include "nyq/mean_motion.hpp"
#include "nyq/winding.hpp"
#include "support.hpp"

using namespace nyq;

namespace {

constexpr double kPi = std::numbers::pi;
const std::vector<double> kSqrt2Basis{1.0, std::numbers::sqrt2};

CurveEvaluator circle_curve(std::function<std::complex<double>(std::complex<double>)> f) {
    return {[f](double t) { return f(std::polar(1.0, 2.0 * kPi * t)); }, std::nullopt};
}

ExponentialPolynomial e(const mpq_class& q, std::complex<double> c = 1.0) { return ExponentialPolynomial::exponential(q, c); }
ExponentialPolynomial e_sqrt2(std::complex<double> c = 1.0) {
    return ExponentialPolynomial::exponential({0, 1}, c, kSqrt2Basis);
}

}  // namespace

TEST_CASE("phase_unwrap examples") {
    std::vector<std::complex<double>> ones(3, 1.0);
    CHECK(phase_unwrap(ones) == std::vector<double>{0, 0, 0});

    std::vector<std::complex<double>> quarter;
    for (int k = 0; k <= 4; ++k) quarter.push_back(std::polar(1.0, k * kPi / 2));
    auto th = phase_unwrap(quarter);
    for (int k = 0; k <= 4; ++k) CHECK(th[k] == doctest::Approx(k * kPi / 2));

    std::vector<std::complex<double>> samples;
    for (int k = 0; k <= 64; ++k) {
        auto z = std::polar(1.0, 2 * kPi * k / 64);
        samples.push_back((z - 0.5) / (z - 2.0));
    }
    th = phase_unwrap(samples);
    CHECK(th.back() - th.front() == doctest::Approx(2 * kPi));
    for (std::size_t k = 1; k < th.size(); ++k) CHECK(std::abs(th[k] - th[k - 1]) < kPi);

    std::vector<std::complex<double>> with_zero{1.0, 0.0};
    CHECK_THROWS_AS(phase_unwrap(with_zero), Error);
    std::vector<std::complex<double>> jump{1.0, -1.0};
    try {
        phase_unwrap(jump);
        FAIL("expected a refinement signal");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::NeedsRefinement);
    }
}

TEST_CASE("winding_number examples") {
    auto r = winding_number({[](double t) { return std::polar(1.0, 2 * kPi * t); }, std::nullopt});
    CHECK(r.value == 1);
    CHECK(r.certified);
    r = winding_number({[](double t) { return 3.0 + std::polar(1.0, 2 * kPi * t); }, std::nullopt});
    CHECK(r.value == 0);
    CHECK(r.certified);
    const std::complex<double> i09(0.0, 0.9);
    r = winding_number(circle_curve([&](auto z) { return (z - 0.5) * (z - i09) / ((z - 2.0) * (z - 2.0)); }));
    CHECK(r.value == 2);
    CHECK(r.certified);
    CHECK(r.min_modulus > 0);

    // Passing through the origin.
    CHECK_THROWS_AS(winding_number(circle_curve([](auto z) { return z - 1.0; })), Error);
    // Too wiggly for a tiny budget.
    WindingConfig tiny;
    tiny.initial_samples = 8;
    tiny.max_samples = 8;
    try {
        winding_number(circle_curve([](auto z) { return std::pow(z, 4) + 0.0; }), tiny);
        FAIL("expected unresolved");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::Unresolved);
    }
}

TEST_CASE("winding_number is invariant under reparametrization") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto f = [](std::complex<double> z) { return (z - 0.3) * (z + std::complex<double>(0, 0.6)) / (z - 1.7); };
    int reference = static_cast<int>(winding_number(circle_curve(f)).value);
    CHECK(reference == 2);
    for (int trial = 0; trial < 20; ++trial) {
        double a = u(rng) * 0.9, b = u(rng) * 3.0;
        // strictly increasing map of [0,1] onto itself
        auto phi = [a, b](double t) { return t + a * std::sin(2 * kPi * t) / (2 * kPi) * (1 + b * t * (1 - t)) / (1 + b / 4); };
        CurveEvaluator c{[&, phi](double t) { return f(std::polar(1.0, 2 * kPi * phi(t))); }, std::nullopt};
        CHECK(winding_number(c).value == reference);
    }
}

TEST_CASE("winding_number of a product curve is the sum") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Poly a = testing::poly_with_safe_roots(rng, 3), b = testing::poly_with_safe_roots(rng, 2);
        Poly c = testing::poly_with_safe_roots(rng, 2);
        auto f = [&](std::complex<double> z) { return a.eval(z) / c.eval(z); };
        auto g = [&](std::complex<double> z) { return b.eval(z); };
        double wf = winding_number(circle_curve(f)).value;
        double wg = winding_number(circle_curve(g)).value;
        double wfg = winding_number(circle_curve([&](auto z) { return f(z) * g(z); })).value;
        CHECK(wfg == wf + wg);
    }
}

TEST_CASE("numerical winding agrees with the argument principle") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        RationalFunction f(testing::poly_with_safe_roots(rng, 1 + trial % 4), testing::poly_with_safe_roots(rng, trial % 4));
        auto r = winding_number(circle_curve([&](auto z) { return f.eval(z); }));
        CHECK(r.value == disk_winding_exact(f));
        CHECK(r.certified);
    }
}

TEST_CASE("exponential polynomial arithmetic merges frequencies exactly") {
    auto f = e(mpq_class(1, 3)) * e(mpq_class(2, 3));
    CHECK(f.size() == 1);
    CHECK(f.spectrum()[0] == doctest::Approx(1.0));
    CHECK((e(1) - e(1)).is_zero());
    auto g = e_sqrt2() * ExponentialPolynomial::exponential({0, -1}, 1.0, kSqrt2Basis);
    CHECK(g == ExponentialPolynomial(1.0));
    CHECK(e_sqrt2(2.0).eval(1.0) == std::polar(2.0, std::numbers::sqrt2));
    CHECK_THROWS_AS(ExponentialPolynomial({2.0}, {}), Error);
}

TEST_CASE("average_winding examples") {
    for (auto lam : {mpq_class(0), mpq_class(1), mpq_class(5, 3)}) {
        auto r = average_winding(e(lam));
        CHECK(r.value == lam.get_d());
        CHECK(r.certified);
    }
    CHECK(average_winding(e_sqrt2()).value == doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));

    auto two_plus = ExponentialPolynomial(2.0) + e(1);
    CHECK(average_winding(two_plus).value == 0.0);
    // numeric path over a long window agrees
    CHECK(std::abs(mean_motion_estimate(two_plus).value) < 1e-4);

    auto f = e_sqrt2() * (ExponentialPolynomial(3.0) + e(1));
    CHECK(average_winding(f).value == doctest::Approx(std::numbers::sqrt2));

    // periodic route, no dominant term: 1 + e^{iy} + 1.5 e^{2iy} winds like z^2 near the origin
    auto p = ExponentialPolynomial(1.0) + e(1) + e(2, 1.5);
    auto rp = average_winding(p);
    CHECK(rp.certified);
    CHECK(rp.value == 2.0);
    // fractional mean motion: e^{iy/3} + 0.6 e^{iy/2} + 0.6 is periodic with period 12 pi
    auto frac = e(mpq_class(1, 3)) + e(mpq_class(1, 2), 0.6) + ExponentialPolynomial(0.6);
    auto rf = average_winding(frac);
    CHECK(rf.certified);
    CHECK(rf.value * 6 == doctest::Approx(std::round(rf.value * 6)));
    CHECK(std::abs(mean_motion_estimate(frac).value - rf.value) < 1e-3);

    CHECK_THROWS_AS(average_winding(ExponentialPolynomial()), Error);
    CHECK_THROWS_AS(average_winding(ExponentialPolynomial(1.0) + e(1)), Error);
}

TEST_CASE("dominance_winding examples") {
    CHECK(dominance_winding(ExponentialPolynomial(2.0) + e(1)) == 0.0);
    CHECK_FALSE(dominance_winding(e(1) + e(2)).has_value());
    auto f = e_sqrt2(5.0) + e(1) + e(3);
    auto d = dominance_winding(f);
    REQUIRE(d.has_value());
    CHECK(*d == doctest::Approx(std::numbers::sqrt2));
    CHECK(std::abs(mean_motion_estimate(f).value - *d) < 1e-3);
}

TEST_CASE("certified_min_modulus examples") {
    auto b = certified_min_modulus(ExponentialPolynomial(2.0) + e(1));
    CHECK(b.bound == 1.0);
    CHECK(b.certified);
    b = certified_min_modulus(e(1) - e(1));
    CHECK(b.bound == 0.0);
    auto h = ExponentialPolynomial(1.0) + e(1) + e_sqrt2();
    b = certified_min_modulus(h);
    CHECK_FALSE(b.certified);
    CHECK(b.bound >= 0.0);
    CHECK(b.bound < 0.5);  // the three unit vectors nearly cancel somewhere on a long window
    // periodic without dominance: true infimum of |1 + e^{iy} + 1.5 e^{2iy}| is positive
    b = certified_min_modulus(ExponentialPolynomial(1.0) + e(1) + e(2, 1.5));
    CHECK(b.certified);
    CHECK(b.bound > 0.0);
}

TEST_CASE("average winding is additive and shifts by lambda") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = testing::random_dominant_ep(rng), g = testing::random_dominant_ep(rng);
        double wf = average_winding(f).value, wg = average_winding(g).value;
        auto fg = f * g;
        MeanMotionConfig cfg;
        // product of two dominant sums need not be dominant; compare against the estimator
        double wfg = dominance_winding(fg) ? average_winding(fg).value : mean_motion_estimate(fg, cfg).value;
        CHECK(std::abs(wfg - wf - wg) < 2e-3);
        auto shifted = e_sqrt2() * f;
        CHECK(average_winding(shifted).value == doctest::Approx(wf + std::numbers::sqrt2));
    }
}
