#pragma once

// Shared generators and independent oracles for the test suites.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>

#include "nyq/exponential_polynomial.hpp"
#include "nyq/poly.hpp"
#include "nyq/smith_mcmillan.hpp"
#include "nyq/rational_function.hpp"

namespace nyq::testing {

inline mpq_class small_rational(std::mt19937& rng, int max_num = 9, int max_den = 4) {
    std::uniform_int_distribution<int> num(-max_num, max_num), den(1, max_den);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Poly random_poly(std::mt19937& rng, int degree, bool monic = false) {
    std::vector<GaussQ> c;
    for (int k = 0; k <= degree; ++k) c.emplace_back(small_rational(rng));
    if (monic || c.back().is_zero()) c.back() = GaussQ(1);
    return Poly(std::move(c));
}

/// Product of (z - r_k) with roots drawn at rational points whose modulus stays at least
/// `margin` away from the unit circle.
inline Poly poly_with_safe_roots(std::mt19937& rng, int degree, double margin = 0.05) {
    std::uniform_int_distribution<int> part(-12, 12);
    Poly p(1);
    for (int k = 0; k < degree; ++k) {
        while (true) {
            GaussQ r(mpq_class(part(rng), 6), mpq_class(part(rng), 6));
            double m = std::abs(r.to_complex());
            if (std::abs(m - 1.0) > margin) {
                p *= Poly::linear(r);
                break;
            }
        }
    }
    return p;
}

/// Roots of the denominator all outside the closed disk (|r| >= 1 + margin).
inline Poly poly_with_outside_roots(std::mt19937& rng, int degree, double margin = 0.05) {
    std::uniform_int_distribution<int> part(-15, 15);
    Poly p(1);
    for (int k = 0; k < degree; ++k) {
        while (true) {
            GaussQ r(mpq_class(part(rng), 6), mpq_class(part(rng), 6));
            if (std::abs(r.to_complex()) > 1.0 + margin) {
                p *= Poly::linear(r);
                break;
            }
        }
    }
    return p;
}

/// Winding number of t -> f(e^{2 pi i t}) from dense uniform sampling and principal-branch
/// increments; independent of the library's adaptive winding code.
inline int dense_winding_oracle(const std::function<std::complex<double>(std::complex<double>)>& f,
                                int samples = 20000) {
    double total = 0.0;
    std::complex<double> prev = f(1.0);
    for (int k = 1; k <= samples; ++k) {
        double t = 2.0 * std::numbers::pi * k / samples;
        std::complex<double> cur = f(std::polar(1.0, t));
        total += std::arg(cur / prev);
        prev = cur;
    }
    return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

/// Exponential polynomial over the basis {1, sqrt 2} whose first term strictly dominates.
inline ExponentialPolynomial random_dominant_ep(std::mt19937& rng, int extra_terms = 3) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
    auto coords = [&] { return FrequencyCoords{mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))}; };
    const std::vector<double> basis{1.0, std::numbers::sqrt2};
    ExponentialPolynomial f(basis, {});
    double budget = 0.0;
    for (int k = 0; k < extra_terms; ++k) {
        std::complex<double> c(unit(rng), unit(rng));
        budget += std::abs(c);
        f += ExponentialPolynomial::exponential(coords(), c, basis);
    }
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    return f + ExponentialPolynomial::exponential(coords(), std::polar(budget * 1.5 + 0.2, phase(rng)), basis);
}

/// Random proper rational entry: numerator degree <= den degree <= max_degree, roots on the
/// lattice (Z + iZ)/6 kept 0.05 away from the unit circle, gain k/4.
inline RationalFunction random_entry(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree), gain(-8, 8);
    int dd = deg(rng);
    int dn = std::uniform_int_distribution<int>(0, dd)(rng);
    int k = gain(rng);
    if (k == 0) k = 1;
    return RationalFunction(Poly(GaussQ(mpq_class(k, 4))) * poly_with_safe_roots(rng, dn), poly_with_safe_roots(rng, dd));
}

inline RationalMatrix random_rational_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int max_degree) {
    RationalMatrix M(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) M(i, j) = random_entry(rng, max_degree);
    return M;
}

}  // namespace nyq::testing
