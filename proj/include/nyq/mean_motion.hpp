#pragma once

#include <optional>

#include "nyq/exponential_polynomial.hpp"
#include "nyq/winding.hpp"

namespace nyq {

struct MeanMotionConfig {
    double T0 = 64.0;
    double growth_factor = 4.0;
    double tol = 1e-4;
    int max_doublings = 10;
    double min_modulus_floor = 1e-10;
    std::size_t max_samples = std::size_t{1} << 24;  // per window
};

struct MinModulusBound {
    double bound = 0.0;
    bool certified = false;
};

/// lambda_0 when one term strictly dominates the others in modulus.
std::optional<double> dominance_winding(const ExponentialPolynomial& f);

/// Lower bound for inf |f| on the real line. Certified through dominance or, for periodic f,
/// through a Lipschitz-controlled grid over one period. Otherwise a window minimum, uncertified.
MinModulusBound certified_min_modulus(const ExponentialPolynomial& f, std::size_t max_samples = std::size_t{1} << 20);

/// Mean motion lim (arg f(T) - arg f(-T)) / 2T.
/// Exact routes first (single term, dominance, periodic), then the numerical estimator.
/// Throws DegenerateBoundary when a sample nearly vanishes, UnresolvedError without convergence.
WindingResult average_winding(const ExponentialPolynomial& f, const MeanMotionConfig& cfg = {});

/// The numerical estimator alone, bypassing every shortcut. Never certified.
WindingResult mean_motion_estimate(const ExponentialPolynomial& f, const MeanMotionConfig& cfg = {});

}  // namespace nyq
