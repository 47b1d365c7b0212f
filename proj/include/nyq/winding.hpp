#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace nyq {

/// Closed curve t in [0, 1] -> C with curve(0) == curve(1).
struct CurveEvaluator {
    std::function<std::complex<double>(double)> eval;
    std::optional<double> lipschitz_bound;  // |curve'(t)| bound, when known
};

struct CurveSample {
    double t;
    std::complex<double> value;
    double unwrapped_arg;
};

struct WindingResult {
    double value = 0.0;  // integral for closed-curve windings
    double min_modulus = 0.0;
    std::size_t samples_used = 0;
    bool certified = false;
    double residual = 0.0;  // distance of the raw estimate from the reported value
    std::vector<CurveSample> trace;  // filled when requested
};

struct WindingConfig {
    std::size_t initial_samples = 1024;
    std::size_t max_samples = std::size_t{1} << 22;
    double min_modulus_floor = 1e-12;
    bool keep_trace = false;
};

/// Reads NYQ_MAX_SAMPLES (if set and positive) over the given default.
std::size_t max_samples_from_env(std::size_t fallback);

/// Continuous argument of a sequence of nonzero values, starting from the principal argument.
/// Throws DegenerateBoundary on a zero value and NeedsRefinement when an adjacent step reaches pi.
std::vector<double> phase_unwrap(std::span<const std::complex<double>> values);

/// Integer winding number about the origin. Sampling doubles until every adjacent argument step
/// is below pi/2 or max_samples is reached. Certified when the rounding residual is below 0.01 and
/// the smallest sampled modulus clears min_modulus_floor.
/// Throws DegenerateBoundary for a sample below the floor, Unresolved when steps of pi remain.
WindingResult winding_number(const CurveEvaluator& curve, const WindingConfig& cfg = {});

/// Residual threshold separating integers from sampling drift.
inline constexpr double kRoundingResidual = 0.01;

}  // namespace nyq
