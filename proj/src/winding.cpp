#include "nyq/winding.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "nyq/error.hpp"

namespace nyq {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

std::size_t max_samples_from_env(std::size_t fallback) {
    if (const char* env = std::getenv("NYQ_MAX_SAMPLES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return fallback;
}

std::vector<double> phase_unwrap(std::span<const std::complex<double>> values) {
    std::vector<double> out;
    out.reserve(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k] == std::complex<double>(0.0)) {
            throw Error(ErrorKind::DegenerateBoundary, "zero value at sample " + std::to_string(k));
        }
        if (k == 0) {
            out.push_back(std::arg(values[0]));
            continue;
        }
        double step = std::arg(values[k] / values[k - 1]);
        if (std::abs(step) >= kPi - 1e-12) {
            throw Error(ErrorKind::NeedsRefinement, "argument jump of pi at sample " + std::to_string(k));
        }
        out.push_back(out.back() + step);
    }
    return out;
}

WindingResult winding_number(const CurveEvaluator& curve, const WindingConfig& cfg) {
    std::size_t n = std::max<std::size_t>(cfg.initial_samples, 4);
    const std::size_t cap = std::max(cfg.max_samples, n);
    // values[k] = curve(k / n), k = 0..n
    std::vector<std::complex<double>> values(n + 1);
    for (std::size_t k = 0; k <= n; ++k) values[k] = curve.eval(static_cast<double>(k) / static_cast<double>(n));

    auto max_step = [&]() {
        double worst = 0.0;
        for (std::size_t k = 1; k < values.size(); ++k) {
            if (values[k] == std::complex<double>(0.0) || values[k - 1] == std::complex<double>(0.0)) return kPi;
            worst = std::max(worst, std::abs(std::arg(values[k] / values[k - 1])));
        }
        return worst;
    };
    auto min_mod = [&]() {
        double m = std::abs(values[0]);
        for (const auto& v : values) m = std::min(m, std::abs(v));
        return m;
    };

    while (true) {
        double m = min_mod();
        if (m < cfg.min_modulus_floor) {
            throw Error(ErrorKind::DegenerateBoundary, "curve passes within " + std::to_string(m) + " of the origin");
        }
        if (max_step() < kPi / 2 || 2 * n > cap) break;
        // refine: interleave midpoints
        std::vector<std::complex<double>> refined(2 * n + 1);
        for (std::size_t k = 0; k <= n; ++k) refined[2 * k] = values[k];
        for (std::size_t k = 0; k < n; ++k)
            refined[2 * k + 1] = curve.eval((2.0 * static_cast<double>(k) + 1.0) / (2.0 * static_cast<double>(n)));
        values = std::move(refined);
        n *= 2;
    }

    std::vector<double> theta;
    try {
        theta = phase_unwrap(values);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NeedsRefinement) {
            throw Error(ErrorKind::Unresolved, "argument jumps of pi remain at " + std::to_string(n) + " samples");
        }
        throw;
    }
    double raw = (theta.back() - theta.front()) / (2.0 * kPi);
    WindingResult result;
    result.value = std::round(raw);
    result.residual = std::abs(raw - result.value);
    result.min_modulus = min_mod();
    result.samples_used = n;
    result.certified = result.residual < kRoundingResidual && result.min_modulus >= cfg.min_modulus_floor;
    if (cfg.keep_trace) {
        result.trace.reserve(values.size());
        for (std::size_t k = 0; k < values.size(); ++k)
            result.trace.push_back({static_cast<double>(k) / static_cast<double>(n), values[k], theta[k]});
    }
    return result;
}

}  // namespace nyq
