#include "nyq/mean_motion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "nyq/error.hpp"

namespace nyq {

namespace {

constexpr double kPi = std::numbers::pi;

// Common denominator L of all (one-coordinate) frequencies, so f(y + 2 pi L) = f(y).
mpz_class period_multiplier(const ExponentialPolynomial& f) {
    mpz_class L = 1;
    for (const auto& [coords, coeff] : f.terms())
        if (!coords.empty()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), coords[0].get_den_mpz_t());
    return L;
}

double max_abs_frequency(const ExponentialPolynomial& f) {
    double m = 0.0;
    for (double lam : f.spectrum()) m = std::max(m, std::abs(lam));
    return m;
}

// f(y0 + k step), k = 0..n, by per-term phase rotation with periodic exact resynchronisation.
std::vector<std::complex<double>> sample_grid(const ExponentialPolynomial& f, double y0, double step, std::size_t n) {
    constexpr std::size_t kResync = 256;
    std::vector<double> lam;
    std::vector<std::complex<double>> coeff, rot, cur;
    for (const auto& [coords, c] : f.terms()) {
        lam.push_back(f.frequency(coords));
        coeff.push_back(c);
        rot.push_back(std::polar(1.0, lam.back() * step));
    }
    cur.resize(lam.size());
    std::vector<std::complex<double>> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        if (k % kResync == 0) {
            const double y = y0 + step * static_cast<double>(k);
            for (std::size_t j = 0; j < lam.size(); ++j) cur[j] = coeff[j] * std::polar(1.0, lam[j] * y);
        }
        std::complex<double> acc = 0.0;
        for (std::size_t j = 0; j < lam.size(); ++j) {
            acc += cur[j];
            cur[j] *= rot[j];
        }
        out[k] = acc;
    }
    return out;
}

double min_abs(const std::vector<std::complex<double>>& v) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& x : v) m = std::min(m, std::abs(x));
    return m;
}

struct Window {
    double slope;
    double min_modulus;
    std::size_t samples;
};

// Least-squares slope of the unwrapped argument over [-T, T], on a grid fine enough that
// |f| cannot drift by half the observed minimum between neighbours.
Window window_slope(const ExponentialPolynomial& f, double T, const MeanMotionConfig& cfg) {
    const double lip = f.lipschitz();
    double h = std::min(0.25, kPi / (4.0 * std::max(max_abs_frequency(f), 1e-300)));
    while (true) {
        auto n = static_cast<std::size_t>(std::ceil(2.0 * T / h));
        if (n + 1 > cfg.max_samples) {
            throw UnresolvedError("window of half-width " + std::to_string(T) + " needs more than " +
                                      std::to_string(cfg.max_samples) + " samples",
                                  std::nan(""));
        }
        const double step = 2.0 * T / static_cast<double>(n);
        std::vector<std::complex<double>> values = sample_grid(f, -T, step, n);
        const double m = min_abs(values);
        if (m < cfg.min_modulus_floor) {
            throw Error(ErrorKind::DegenerateBoundary,
                        "|f| drops to " + std::to_string(m) + " on the real line; f is possibly not invertible");
        }
        if (lip * step >= m / 2.0) {
            h = m / (4.0 * lip);
            continue;
        }
        std::vector<double> theta = phase_unwrap(values);
        // slope = sum y theta / sum y^2 on the symmetric grid
        double sy_theta = 0.0, syy = 0.0, mean_theta = 0.0;
        for (double th : theta) mean_theta += th;
        mean_theta /= static_cast<double>(theta.size());
        for (std::size_t k = 0; k <= n; ++k) {
            double y = -T + step * static_cast<double>(k);
            sy_theta += y * (theta[k] - mean_theta);
            syy += y * y;
        }
        return {sy_theta / syy, m, n + 1};
    }
}

WindingResult periodic_winding(const ExponentialPolynomial& f, const MeanMotionConfig& cfg) {
    const mpz_class L = period_multiplier(f);
    const double period = 2.0 * kPi * L.get_d();
    const double top = max_abs_frequency(f) * L.get_d();  // largest integer frequency of the rescaled curve
    WindingConfig wc;
    wc.initial_samples = std::max<std::size_t>(1024, std::bit_ceil(static_cast<std::size_t>(8.0 * top) + 1));
    wc.max_samples = std::max(cfg.max_samples, wc.initial_samples);
    wc.min_modulus_floor = cfg.min_modulus_floor;
    CurveEvaluator curve{[&](double t) { return f.eval(period * t); }, f.lipschitz() * period};
    WindingResult r = winding_number(curve, wc);
    const double turns = r.value;
    r.value = turns / L.get_d();
    MinModulusBound mm = certified_min_modulus(f, cfg.max_samples);
    r.certified = r.certified && mm.certified && mm.bound > 0.0;
    if (mm.certified) r.min_modulus = mm.bound;
    return r;
}

}  // namespace

std::optional<double> dominance_winding(const ExponentialPolynomial& f) {
    if (f.is_zero()) return std::nullopt;
    const FrequencyCoords* best = nullptr;
    double best_abs = -1.0;
    double total = 0.0;
    for (const auto& [coords, coeff] : f.terms()) {
        double a = std::abs(coeff);
        total += a;
        if (a > best_abs) {
            best_abs = a;
            best = &coords;
        }
    }
    if (best_abs > total - best_abs) return f.frequency(*best);
    return std::nullopt;
}

MinModulusBound certified_min_modulus(const ExponentialPolynomial& f, std::size_t max_samples) {
    if (f.is_zero()) return {0.0, true};
    double total = f.l1_norm();
    for (const auto& [coords, coeff] : f.terms()) {
        double gap = 2.0 * std::abs(coeff) - total;
        if (gap > 0.0) return {gap, true};
    }
    const double lip = f.lipschitz();
    if (f.is_commensurable()) {
        const double period = 2.0 * kPi * period_multiplier(f).get_d();
        std::size_t n = 1024;
        while (true) {
            const double h = period / static_cast<double>(n);
            const double m = min_abs(sample_grid(f, 0.0, h, n - 1));
            if (lip * h < m / 2.0) return {m / 2.0, true};
            if (2 * n > max_samples) return {std::max(0.0, m - lip * h / 2.0), false};
            n *= 2;
        }
    }
    // Incommensurable: a long window, heuristic only.
    std::vector<double> spec = f.spectrum();
    double mean_gap = (spec.back() - spec.front()) / static_cast<double>(std::max<std::size_t>(spec.size() - 1, 1));
    double half_width = 1e6 / std::max(mean_gap, 1e-12);
    double h = std::min(0.25, kPi / (8.0 * std::max(max_abs_frequency(f), 1e-300)));
    auto n = static_cast<std::size_t>(std::ceil(2.0 * half_width / h));
    if (n > max_samples) {
        n = max_samples;
        half_width = h * static_cast<double>(n) / 2.0;
    }
    return {min_abs(sample_grid(f, -half_width, h, n)), false};
}

WindingResult mean_motion_estimate(const ExponentialPolynomial& f, const MeanMotionConfig& cfg) {
    if (f.is_zero()) throw Error(ErrorKind::DegenerateBoundary, "zero exponential polynomial");
    double T = cfg.T0;
    Window prev = window_slope(f, T, cfg);
    std::size_t used = prev.samples;
    for (int k = 0; k < cfg.max_doublings; ++k) {
        T *= cfg.growth_factor;
        Window cur;
        try {
            cur = window_slope(f, T, cfg);
        } catch (const UnresolvedError&) {
            throw UnresolvedError("mean motion did not settle before the sample budget ran out", prev.slope);
        }
        used += cur.samples;
        if (std::abs(cur.slope - prev.slope) < cfg.tol) {
            WindingResult r;
            r.value = cur.slope;
            r.residual = std::abs(cur.slope - prev.slope);
            r.min_modulus = std::min(cur.min_modulus, prev.min_modulus);
            r.samples_used = used;
            r.certified = false;
            return r;
        }
        prev = cur;
    }
    throw UnresolvedError("mean motion did not settle within " + std::to_string(cfg.max_doublings) + " enlargements",
                          prev.slope);
}

WindingResult average_winding(const ExponentialPolynomial& f, const MeanMotionConfig& cfg) {
    if (f.is_zero()) throw Error(ErrorKind::DegenerateBoundary, "zero exponential polynomial");
    WindingResult r;
    if (f.size() == 1) {
        const auto& [coords, coeff] = *f.terms().begin();
        r.value = f.frequency(coords);
        r.min_modulus = std::abs(coeff);
        r.certified = true;
        return r;
    }
    if (auto lam = dominance_winding(f)) {
        r.value = *lam;
        r.min_modulus = certified_min_modulus(f).bound;
        r.certified = true;
        return r;
    }
    if (f.is_commensurable()) return periodic_winding(f, cfg);
    return mean_motion_estimate(f, cfg);
}

}  // namespace nyq
