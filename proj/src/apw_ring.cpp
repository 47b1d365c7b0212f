#include "nyq/apw_ring.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "nyq/error.hpp"
#include "nyq/roots.hpp"

namespace nyq {

namespace {

bool search(const Semigroup& sg, std::size_t g, const FrequencyCoords& residual, int budget) {
    if (trim_coords(residual).empty()) return true;
    if (g == sg.generators.size() || budget == 0) return false;
    FrequencyCoords r = residual;
    for (int c = 0; c <= budget; ++c) {
        if (search(sg, g + 1, r, budget - c)) return true;
        const auto& gen = sg.generators[g];
        if (r.size() < gen.size()) r.resize(gen.size());
        for (std::size_t k = 0; k < gen.size(); ++k) r[k] -= gen[k];
    }
    return false;
}

}  // namespace

bool semigroup_contains(const Semigroup& sg, const FrequencyCoords& target) {
    return search(sg, 0, trim_coords(target), sg.max_coefficient_sum);
}

IndexOutcome apw_index(const ExponentialPolynomial& f, const std::optional<Semigroup>& semigroup,
                       const MeanMotionConfig& cfg) {
    if (semigroup) {
        for (const auto& [coords, coeff] : f.terms()) {
            if (!semigroup_contains(*semigroup, coords)) {
                throw Error(ErrorKind::Membership,
                            fmt::format("frequency {} is not a combination of the generators with coefficient sum <= {}",
                                        f.frequency(coords), semigroup->max_coefficient_sum));
            }
        }
    }
    if (f.is_zero()) return IndexOutcome::not_invertible("zero function");
    MinModulusBound mm = certified_min_modulus(f);
    if (!(mm.bound > cfg.min_modulus_floor)) {
        return IndexOutcome::not_invertible(fmt::format("inf |f| on the real line is at most {:.3g}", mm.bound),
                                            !mm.certified);
    }
    try {
        WindingResult w = average_winding(f, cfg);
        // an estimated index carries the estimator's own accuracy as its tolerance
        const double tol = w.certified ? kDefaultIndexTol : 2.0 * cfg.tol;
        return IndexOutcome::invertible(RealIndex{w.value, tol}, mm.bound, mm.certified && w.certified,
                                        w.certified ? "" : "mean motion from the numerical estimator");
    } catch (const UnresolvedError& e) {
        return IndexOutcome::not_invertible(fmt::format("{} (last estimate {:.6g})", e.what(), e.last_estimate()), true);
    } catch (const Error& e) {
        return IndexOutcome::not_invertible(e.what(), true);
    }
}

std::optional<bool> apw_invertible_in_ring(const ExponentialPolynomial& f) {
    if (f.is_zero() || !f.has_nonnegative_spectrum()) return false;
    if (f.is_commensurable()) {
        mpz_class L = 1;
        for (const auto& [coords, coeff] : f.terms())
            if (!coords.empty()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), coords[0].get_den_mpz_t());
        std::vector<std::complex<double>> p;
        for (const auto& [coords, coeff] : f.terms()) {
            mpz_class e = coords.empty() ? mpz_class(0) : mpz_class(coords[0] * L);
            if (e > 4096) return std::nullopt;
            auto k = static_cast<std::size_t>(e.get_ui());
            if (p.size() <= k) p.resize(k + 1);
            p[k] += coeff;
        }
        if (p[0] == 0.0) return false;  // f -> 0 far up the half plane
        double closest = std::numeric_limits<double>::infinity();
        for (auto r : numeric_roots(p)) closest = std::min(closest, std::abs(r));
        if (closest < 1.0 - 1e-9) return false;
        if (closest <= 1.0 + 1e-9) return std::nullopt;
        return true;
    }
    if (auto lam = dominance_winding(f)) return *lam == 0.0;
    return std::nullopt;
}

bool ApwRing::equal(const Element& a, const Element& b) const {
    double scale = std::max({1.0, a.l1_norm(), b.l1_norm()});
    return ExponentialPolynomial::distance(a, b) <= 1e-12 * scale;
}

bool ApwRing::is_member(const Element& f) const {
    if (!f.has_nonnegative_spectrum()) return false;
    if (!semigroup_) return true;
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [&](const auto& term) { return semigroup_contains(*semigroup_, term.first); });
}

std::optional<bool> ApwRing::invertible_in_R(const Element& f) const {
    if (!is_member(f)) return false;
    return apw_invertible_in_ring(f);
}

std::vector<std::complex<double>> ApwRing::boundary_values(const Element& f) const {
    std::vector<std::complex<double>> out;
    for (double y : {-73.1, -7.3, -2.0, -0.5, 0.0, 0.9, 3.1, 10.7, 100.3}) out.push_back(f.eval(y));
    return out;
}

}  // namespace nyq
