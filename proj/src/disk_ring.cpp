#include "nyq/disk_ring.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "nyq/error.hpp"
#include "nyq/roots.hpp"
#include "nyq/winding.hpp"

namespace nyq {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Root> roots_or_empty(const Poly& p) { return p.degree() >= 1 ? poly_roots(p) : std::vector<Root>{}; }

// Smallest | |r| - 1 | over the roots, +inf when there are none.
double circle_gap(const std::vector<Root>& roots) {
    double gap = std::numeric_limits<double>::infinity();
    for (const auto& r : roots) gap = std::min(gap, std::abs(std::abs(r.value) - 1.0));
    return gap;
}

CurveEvaluator circle(const RationalFunction& f, double radius) {
    return {[f, radius](double t) { return f.eval(std::polar(radius, 2.0 * kPi * t)); }, std::nullopt};
}

}  // namespace

DiskMembership disk_membership(const RationalFunction& f, double tol) {
    DiskMembership m{true, false};
    for (const auto& r : roots_or_empty(f.den())) {
        double mod = std::abs(r.value);
        if (std::abs(mod - 1.0) <= tol) m.boundary_degenerate = true;
        if (mod <= 1.0 + tol) m.member = false;
    }
    return m;
}

IndexOutcome disk_index(const RationalFunction& f, double tol) {
    if (f.is_zero()) return IndexOutcome::not_invertible("zero function");
    auto zeros = roots_or_empty(f.num()), poles = roots_or_empty(f.den());
    if (circle_gap(zeros) <= tol) return IndexOutcome::not_invertible("zero on the unit circle", true);
    if (circle_gap(poles) <= tol) return IndexOutcome::not_invertible("pole on the unit circle", true);
    int exact = count_roots_inside(zeros, 1.0, tol) - count_roots_inside(poles, 1.0, tol);
    WindingConfig cfg;
    cfg.max_samples = max_samples_from_env(cfg.max_samples);
    try {
        WindingResult w = winding_number(circle(f, 1.0), cfg);
        if (static_cast<int>(w.value) != exact) {
            auto o = IndexOutcome::not_invertible(
                fmt::format("argument principle gives {} but sampling gives {}", exact, w.value), true);
            return o;
        }
        return IndexOutcome::invertible(IntIndex{exact}, w.min_modulus, w.certified);
    } catch (const Error& e) {
        return IndexOutcome::not_invertible(e.what(), true);
    }
}

IndexOutcome hardy_index_restricted(const RationalFunction& f, double tol) {
    if (!disk_membership(f, tol).member) {
        throw Error(ErrorKind::Membership, "hardy index needs a function without poles in the closed disk: " + f.str());
    }
    if (f.is_zero()) return IndexOutcome::not_invertible("zero function");
    auto zeros = roots_or_empty(f.num());
    if (circle_gap(zeros) <= tol) return IndexOutcome::not_invertible("zero on the unit circle", true);
    // r sits halfway between the outermost interior zero and the circle
    double inner = 0.0;
    for (const auto& z : zeros)
        if (std::abs(z.value) < 1.0) inner = std::max(inner, std::abs(z.value));
    const double r = inner == 0.0 ? 0.75 : (1.0 + inner) / 2.0;
    WindingConfig cfg;
    cfg.max_samples = max_samples_from_env(cfg.max_samples);
    try {
        WindingResult w = winding_number(circle(f, r), cfg);
        // every zero outside radius r also lies outside the closed disk
        bool clean = std::none_of(zeros.begin(), zeros.end(), [&](const Root& z) {
            double m = std::abs(z.value);
            return m > r && m <= 1.0 + tol;
        });
        if (!clean) return IndexOutcome::not_invertible("zero between the test circle and the boundary", true);
        return IndexOutcome::invertible(IntIndex{static_cast<long long>(w.value)}, w.min_modulus, w.certified,
                                        fmt::format("winding on radius {:.6g}", r));
    } catch (const Error& e) {
        return IndexOutcome::not_invertible(e.what(), true);
    }
}

IndexOutcome HardyRing::index(const Element& f) const {
    if (disk_membership(f, tol_).member) return hardy_index_restricted(f, tol_);
    // p/q with both polynomials in the ring
    IndexOutcome p = hardy_index_restricted(RationalFunction(f.num()), tol_);
    IndexOutcome q = hardy_index_restricted(RationalFunction(f.den()), tol_);
    if (!p.invertible_in_S || !q.invertible_in_S) {
        return IndexOutcome::not_invertible(p.invertible_in_S ? q.note : p.note, p.degenerate || q.degenerate);
    }
    return IndexOutcome::invertible(index_combine(*p.index, index_negate(*q.index)),
                                    std::min(p.certificate.min_modulus, q.certificate.min_modulus),
                                    p.certificate.certified && q.certificate.certified, "numerator minus denominator");
}

std::optional<bool> RationalRingBase::invertible_in_R(const Element& f) const {
    if (f.is_zero()) return false;
    DiskMembership a = disk_membership(f, tol_), b = disk_membership(f.inverse(), tol_);
    if (a.boundary_degenerate || b.boundary_degenerate) return std::nullopt;
    return a.member && b.member;
}

std::vector<std::complex<double>> RationalRingBase::boundary_values(const Element& f) const {
    std::vector<std::complex<double>> out;
    for (int k = 0; k < 12; ++k) out.push_back(f.eval(std::polar(1.0, 0.1 + 2.0 * kPi * k / 12.0)));
    return out;
}

}  // namespace nyq
