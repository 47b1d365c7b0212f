#include "nyq/cd_element.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "nyq/error.hpp"
#include "nyq/mean_motion.hpp"
#include "nyq/roots.hpp"
#include "nyq/winding.hpp"

namespace nyq {

namespace {

constexpr double kPi = std::numbers::pi;

std::complex<double> shift(std::complex<double> s, const mpq_class& t) {
    return sgn(t) == 0 ? std::complex<double>(1.0) : std::exp(-s * t.get_d());
}

}  // namespace

CDElement::CDElement(std::complex<double> c) {
    if (c != 0.0) atomic_.emplace(mpq_class(0), c);
}

CDElement::CDElement(RationalTerms rational, AtomicTerms atomic) {
    for (auto& [t, R] : rational) {
        if (sgn(t) < 0) throw Error(ErrorKind::InvalidArgument, "negative delay");
        *this = *this + CDElement::rational(R, t);
    }
    for (auto& [t, f] : atomic) {
        if (sgn(t) < 0) throw Error(ErrorKind::InvalidArgument, "negative delay");
        atomic_[t] += f;
    }
    prune();
}

CDElement CDElement::delay(const mpq_class& t, std::complex<double> f) {
    if (sgn(t) < 0) throw Error(ErrorKind::InvalidArgument, "negative delay");
    CDElement e;
    if (f != 0.0) e.atomic_.emplace(t, f);
    return e;
}

CDElement CDElement::rational(const RationalFunction& R, const mpq_class& t) {
    if (sgn(t) < 0) throw Error(ErrorKind::InvalidArgument, "negative delay");
    if (!R.is_proper()) throw Error(ErrorKind::InvalidArgument, "improper rational function " + R.str("s"));
    CDElement e;
    GaussQ at_inf = R.value_at_infinity();
    if (!at_inf.is_zero()) e.atomic_.emplace(t, at_inf.to_complex());
    RationalFunction tail = R - RationalFunction(at_inf);
    if (!tail.is_zero()) e.rational_.emplace(t, tail);
    return e;
}

bool CDElement::is_delay_free() const {
    auto nonzero = [](const auto& kv) { return sgn(kv.first) != 0; };
    return std::none_of(rational_.begin(), rational_.end(), nonzero) &&
           std::none_of(atomic_.begin(), atomic_.end(), nonzero);
}

void CDElement::prune() {
    std::erase_if(rational_, [](const auto& kv) { return kv.second.is_zero(); });
    std::erase_if(atomic_, [](const auto& kv) { return kv.second == 0.0; });
}

std::complex<double> CDElement::eval_l1_part(std::complex<double> s) const {
    std::complex<double> acc = 0.0;
    for (const auto& [t, R] : rational_) acc += R.eval(s) * shift(s, t);
    return acc;
}

std::complex<double> CDElement::eval(std::complex<double> s) const {
    std::complex<double> acc = eval_l1_part(s);
    for (const auto& [t, f] : atomic_) acc += f * shift(s, t);
    return acc;
}

ExponentialPolynomial CDElement::atomic_part() const {
    ExponentialPolynomial::Terms terms;
    for (const auto& [t, f] : atomic_) terms.emplace(trim_coords({mpq_class(-t)}), f);
    return ExponentialPolynomial({1.0}, std::move(terms));
}

std::optional<CDElement> CDElement::inverse_if_delay_free() const {
    if (!is_delay_free() || !atomic_.count(mpq_class(0))) return std::nullopt;
    GaussQ f0 = GaussQ::from_complex(atomic_.at(mpq_class(0)));
    RationalFunction whole(f0);
    if (auto it = rational_.find(mpq_class(0)); it != rational_.end()) whole += it->second;
    return CDElement::rational(whole.inverse());
}

CDElement operator+(const CDElement& a, const CDElement& b) {
    CDElement out = a;
    for (const auto& [t, R] : b.rational_) {
        auto [it, inserted] = out.rational_.emplace(t, R);
        if (!inserted) it->second += R;
    }
    for (const auto& [t, f] : b.atomic_) out.atomic_[t] += f;
    out.prune();
    return out;
}

CDElement CDElement::operator-() const {
    CDElement out = *this;
    for (auto& [t, R] : out.rational_) R = -R;
    for (auto& [t, f] : out.atomic_) f = -f;
    return out;
}

CDElement operator-(const CDElement& a, const CDElement& b) { return a + (-b); }

CDElement operator*(const CDElement& a, const CDElement& b) {
    CDElement out;
    auto add_rational = [&](const mpq_class& t, const RationalFunction& R) {
        auto [it, inserted] = out.rational_.emplace(t, R);
        if (!inserted) it->second += R;
    };
    for (const auto& [ta, fa] : a.atomic_) {
        for (const auto& [tb, fb] : b.atomic_) out.atomic_[ta + tb] += fa * fb;
        for (const auto& [tb, Rb] : b.rational_) add_rational(ta + tb, RationalFunction(GaussQ::from_complex(fa)) * Rb);
    }
    for (const auto& [ta, Ra] : a.rational_) {
        for (const auto& [tb, fb] : b.atomic_) add_rational(ta + tb, Ra * RationalFunction(GaussQ::from_complex(fb)));
        for (const auto& [tb, Rb] : b.rational_) add_rational(ta + tb, Ra * Rb);
    }
    out.prune();
    return out;
}

std::string CDElement::str() const {
    std::map<mpq_class, std::string> parts;
    for (const auto& [t, f] : atomic_) {
        parts[t] = f.imag() == 0.0 ? fmt::format("{:.17g}", f.real()) : fmt::format("({:.17g}{:+.17g}i)", f.real(), f.imag());
    }
    for (const auto& [t, R] : rational_) {
        auto& p = parts[t];
        p += (p.empty() ? "" : " + ") + ("(" + R.str("s") + ")");
    }
    if (parts.empty()) return "0";
    std::string out;
    for (const auto& [t, p] : parts) {
        if (!out.empty()) out += " + ";
        out += sgn(t) == 0 ? p : fmt::format("exp(-{}*s)*[{}]", rational_str(t), p);
    }
    return out;
}

bool cd_membership(const CDElement& F, double tol) {
    struct Pole {
        std::complex<double> p;
        int mult;
    };
    std::vector<Pole> all;
    for (const auto& [t, R] : F.rational_terms()) {
        if (sgn(t) < 0) return false;
        if (R.den().degree() < 1) continue;
        for (const auto& r : poly_roots(R.den())) all.push_back({r.value, r.multiplicity});
    }
    std::vector<bool> done(all.size(), false);
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (done[i] || all[i].p.real() <= -tol) continue;
        // cluster numerically coincident poles
        std::complex<double> center = all[i].p;
        int mult = 0;
        double nearest_other = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < all.size(); ++j) {
            double d = std::abs(all[j].p - center);
            if (d < 1e-6) {
                done[j] = true;
                mult += all[j].mult;
            } else {
                nearest_other = std::min(nearest_other, d);
            }
        }
        const double rho = std::min(0.5, 0.4 * nearest_other);
        constexpr int M = 256;
        std::vector<std::complex<double>> principal(static_cast<std::size_t>(mult) + 1, 0.0);
        double scale = 0.0;
        for (int m = 0; m < M; ++m) {
            std::complex<double> u = std::polar(rho, 2.0 * kPi * m / M);
            std::complex<double> s = center + u;
            std::complex<double> g = 0.0;
            for (const auto& [t, R] : F.rational_terms()) {
                std::complex<double> term = R.eval(s) * std::exp(-s * t.get_d());
                g += term;
                scale = std::max(scale, std::abs(term));
            }
            std::complex<double> upow = 1.0;
            for (int j = 1; j <= mult; ++j) {
                upow *= u;
                principal[static_cast<std::size_t>(j)] += g * upow / static_cast<double>(M);
            }
        }
        for (int j = 1; j <= mult; ++j) {
            if (std::abs(principal[static_cast<std::size_t>(j)]) * std::pow(rho, -j) > 1e-8 * scale) return false;
        }
    }
    return true;
}

IndexOutcome cd_index(const CDElement& F, double min_modulus_floor) {
    ExponentialPolynomial ap = F.atomic_part();
    if (ap.is_zero()) return IndexOutcome::not_invertible("atomic part vanishes");
    MinModulusBound mm = certified_min_modulus(ap);
    if (!(mm.bound > min_modulus_floor)) {
        return IndexOutcome::not_invertible(fmt::format("atomic part comes within {:.3g} of zero", mm.bound),
                                            !mm.certified);
    }
    try {
        WindingResult w_ap = average_winding(ap);
        // y = tan(theta) closes the axis at infinity, where the L1 part vanishes
        CurveEvaluator curve{[&](double t) -> std::complex<double> {
                                 if (t <= 0.0 || t >= 1.0) return 1.0;
                                 double y = std::tan(kPi * (t - 0.5));
                                 return 1.0 + F.eval_l1_part({0.0, y}) / ap.eval(y);
                             },
                             std::nullopt};
        WindingConfig cfg;
        cfg.min_modulus_floor = min_modulus_floor;
        cfg.max_samples = max_samples_from_env(cfg.max_samples);
        WindingResult w = winding_number(curve, cfg);
        return IndexOutcome::invertible(PairIndex{w_ap.value, static_cast<long long>(w.value)},
                                        w.min_modulus * mm.bound, mm.certified && w_ap.certified && w.certified);
    } catch (const UnresolvedError& e) {
        return IndexOutcome::not_invertible(fmt::format("{} (last estimate {:.6g})", e.what(), e.last_estimate()), true);
    } catch (const Error& e) {
        return IndexOutcome::not_invertible(e.what(), true);
    }
}

std::optional<int> cd_rhp_zero_count(const CDElement& F) {
    ExponentialPolynomial ap = F.atomic_part();
    if (ap.is_zero()) return std::nullopt;
    MinModulusBound mm = certified_min_modulus(ap);
    if (!mm.certified || !(mm.bound > 1e-9)) return std::nullopt;
    // Radius beyond which sum |R_k(s)| < m/2 on the closed half plane.
    double max_pole = 0.0;
    struct Bound {
        std::vector<double> num_abs;
        std::vector<std::pair<double, int>> poles;
    };
    std::vector<Bound> bounds;
    for (const auto& [t, R] : F.rational_terms()) {
        Bound b;
        for (int k = 0; k <= R.num().degree(); ++k) b.num_abs.push_back(std::abs(R.num().coeff(k).to_complex()));
        for (const auto& r : poly_roots(R.den())) {
            if (std::abs(r.value.real()) < 1e-6) return std::nullopt;  // pole on the contour
            b.poles.emplace_back(std::abs(r.value), r.multiplicity);
            max_pole = std::max(max_pole, std::abs(r.value));
        }
        bounds.push_back(std::move(b));
    }
    double radius = 2.0 * (max_pole + 1.0);
    auto tail = [&](double r) {
        double total = 0.0;
        for (const auto& b : bounds) {
            double num = 0.0;
            for (std::size_t k = 0; k < b.num_abs.size(); ++k) num += b.num_abs[k] * std::pow(r, static_cast<double>(k));
            double den = 1.0;
            for (const auto& [m, mult] : b.poles) den *= std::pow(r - m, mult);
            total += num / den;
        }
        return total;
    };
    while (tail(radius) >= mm.bound / 2.0) {
        radius *= 2.0;
        if (radius > 1e7) return std::nullopt;
    }
    CurveEvaluator contour{[&](double t) {
                               std::complex<double> s =
                                   t <= 0.5 ? std::complex<double>(0.0, radius * (1.0 - 4.0 * t))
                                            : std::polar(radius, -kPi / 2.0 + kPi * (2.0 * t - 1.0));
                               return F.eval(s);
                           },
                           std::nullopt};
    WindingConfig cfg;
    cfg.initial_samples = 4096;
    cfg.max_samples = max_samples_from_env(std::size_t{1} << 23);
    try {
        WindingResult w = winding_number(contour, cfg);
        if (!w.certified) return std::nullopt;
        return static_cast<int>(w.value);
    } catch (const Error&) {
        return std::nullopt;
    }
}

bool CDRing::equal(const Element& a, const Element& b) const {
    auto va = boundary_values(a), vb = boundary_values(b);
    return detail::values_close(va, vb, 1e-9);
}

std::optional<bool> CDRing::invertible_in_R(const Element& f) const {
    if (!cd_membership(f)) return false;
    ExponentialPolynomial ap = f.atomic_part();
    if (ap.is_zero()) return false;
    // atomic part as a polynomial in w = e^{-s/L}; the closed half plane maps to the closed disk
    mpz_class L = 1;
    for (const auto& [t, c] : f.atomic_terms()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), t.get_den_mpz_t());
    std::vector<std::complex<double>> p;
    for (const auto& [t, c] : f.atomic_terms()) {
        mpz_class e(t * L);
        if (e > 4096) return std::nullopt;
        auto k = static_cast<std::size_t>(e.get_ui());
        if (p.size() <= k) p.resize(k + 1);
        p[k] += c;
    }
    if (p[0] == 0.0) return false;
    for (auto r : numeric_roots(p)) {
        if (std::abs(r) < 1.0 - 1e-9) return false;
        if (std::abs(r) <= 1.0 + 1e-9) return std::nullopt;
    }
    auto zeros = cd_rhp_zero_count(f);
    if (!zeros) return std::nullopt;
    return *zeros == 0;
}

std::vector<std::complex<double>> CDRing::boundary_values(const Element& f) const {
    std::vector<std::complex<double>> out;
    for (double y : {-17.0, -5.0, -1.0, 0.0, 0.7, 3.0, 41.0}) out.push_back(f.eval({0.0, y}));
    for (std::complex<double> s : {std::complex<double>(0.5, 2.0), {2.0, -1.0}, {0.1, 0.0}}) out.push_back(f.eval(s));
    return out;
}

double cd_grid_distance(const CDElement& F, const CDElement& G, double Y, int samples) {
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        double y = -Y + 2.0 * Y * k / (samples - 1);
        worst = std::max(worst, std::abs(F.eval({0.0, y}) - G.eval({0.0, y})));
    }
    for (int k = 1; k < 2000; ++k) {
        double y = std::tan(kPi / 2.0 * k / 2000.0);
        worst = std::max({worst, std::abs(F.eval({0.0, y}) - G.eval({0.0, y})),
                          std::abs(F.eval({0.0, -y}) - G.eval({0.0, -y}))});
    }
    return worst;
}

}  // namespace nyq
