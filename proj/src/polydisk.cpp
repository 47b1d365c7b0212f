#include "nyq/polydisk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "nyq/disk_ring.hpp"
#include "nyq/error.hpp"
#include "nyq/rational_function.hpp"
#include "nyq/roots.hpp"

namespace nyq {

namespace {

constexpr double kPi = std::numbers::pi;

using NumericTerms = std::map<std::vector<int>, std::complex<double>>;

NumericTerms to_numeric(const MultiPoly& f) {
    NumericTerms out;
    for (const auto& [e, c] : f.terms()) out[e] += c.to_complex();
    return out;
}

// Fix the last variable at w.
NumericTerms fix_last(const NumericTerms& f, std::complex<double> w) {
    NumericTerms out;
    for (const auto& [e, c] : f) {
        std::vector<int> head(e.begin(), e.end() - 1);
        out[head] += c * std::pow(w, e.back());
    }
    return out;
}

// Coefficients in the last variable with all others at zero.
std::vector<std::complex<double>> last_variable_at_origin(const NumericTerms& f) {
    std::vector<std::complex<double>> c;
    for (const auto& [e, v] : f) {
        if (std::any_of(e.begin(), e.end() - 1, [](int a) { return a != 0; })) continue;
        auto k = static_cast<std::size_t>(e.back());
        if (c.size() <= k) c.resize(k + 1);
        c[k] += v;
    }
    return c;
}

struct ZeroFree {
    std::optional<bool> answer;
    double margin = std::numeric_limits<double>::infinity();  // distance of the nearest root to the circle
};

ZeroFree univariate_zero_free(const std::vector<std::complex<double>>& c) {
    std::vector<std::complex<double>> t = c;
    while (!t.empty() && std::abs(t.back()) < 1e-300) t.pop_back();
    if (t.empty()) return {false, 0.0};
    ZeroFree z{true, std::numeric_limits<double>::infinity()};
    for (auto r : numeric_roots(t)) {
        double m = std::abs(r);
        z.margin = std::min(z.margin, std::abs(m - 1.0));
        if (m < 1.0 - 1e-9) return {false, z.margin};
        if (m <= 1.0 + 1e-9) z.answer = std::nullopt;
    }
    return z;
}

ZeroFree zero_free(const NumericTerms& f, int n) {
    if (n == 1) {
        std::vector<std::complex<double>> c;
        for (const auto& [e, v] : f) {
            auto k = static_cast<std::size_t>(e[0]);
            if (c.size() <= k) c.resize(k + 1);
            c[k] += v;
        }
        return univariate_zero_free(c);
    }
    ZeroFree result = univariate_zero_free(last_variable_at_origin(f));
    if (result.answer == false) return result;
    constexpr int kGrid = 96;
    for (int k = 0; k < kGrid; ++k) {
        ZeroFree sub = zero_free(fix_last(f, std::polar(1.0, 2.0 * kPi * k / kGrid)), n - 1);
        result.margin = std::min(result.margin, sub.margin);
        if (sub.answer == false) return {false, result.margin};
        if (!sub.answer) result.answer = std::nullopt;
    }
    return result;
}

}  // namespace

MultiPoly::MultiPoly(int nvars, const GaussQ& c) : n_(nvars) {
    if (!c.is_zero()) terms_.emplace(Exponent(static_cast<std::size_t>(nvars), 0), c);
}

MultiPoly::MultiPoly(int nvars, Terms terms) : n_(nvars) {
    for (auto& [e, c] : terms) {
        if (static_cast<int>(e.size()) != nvars) throw Error(ErrorKind::DimensionMismatch, "exponent length differs from variable count");
        if (std::any_of(e.begin(), e.end(), [](int a) { return a < 0; })) throw Error(ErrorKind::InvalidArgument, "negative exponent");
        if (!c.is_zero()) terms_[e] = terms_[e] + c;
    }
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

MultiPoly MultiPoly::variable(int nvars, int j) {
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e.at(static_cast<std::size_t>(j)) = 1;
    return MultiPoly(nvars, Terms{{e, GaussQ(1)}});
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

GaussQ MultiPoly::constant_term() const {
    auto it = terms_.find(Exponent(static_cast<std::size_t>(n_), 0));
    return it == terms_.end() ? GaussQ(0) : it->second;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int a : e) s += a;
        d = std::max(d, s);
    }
    return d;
}

std::complex<double> MultiPoly::eval(std::span<const std::complex<double>> z) const {
    if (static_cast<int>(z.size()) != n_) throw Error(ErrorKind::DimensionMismatch, "point dimension");
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> term = c.to_complex();
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j]) term *= std::pow(z[j], e[j]);
        acc += term;
    }
    return acc;
}

GaussQ MultiPoly::eval(std::span<const GaussQ> z) const {
    if (static_cast<int>(z.size()) != n_) throw Error(ErrorKind::DimensionMismatch, "point dimension");
    GaussQ acc(0);
    for (const auto& [e, c] : terms_) {
        GaussQ term = c;
        for (std::size_t j = 0; j < e.size(); ++j)
            for (int k = 0; k < e[j]; ++k) term = term * z[j];
        acc = acc + term;
    }
    return acc;
}

Poly MultiPoly::diagonal() const {
    Poly out;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int a : e) d += a;
        out += Poly(c) * Poly::monomial(d);
    }
    return out;
}

double MultiPoly::torus_lipschitz() const {
    double L = 0.0;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int a : e) d += a;
        L += std::abs(c.to_complex()) * d;
    }
    return L;
}

bool MultiPoly::constant_dominates() const {
    double c0 = std::abs(constant_term().to_complex()), rest = 0.0;
    for (const auto& [e, c] : terms_) rest += std::abs(c.to_complex());
    return c0 > rest - c0;
}

void MultiPoly::require_same(const MultiPoly& o) const {
    if (n_ != o.n_) throw Error(ErrorKind::DimensionMismatch, "polynomials in different numbers of variables");
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.n_ != b.n_ && a.is_constant()) return MultiPoly(b.n_, a.constant_term()) + b;
    if (a.n_ != b.n_ && b.is_constant()) return a + MultiPoly(a.n_, b.constant_term());
    a.require_same(b);
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms_) out.terms_[e] = out.terms_[e] + c;
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = GaussQ(0) - c;
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.n_ != b.n_ && a.is_constant()) return MultiPoly(b.n_, a.constant_term()) * b;
    if (a.n_ != b.n_ && b.is_constant()) return a * MultiPoly(a.n_, b.constant_term());
    a.require_same(b);
    MultiPoly out(a.n_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            MultiPoly::Exponent e(ea.size());
            for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
            out.terms_[e] = out.terms_[e] + ca * cb;
        }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += fmt::format("z{}", j + 1);
            if (e[j] > 1) mono += fmt::format("^{}", e[j]);
        }
        std::string coeff = c.str();
        if (!c.is_real()) coeff = "(" + coeff + ")";
        if (!out.empty()) out += " + ";
        if (mono.empty()) out += coeff;
        else if (c == GaussQ(1)) out += mono;
        else out += coeff + "*" + mono;
    }
    return out;
}

PolyRatio::PolyRatio(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(ErrorKind::ZeroDivision, "zero denominator");
    if (num_.nvars() != den_.nvars()) {
        // constants may be promoted to the other side's variable count
        if (num_.is_constant()) num_ = MultiPoly(den_.nvars(), num_.constant_term());
        else if (den_.is_constant()) den_ = MultiPoly(num_.nvars(), den_.constant_term());
        else throw Error(ErrorKind::DimensionMismatch, "numerator and denominator variable counts differ");
    }
    if (den_.is_constant() && !(den_.constant_term() == GaussQ(1))) {
        GaussQ c = den_.constant_term().inverse();
        num_ = num_ * MultiPoly(num_.nvars(), c);
        den_ = MultiPoly(num_.nvars(), GaussQ(1));
    }
}

PolyRatio operator+(const PolyRatio& a, const PolyRatio& b) {
    if (a.den_ == b.den_) return PolyRatio(a.num_ + b.num_, a.den_);
    return PolyRatio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

PolyRatio operator-(const PolyRatio& a, const PolyRatio& b) { return a + (-b); }

PolyRatio operator*(const PolyRatio& a, const PolyRatio& b) { return PolyRatio(a.num_ * b.num_, a.den_ * b.den_); }

std::string PolyRatio::str() const {
    if (den_.is_constant()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

TorusMinimum torus_minimum(const MultiPoly& f, std::size_t max_points) {
    TorusMinimum out;
    if (f.is_zero()) return out;
    const int n = f.nvars();
    const double L = f.torus_lipschitz();
    std::vector<std::pair<std::vector<int>, std::complex<double>>> terms;
    for (const auto& [e, c] : f.terms()) terms.emplace_back(e, c.to_complex());
    for (std::size_t N = 16;; N *= 2) {
        std::size_t total = 1;
        for (int j = 0; j < n; ++j) total *= N;
        if (total > max_points) return out;  // keeps the previous, uncertified estimate
        std::vector<std::complex<double>> unit(N);
        for (std::size_t k = 0; k < N; ++k) unit[k] = std::polar(1.0, 2.0 * kPi * static_cast<double>(k) / static_cast<double>(N));
        std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
        double m = std::numeric_limits<double>::infinity();
        for (std::size_t p = 0; p < total; ++p) {
            std::complex<double> acc = 0.0;
            for (const auto& [e, c] : terms) {
                std::size_t phase = 0;
                for (int j = 0; j < n; ++j) phase += idx[static_cast<std::size_t>(j)] * static_cast<std::size_t>(e[static_cast<std::size_t>(j)]);
                acc += c * unit[phase % N];
            }
            m = std::min(m, std::abs(acc));
            for (int j = 0; j < n; ++j) {
                if (++idx[static_cast<std::size_t>(j)] < N) break;
                idx[static_cast<std::size_t>(j)] = 0;
            }
        }
        const double h = 2.0 * kPi / static_cast<double>(N);
        out.grid_min = m;
        out.points = total;
        out.bound = m;
        if (L * h / 2.0 < m / 2.0) {
            out.bound = m / 2.0;
            out.certified = true;
            return out;
        }
    }
}

IndexOutcome polydisk_index(const PolyRatio& f, double tol) {
    const MultiPoly& q = f.den();
    if (!q.is_constant() && !q.constant_dominates() && polydisk_zero_free(q) != true) {
        throw Error(ErrorKind::Membership, "denominator is not certified zero-free on the closed polydisk: " + q.str());
    }
    const MultiPoly& p = f.num();
    if (p.is_zero()) return IndexOutcome::not_invertible("zero function");
    TorusMinimum tm = torus_minimum(p);
    if (tm.grid_min < 1e-12) return IndexOutcome::not_invertible("zero on the torus", true);
    IndexOutcome diag = disk_index(RationalFunction(p.diagonal(), q.diagonal()), tol);
    if (!diag.invertible_in_S) {
        diag.note = "diagonal restriction: " + diag.note;
        return diag;
    }
    return IndexOutcome::invertible(*diag.index, std::min(tm.bound, diag.certificate.min_modulus),
                                    tm.certified && diag.certificate.certified,
                                    tm.certified ? "" : "torus minimum not certified within the grid cap");
}

std::optional<bool> polydisk_zero_free(const MultiPoly& f) {
    if (f.is_zero()) return false;
    if (f.constant_dominates()) return true;
    ZeroFree z = zero_free(to_numeric(f), f.nvars());
    if (z.answer == true && z.margin < 1e-3) return std::nullopt;  // grid may have stepped over a crossing
    return z.answer;
}

bool PolydiskRing::is_member(const Element& f) const {
    const MultiPoly& q = f.den();
    return f.nvars() == n_ && (q.is_constant() || q.constant_dominates() || polydisk_zero_free(q) == true);
}

std::optional<bool> PolydiskRing::invertible_in_R(const Element& f) const {
    if (!is_member(f)) return false;
    return polydisk_zero_free(f.num());
}

std::vector<std::complex<double>> PolydiskRing::boundary_values(const Element& f) const {
    std::vector<std::complex<double>> out;
    for (int k = 0; k < 8; ++k) {
        std::vector<std::complex<double>> z(static_cast<std::size_t>(n_));
        for (int j = 0; j < n_; ++j) z[static_cast<std::size_t>(j)] = std::polar(1.0, 0.3 + 0.77 * k + 1.9 * j);
        out.push_back(f.eval(z));
        for (auto& w : z) w *= 0.6;
        out.push_back(f.eval(z));
    }
    return out;
}

}  // namespace nyq
