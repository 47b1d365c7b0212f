#include "nyq/exponential_polynomial.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "nyq/error.hpp"
#include "nyq/gaussian.hpp"

namespace nyq {

bool CoordsLess::operator()(const FrequencyCoords& a, const FrequencyCoords& b) const {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
        const mpq_class zero(0);
        const mpq_class& x = k < a.size() ? a[k] : zero;
        const mpq_class& y = k < b.size() ? b[k] : zero;
        if (x < y) return true;
        if (y < x) return false;
    }
    return false;
}

FrequencyCoords trim_coords(FrequencyCoords c) {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
    return c;
}

ExponentialPolynomial::ExponentialPolynomial(std::complex<double> c) : basis_{1.0} {
    if (c != 0.0) terms_.emplace(FrequencyCoords{}, c);
}

ExponentialPolynomial::ExponentialPolynomial(std::vector<double> basis, Terms terms)
    : basis_(std::move(basis)) {
    if (basis_.empty() || basis_[0] != 1.0) throw Error(ErrorKind::InvalidArgument, "frequency basis must start with 1");
    for (auto& [coords, coeff] : terms) {
        FrequencyCoords t = trim_coords(coords);
        if (t.size() > basis_.size()) throw Error(ErrorKind::InvalidArgument, "coordinates longer than the basis");
        terms_[t] += coeff;
    }
    prune();
}

ExponentialPolynomial ExponentialPolynomial::exponential(FrequencyCoords coords, std::complex<double> coefficient,
                                                         std::vector<double> basis) {
    Terms t;
    t.emplace(std::move(coords), coefficient);
    return ExponentialPolynomial(std::move(basis), std::move(t));
}

ExponentialPolynomial ExponentialPolynomial::exponential(const mpq_class& q, std::complex<double> coefficient) {
    return exponential(FrequencyCoords{q}, coefficient, {1.0});
}

void ExponentialPolynomial::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0.0) it = terms_.erase(it);
        else ++it;
    }
}

double ExponentialPolynomial::frequency(const FrequencyCoords& coords) const {
    double f = 0.0;
    for (std::size_t k = 0; k < coords.size(); ++k) f += coords[k].get_d() * basis_.at(k);
    return f;
}

std::vector<double> ExponentialPolynomial::spectrum() const {
    std::vector<double> out;
    for (const auto& [coords, coeff] : terms_) out.push_back(frequency(coords));
    std::sort(out.begin(), out.end());
    return out;
}

std::complex<double> ExponentialPolynomial::mean() const {
    auto it = terms_.find(FrequencyCoords{});
    return it == terms_.end() ? std::complex<double>(0.0) : it->second;
}

double ExponentialPolynomial::l1_norm() const {
    double s = 0.0;
    for (const auto& [coords, coeff] : terms_) s += std::abs(coeff);
    return s;
}

double ExponentialPolynomial::lipschitz() const {
    double s = 0.0;
    for (const auto& [coords, coeff] : terms_) s += std::abs(frequency(coords)) * std::abs(coeff);
    return s;
}

bool ExponentialPolynomial::is_commensurable() const {
    for (const auto& [coords, coeff] : terms_)
        if (coords.size() > 1) return false;
    return true;
}

bool ExponentialPolynomial::has_nonnegative_spectrum() const {
    for (const auto& [coords, coeff] : terms_) {
        if (coords.size() <= 1) {
            if (!coords.empty() && sgn(coords[0]) < 0) return false;
        } else if (frequency(coords) < 0.0) {
            return false;
        }
    }
    return true;
}

std::complex<double> ExponentialPolynomial::eval(double y) const {
    std::complex<double> acc = 0.0;
    for (const auto& [coords, coeff] : terms_) acc += coeff * std::polar(1.0, frequency(coords) * y);
    return acc;
}

std::complex<double> ExponentialPolynomial::eval(std::complex<double> s) const {
    const std::complex<double> i(0.0, 1.0);
    std::complex<double> acc = 0.0;
    for (const auto& [coords, coeff] : terms_) acc += coeff * std::exp(i * frequency(coords) * s);
    return acc;
}

std::vector<double> ExponentialPolynomial::merged_basis(const std::vector<double>& a, const std::vector<double>& b) {
    const auto& longer = a.size() >= b.size() ? a : b;
    const auto& shorter = a.size() >= b.size() ? b : a;
    if (!std::equal(shorter.begin(), shorter.end(), longer.begin())) {
        throw Error(ErrorKind::InvalidArgument, "incompatible frequency bases");
    }
    return longer;
}

ExponentialPolynomial& ExponentialPolynomial::operator+=(const ExponentialPolynomial& o) {
    basis_ = merged_basis(basis_, o.basis_);
    for (const auto& [coords, coeff] : o.terms_) terms_[coords] += coeff;
    prune();
    return *this;
}

ExponentialPolynomial& ExponentialPolynomial::operator-=(const ExponentialPolynomial& o) {
    basis_ = merged_basis(basis_, o.basis_);
    for (const auto& [coords, coeff] : o.terms_) terms_[coords] -= coeff;
    prune();
    return *this;
}

ExponentialPolynomial operator*(const ExponentialPolynomial& a, const ExponentialPolynomial& b) {
    ExponentialPolynomial out;
    out.basis_ = ExponentialPolynomial::merged_basis(a.basis_, b.basis_);
    for (const auto& [ca, fa] : a.terms_)
        for (const auto& [cb, fb] : b.terms_) {
            FrequencyCoords sum(std::max(ca.size(), cb.size()));
            for (std::size_t k = 0; k < sum.size(); ++k) {
                if (k < ca.size()) sum[k] += ca[k];
                if (k < cb.size()) sum[k] += cb[k];
            }
            out.terms_[trim_coords(std::move(sum))] += fa * fb;
        }
    out.prune();
    return out;
}

ExponentialPolynomial ExponentialPolynomial::operator-() const {
    ExponentialPolynomial out = *this;
    for (auto& [coords, coeff] : out.terms_) coeff = -coeff;
    return out;
}

bool operator==(const ExponentialPolynomial& a, const ExponentialPolynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib) {
        if (CoordsLess{}(ia->first, ib->first) || CoordsLess{}(ib->first, ia->first)) return false;
        if (ia->second != ib->second) return false;
    }
    return true;
}

double ExponentialPolynomial::distance(const ExponentialPolynomial& a, const ExponentialPolynomial& b) {
    ExponentialPolynomial d = a - b;
    double m = 0.0;
    for (const auto& [coords, coeff] : d.terms_) m = std::max(m, std::abs(coeff));
    return m;
}

std::string ExponentialPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [coords, coeff] : terms_) {
        if (!out.empty()) out += " + ";
        std::string c = coeff.imag() == 0.0 ? fmt::format("{:g}", coeff.real())
                                             : fmt::format("({:g}{:+g}i)", coeff.real(), coeff.imag());
        if (coords.empty()) {
            out += c;
            continue;
        }
        std::string lam;
        for (std::size_t k = 0; k < coords.size(); ++k) {
            if (sgn(coords[k]) == 0) continue;
            if (!lam.empty()) lam += ",";
            lam += rational_str(coords[k]);
        }
        out += c + "*e(" + lam + ")";
    }
    return out;
}

}  // namespace nyq
