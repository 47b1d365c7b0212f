#include "nyq/poly.hpp"

#include <cstdint>
#include <optional>

#include "nyq/error.hpp"

namespace nyq {

Poly::Poly(GaussQ c) {
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

Poly::Poly(std::vector<GaussQ> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int degree, GaussQ c) {
    if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative monomial degree");
    std::vector<GaussQ> v(static_cast<std::size_t>(degree) + 1);
    v.back() = std::move(c);
    return Poly(std::move(v));
}

Poly Poly::linear(const GaussQ& root) { return Poly(std::vector<GaussQ>{-root, GaussQ(1)}); }

Poly Poly::from_strings(const std::vector<std::string>& coeffs) {
    std::vector<GaussQ> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs) v.push_back(parse_gauss(c));
    return Poly(std::move(v));
}

std::vector<std::string> Poly::to_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.str());
    return out;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const GaussQ& Poly::leading() const {
    if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "leading coefficient of zero polynomial");
    return coeffs_.back();
}

GaussQ Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return GaussQ();
    return coeffs_[static_cast<std::size_t>(k)];
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    GaussQ inv = leading().inverse();
    std::vector<GaussQ> v = coeffs_;
    for (auto& c : v) c *= inv;
    return Poly(std::move(v));
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<GaussQ> v(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * GaussQ(static_cast<long>(k));
    return Poly(std::move(v));
}

Poly Poly::pow(unsigned n) const {
    Poly result(1), base = *this;
    while (n) {
        if (n & 1u) result *= base;
        n >>= 1u;
        if (n) base *= base;
    }
    return result;
}

Poly Poly::reflect() const {
    std::vector<GaussQ> v = coeffs_;
    for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
    return Poly(std::move(v));
}

GaussQ Poly::eval(const GaussQ& z) const {
    GaussQ acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::complex<double> Poly::eval(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->to_complex();
    return acc;
}

std::complex<long double> Poly::eval(std::complex<long double> z) const {
    std::complex<long double> acc = 0.0L;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->to_complex_ld();
    return acc;
}

std::vector<std::complex<double>> Poly::to_complex() const {
    std::vector<std::complex<double>> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(c.to_complex());
    return v;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<GaussQ> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::operator-() const {
    std::vector<GaussQ> v = coeffs_;
    for (auto& c : v) c = -c;
    return Poly(std::move(v));
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const GaussQ& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool complex_coeff = !c.is_real() && sgn(c.re()) != 0;
        if (complex_coeff) cs = "(" + cs + ")";
        bool negative = !complex_coeff && cs[0] == '-';
        if (negative) cs = cs.substr(1);
        if (!out.empty()) out += negative ? " - " : " + ";
        else if (negative) out += "-";
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (k == 0) out += cs;
        else if (cs == "1") out += mono;
        else out += cs + " " + mono;
    }
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorKind::ZeroDivision, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<GaussQ> rem = a.coeffs();
    std::vector<GaussQ> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const GaussQ inv = b.leading().inverse();
    const int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        GaussQ c = rem[static_cast<std::size_t>(k)] * inv;
        if (c.is_zero()) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
        quot[static_cast<std::size_t>(k - db)] = std::move(c);
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
    return q;
}

namespace {

// Arithmetic in F_p with p = 1 mod 4, where i maps to a square root of -1.
struct ModP {
    std::uint64_t p, sqrt_m1;

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        for (; e; e >>= 1, a = mul(a, a))
            if (e & 1) r = mul(r, a);
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
    std::optional<std::uint64_t> of(const mpq_class& q) const {
        std::uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), p);
        if (d == 0) return std::nullopt;
        return mul(mpz_fdiv_ui(q.get_num_mpz_t(), p), inv(d));
    }
    std::optional<std::uint64_t> of(const GaussQ& c) const {
        auto re = of(c.re()), im = of(c.im());
        if (!re || !im) return std::nullopt;
        return (*re + mul(*im, sqrt_m1)) % p;
    }
    // Image of the polynomial, or nullopt if a denominator or the leading coefficient vanishes.
    std::optional<std::vector<std::uint64_t>> image(const Poly& f) const {
        std::vector<std::uint64_t> out;
        for (const auto& c : f.coeffs()) {
            auto v = of(c);
            if (!v) return std::nullopt;
            out.push_back(*v);
        }
        if (out.empty() || out.back() == 0) return std::nullopt;
        return out;
    }
    int gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) const {
        auto trim = [](std::vector<std::uint64_t>& v) {
            while (!v.empty() && v.back() == 0) v.pop_back();
        };
        while (!b.empty()) {
            if (a.size() >= b.size()) {
                std::uint64_t f = inv(b.back());
                while (a.size() >= b.size()) {
                    std::uint64_t c = mul(a.back(), f);
                    std::size_t shift = a.size() - b.size();
                    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + p - mul(c, b[j])) % p;
                    trim(a);
                    if (a.empty()) break;
                }
            }
            std::swap(a, b);
        }
        return static_cast<int>(a.size()) - 1;
    }
};

// Sound coprimality certificate: a good prime can only raise the gcd degree.
bool coprime_mod_p(const Poly& f, const Poly& g) {
    static const std::vector<ModP> primes = [] {
        std::vector<ModP> out;
        for (std::uint64_t p : {2305843009213693921ULL, 998244353ULL}) {
            ModP m{p, 0};
            // square root of -1 from a quadratic non-residue
            for (std::uint64_t a = 2; m.sqrt_m1 == 0; ++a)
                if (m.pow(a, (p - 1) / 2) == p - 1) m.sqrt_m1 = m.pow(a, (p - 1) / 4);
            out.push_back(m);
        }
        return out;
    }();
    for (const auto& m : primes) {
        auto a = m.image(f), b = m.image(g);
        if (a && b && m.gcd_degree(*a, *b) == 0) return true;
    }
    return false;
}

}  // namespace

Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) throw Error(ErrorKind::InvalidArgument, "gcd of two zero polynomials");
    if (!p.is_zero() && !q.is_zero() && p.degree() > 0 && q.degree() > 0 && coprime_mod_p(p, q)) return Poly(1);
    Poly a = p.monic(), b = q.monic();
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Bezout extended_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) throw Error(ErrorKind::InvalidArgument, "gcd of two zero polynomials");
    Poly r0 = p, r1 = q;
    Poly s0(1), s1, t0, t1(1);
    while (!r1.is_zero()) {
        auto [quot, rem] = divmod(r0, r1);
        Poly s2 = s0 - quot * s1;
        Poly t2 = t0 - quot * t1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    GaussQ inv = r0.leading().inverse();
    return {s0 * Poly(inv), t0 * Poly(inv), r0 * Poly(inv)};
}

std::vector<std::pair<Poly, int>> square_free(const Poly& p) {
    std::vector<std::pair<Poly, int>> out;
    if (p.is_constant()) return out;
    // Yun's algorithm (characteristic zero)
    Poly f = p.monic();
    Poly df = f.derivative();
    Poly a = poly_gcd(f, df);
    Poly b = exact_div(f, a);
    Poly c = exact_div(df, a);
    Poly d = c - b.derivative();
    int mult = 1;
    while (!b.is_constant()) {
        Poly g = poly_gcd(b, d);
        if (!g.is_constant()) out.emplace_back(g, mult);
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b.derivative();
        ++mult;
    }
    return out;
}

}  // namespace nyq
