#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "nyq/gaussian.hpp"

namespace nyq {

/// Univariate polynomial over the Gaussian rationals, coefficients ascending by degree.
/// The zero polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    Poly(long c) : Poly(GaussQ(c)) {}
    Poly(GaussQ c);
    explicit Poly(std::vector<GaussQ> coeffs);

    static Poly monomial(int degree, GaussQ c = GaussQ(1));
    /// z - root
    static Poly linear(const GaussQ& root);
    /// Parses an ascending array of coefficient strings.
    static Poly from_strings(const std::vector<std::string>& coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const GaussQ& leading() const;
    GaussQ coeff(int k) const;
    const std::vector<GaussQ>& coeffs() const { return coeffs_; }
    std::vector<std::string> to_strings() const;

    Poly monic() const;
    Poly derivative() const;
    Poly pow(unsigned n) const;
    /// p(-z)
    Poly reflect() const;

    GaussQ eval(const GaussQ& z) const;
    std::complex<double> eval(std::complex<double> z) const;
    std::complex<long double> eval(std::complex<long double> z) const;
    std::vector<std::complex<double>> to_complex() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    std::string str(const std::string& var = "z") const;

private:
    void trim();
    std::vector<GaussQ> coeffs_;
};

/// Quotient and remainder. Throws ZeroDivision when the divisor is zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Exact quotient; throws InvalidArgument if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic gcd. Throws InvalidArgument when both arguments are zero.
Poly poly_gcd(const Poly& p, const Poly& q);

struct Bezout {
    Poly s, t, g;  // s p + t q = g, g monic
};
Bezout extended_gcd(const Poly& p, const Poly& q);

/// Square-free decomposition p = c * prod f_k^{m_k}, with monic pairwise coprime square-free f_k.
std::vector<std::pair<Poly, int>> square_free(const Poly& p);

}  // namespace nyq
