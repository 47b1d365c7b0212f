#pragma once

#include <complex>
#include <string>

#include "nyq/poly.hpp"

namespace nyq {

/// num/den with gcd(num, den) = 1 and den monic. Zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}
    RationalFunction(GaussQ c) : num_(std::move(c)), den_(1) {}
    RationalFunction(Poly p) : num_(std::move(p)), den_(1) {}
    /// Throws ZeroDivision when den is zero.
    RationalFunction(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    bool is_proper() const { return num_.degree() <= den_.degree(); }
    bool is_strictly_proper() const { return num_.degree() < den_.degree(); }
    /// Limit at infinity; requires a proper function.
    GaussQ value_at_infinity() const;

    RationalFunction inverse() const;
    RationalFunction pow(int n) const;

    std::complex<double> eval(std::complex<double> z) const;
    GaussQ eval(const GaussQ& z) const;

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str(const std::string& var = "z") const;

private:
    struct Raw {};
    RationalFunction(Raw, Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    Poly num_;
    Poly den_;
};

/// Integer winding of t -> f(e^{it}) via the argument principle:
/// (#zeros in the open disk) - (#poles in the open disk), with multiplicity.
/// Throws DegenerateBoundary when a zero or pole lies within boundary_tol of the unit circle.
int disk_winding_exact(const RationalFunction& f, double boundary_tol = 1e-9);

}  // namespace nyq
