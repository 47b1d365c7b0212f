#include "nyq/rational_function.hpp"

#include "nyq/error.hpp"
#include "nyq/roots.hpp"

namespace nyq {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(ErrorKind::ZeroDivision, "rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (den_.degree() > 0 && num_.degree() > 0) {
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    GaussQ lc = den_.leading();
    if (!(lc == GaussQ(1))) {
        Poly scale(lc.inverse());
        num_ *= scale;
        den_ *= scale;
    }
}

GaussQ RationalFunction::value_at_infinity() const {
    if (!is_proper()) throw Error(ErrorKind::InvalidArgument, "improper rational function has no value at infinity");
    if (num_.degree() < den_.degree()) return GaussQ();
    return num_.leading() / den_.leading();
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw Error(ErrorKind::ZeroDivision, "inverse of zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    return RationalFunction(Raw{}, num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
}

std::complex<double> RationalFunction::eval(std::complex<double> z) const {
    std::complex<long double> zl(z.real(), z.imag());
    std::complex<long double> v = num_.eval(zl) / den_.eval(zl);
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

GaussQ RationalFunction::eval(const GaussQ& z) const { return num_.eval(z) / den_.eval(z); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    // cross-cancel first to keep the final gcd small
    Poly g1 = a.num_.degree() > 0 && b.den_.degree() > 0 ? poly_gcd(a.num_, b.den_) : Poly(1);
    Poly g2 = b.num_.degree() > 0 && a.den_.degree() > 0 ? poly_gcd(b.num_, a.den_) : Poly(1);
    Poly n = exact_div(a.num_, g1) * exact_div(b.num_, g2);
    Poly d = exact_div(a.den_, g2) * exact_div(b.den_, g1);
    RationalFunction r(RationalFunction::Raw{}, std::move(n), std::move(d));
    GaussQ lc = r.den_.leading();
    if (!(lc == GaussQ(1))) {
        Poly scale(lc.inverse());
        r.num_ *= scale;
        r.den_ *= scale;
    }
    return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::operator-() const { return RationalFunction(Raw{}, -num_, den_); }

std::string RationalFunction::str(const std::string& var) const {
    if (is_polynomial() && den_.leading() == GaussQ(1)) return num_.str(var);
    std::string n = num_.str(var), d = den_.str(var);
    if (num_.degree() > 0 && num_.coeffs().size() > 1) n = "(" + n + ")";
    return n + "/(" + d + ")";
}

int disk_winding_exact(const RationalFunction& f, double boundary_tol) {
    if (f.is_zero()) throw Error(ErrorKind::DegenerateBoundary, "winding number of the zero function");
    int zeros = 0, poles = 0;
    if (f.num().degree() > 0) {
        zeros = count_roots_inside(poly_roots(f.num()), 1.0, boundary_tol);
        if (zeros < 0) throw Error(ErrorKind::DegenerateBoundary, "zero on the unit circle");
    }
    if (f.den().degree() > 0) {
        poles = count_roots_inside(poly_roots(f.den()), 1.0, boundary_tol);
        if (poles < 0) throw Error(ErrorKind::DegenerateBoundary, "pole on the unit circle");
    }
    return zeros - poles;
}

}  // namespace nyq
