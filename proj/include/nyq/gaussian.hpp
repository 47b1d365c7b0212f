#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nyq {

/// Exact complex number re + im*i with arbitrary-precision rational parts.
class GaussQ {
public:
    GaussQ() = default;
    GaussQ(long v) : re_(v), im_(0) {}
    GaussQ(mpq_class re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }
    GaussQ(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    /// Exact value of a double (every finite double is a dyadic rational).
    static GaussQ from_double(double re, double im = 0.0);
    static GaussQ from_complex(std::complex<double> z) { return from_double(z.real(), z.imag()); }
    static GaussQ i() { return GaussQ(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussQ conj() const { return GaussQ(re_, -im_); }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    GaussQ inverse() const;

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
    std::complex<long double> to_complex_ld() const;

    GaussQ& operator+=(const GaussQ& o);
    GaussQ& operator-=(const GaussQ& o);
    GaussQ& operator*=(const GaussQ& o);
    GaussQ& operator/=(const GaussQ& o);

    friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
    friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
    friend GaussQ operator*(GaussQ a, const GaussQ& b) { return a *= b; }
    friend GaussQ operator/(GaussQ a, const GaussQ& b) { return a /= b; }
    GaussQ operator-() const { return GaussQ(-re_, -im_); }

    friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    /// Canonical text: "a/b", "a/b+c/d i", "c/d i" (integers without "/1").
    std::string str() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

/// Parses "3", "-1/2", "0.25", "1/2+3/4 i", "2i", "-i", "1e-3". Throws Error(Parse).
GaussQ parse_gauss(std::string_view text);

/// Parses an exact rational from "a/b", an integer or a decimal literal.
mpq_class parse_rational(std::string_view text);

std::string rational_str(const mpq_class& q);

}  // namespace nyq
