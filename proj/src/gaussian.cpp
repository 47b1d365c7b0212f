#include "nyq/gaussian.hpp"

#include <cctype>
#include <cmath>

#include "nyq/error.hpp"

namespace nyq {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Parse: return "parse error";
        case ErrorKind::DimensionMismatch: return "dimension mismatch";
        case ErrorKind::VariantMismatch: return "index variant mismatch";
        case ErrorKind::ZeroDivision: return "division by zero";
        case ErrorKind::DegenerateBoundary: return "degenerate boundary";
        case ErrorKind::NeedsRefinement: return "needs refinement";
        case ErrorKind::Unresolved: return "unresolved";
        case ErrorKind::IllPosedLoop: return "ill-posed loop";
        case ErrorKind::InvalidFactorization: return "invalid factorization";
        case ErrorKind::UnsupportedRing: return "unsupported ring";
        case ErrorKind::Membership: return "membership error";
        case ErrorKind::InvalidArgument: return "invalid argument";
        case ErrorKind::Io: return "i/o error";
    }
    return "error";
}

GaussQ GaussQ::from_double(double re, double im) {
    if (!std::isfinite(re) || !std::isfinite(im)) {
        throw Error(ErrorKind::InvalidArgument, "non-finite coefficient");
    }
    return GaussQ(mpq_class(re), mpq_class(im));
}

GaussQ GaussQ::inverse() const {
    if (is_zero()) throw Error(ErrorKind::ZeroDivision, "inverse of zero");
    mpq_class n = norm();
    return GaussQ(re_ / n, -im_ / n);
}

namespace {

long double to_long_double(const mpq_class& q) {
    mpf_class x(q, 128);
    double hi = x.get_d();
    x -= hi;
    return static_cast<long double>(hi) + static_cast<long double>(x.get_d());
}

}  // namespace

std::complex<long double> GaussQ::to_complex_ld() const {
    return {to_long_double(re_), to_long_double(im_)};
}

GaussQ& GaussQ::operator+=(const GaussQ& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussQ& GaussQ::operator-=(const GaussQ& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussQ& GaussQ::operator*=(const GaussQ& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussQ& GaussQ::operator/=(const GaussQ& o) {
    if (o.is_zero()) throw Error(ErrorKind::ZeroDivision, "division by zero coefficient");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string rational_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_str();
}

std::string GaussQ::str() const {
    if (sgn(im_) == 0) return rational_str(re_);
    std::string imag = rational_str(im_) + " i";
    if (sgn(re_) == 0) return imag;
    if (sgn(im_) > 0) return rational_str(re_) + "+" + imag;
    return rational_str(re_) + imag;
}

namespace {

std::string strip(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

mpz_class parse_integer(const std::string& digits, std::string_view whole) {
    if (digits.empty()) throw Error(ErrorKind::Parse, "malformed number \"" + std::string(whole) + "\"");
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw Error(ErrorKind::Parse, "malformed number \"" + std::string(whole) + "\"");
        }
    }
    return mpz_class(digits, 10);
}

// Unsigned decimal with optional fraction and exponent.
mpq_class parse_decimal(const std::string& s, std::string_view whole) {
    std::string mant = s;
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        mant = s.substr(0, epos);
        std::string e = s.substr(epos + 1);
        bool neg = false;
        if (!e.empty() && (e[0] == '+' || e[0] == '-')) {
            neg = e[0] == '-';
            e = e.substr(1);
        }
        mpz_class ev = parse_integer(e, whole);
        if (abs(ev) > 4096) throw Error(ErrorKind::Parse, "exponent out of range in \"" + std::string(whole) + "\"");
        exp10 = ev.get_si() * (neg ? -1 : 1);
    }
    auto dot = mant.find('.');
    std::string ip = mant, fp;
    if (dot != std::string::npos) {
        ip = mant.substr(0, dot);
        fp = mant.substr(dot + 1);
    }
    if (ip.empty() && fp.empty()) throw Error(ErrorKind::Parse, "malformed number \"" + std::string(whole) + "\"");
    mpz_class num = parse_integer(ip + fp, whole);
    exp10 -= static_cast<long>(fp.size());
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    mpq_class q = exp10 < 0 ? mpq_class(num, p10) : mpq_class(num * p10);
    q.canonicalize();
    return q;
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
    std::string s = strip(text);
    if (s.empty()) throw Error(ErrorKind::Parse, "empty number");
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    mpq_class q;
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        q = parse_decimal(s, text);
    } else {
        mpq_class a = parse_decimal(s.substr(0, slash), text);
        mpq_class b = parse_decimal(s.substr(slash + 1), text);
        if (sgn(b) == 0) throw Error(ErrorKind::Parse, "zero denominator in \"" + std::string(text) + "\"");
        q = a / b;
    }
    return neg ? mpq_class(-q) : q;
}

GaussQ parse_gauss(std::string_view text) {
    std::string s = strip(text);
    if (s.empty()) throw Error(ErrorKind::Parse, "empty number");
    if (s.back() != 'i') return GaussQ(parse_rational(s));
    s.pop_back();
    // split "re(+|-)im" at the last sign that is not a leading sign or an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag_of = [&](std::string part) -> mpq_class {
        if (part.empty() || part == "+") return 1;
        if (part == "-") return -1;
        if (part.back() == '*') part.pop_back();
        return parse_rational(part);
    };
    if (split == std::string::npos) return GaussQ(mpq_class(0), imag_of(s));
    return GaussQ(parse_rational(s.substr(0, split)), imag_of(s.substr(split)));
}

}  // namespace nyq
