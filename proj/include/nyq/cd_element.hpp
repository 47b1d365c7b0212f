#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nyq/exponential_polynomial.hpp"
#include "nyq/index.hpp"
#include "nyq/matrix.hpp"
#include "nyq/rational_function.hpp"
#include "nyq/ring.hpp"

namespace nyq {

/// F(s) = sum_k R_k(s) e^{-s t_k} + sum_k f_k e^{-s t_k}, with strictly proper R_k and exact delays t_k >= 0.
/// The rational sum is the transform of the L1 part, the atoms form the almost periodic part.
/// Complex atom coefficients enter rational parts through exact conversion of the double.
class CDElement {
public:
    using RationalTerms = std::map<mpq_class, RationalFunction>;
    using AtomicTerms = std::map<mpq_class, std::complex<double>>;

    CDElement() = default;
    CDElement(int c) : CDElement(static_cast<long>(c)) {}
    CDElement(long c) : CDElement(std::complex<double>(static_cast<double>(c))) {}
    CDElement(double c) : CDElement(std::complex<double>(c)) {}
    CDElement(std::complex<double> c);
    CDElement(RationalTerms rational, AtomicTerms atomic);

    /// f e^{-s t}
    static CDElement delay(const mpq_class& t, std::complex<double> f = 1.0);
    /// R(s) e^{-s t} for proper R; R(infinity) becomes an atom at t. Throws InvalidArgument if R is improper.
    static CDElement rational(const RationalFunction& R, const mpq_class& t = 0);

    const RationalTerms& rational_terms() const { return rational_; }
    const AtomicTerms& atomic_terms() const { return atomic_; }
    bool is_zero() const { return rational_.empty() && atomic_.empty(); }
    /// Only delay 0 present; then the element is a proper rational function.
    bool is_delay_free() const;

    std::complex<double> eval(std::complex<double> s) const;
    /// Transform of the L1 part alone.
    std::complex<double> eval_l1_part(std::complex<double> s) const;
    /// Atomic part on the imaginary axis, y -> sum f_k e^{-i y t_k}, as an exponential polynomial.
    ExponentialPolynomial atomic_part() const;

    /// Inverse inside the representation, available when the element is delay-free with a nonzero atom at 0.
    std::optional<CDElement> inverse_if_delay_free() const;

    friend CDElement operator+(const CDElement& a, const CDElement& b);
    friend CDElement operator-(const CDElement& a, const CDElement& b);
    friend CDElement operator*(const CDElement& a, const CDElement& b);
    CDElement operator-() const;

    std::string str() const;

private:
    void prune();

    RationalTerms rational_;
    AtomicTerms atomic_;
};

/// L1 part has no growing tail: every pole with Re p > -tol cancels across delays
/// (the principal part of sum R_k e^{-s t_k} vanishes there). Checked by contour integrals.
bool cd_membership(const CDElement& F, double tol = 1e-9);

/// Pair index (mean motion of the atomic part, winding of 1 + F_AP^{-1} f_a over the compactified axis).
IndexOutcome cd_index(const CDElement& F, double min_modulus_floor = 1e-10);

/// Number of zeros of F in the closed right half plane, from the argument principle on a
/// half-disk large enough that the L1 part is dominated by the atomic part. Nullopt if undecidable.
std::optional<int> cd_rhp_zero_count(const CDElement& F);

class CDRing {
public:
    using Element = CDElement;

    std::string name() const { return "callier_desoer"; }
    Element one() const { return CDElement(1); }
    Element zero() const { return CDElement(); }
    bool equal(const Element& a, const Element& b) const;
    bool is_member(const Element& f) const { return cd_membership(f); }
    IndexOutcome index(const Element& f) const { return cd_index(f); }
    /// Member, atomic part invertible on the closed half plane, and no zeros there.
    std::optional<bool> invertible_in_R(const Element& f) const;
    std::vector<std::complex<double>> boundary_values(const Element& f) const;
};

static_assert(RingInstance<CDRing>);

/// Largest |F(i y) - G(i y)| over a dense grid y in [-Y, Y] plus the compactified tails.
double cd_grid_distance(const CDElement& F, const CDElement& G, double Y = 200.0, int samples = 20001);

}  // namespace nyq
