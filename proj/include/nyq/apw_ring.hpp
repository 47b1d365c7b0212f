#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nyq/exponential_polynomial.hpp"
#include "nyq/index.hpp"
#include "nyq/mean_motion.hpp"
#include "nyq/ring.hpp"

namespace nyq {

/// Additive semigroup generated by exact frequency vectors. Membership is searched over
/// nonnegative integer combinations with coefficient sum up to max_coefficient_sum.
struct Semigroup {
    std::vector<FrequencyCoords> generators;
    int max_coefficient_sum = 64;
};

bool semigroup_contains(const Semigroup& sg, const FrequencyCoords& target);

/// Invertibility on the real line from certified_min_modulus; index = mean motion.
/// Throws Membership if a frequency falls outside the semigroup.
IndexOutcome apw_index(const ExponentialPolynomial& f, const std::optional<Semigroup>& semigroup = std::nullopt,
                       const MeanMotionConfig& cfg = {});

/// Invertibility in the analytic subalgebra without the index: periodic f become polynomials in
/// w = e^{iy/L} whose roots must leave the closed disk; otherwise only a dominant term decides.
std::optional<bool> apw_invertible_in_ring(const ExponentialPolynomial& f);

class ApwRing {
public:
    using Element = ExponentialPolynomial;

    explicit ApwRing(std::optional<Semigroup> semigroup = std::nullopt, MeanMotionConfig cfg = {})
        : semigroup_(std::move(semigroup)), cfg_(cfg) {}

    std::string name() const { return "apw_plus"; }
    Element one() const { return ExponentialPolynomial(1.0); }
    Element zero() const { return ExponentialPolynomial(); }
    bool equal(const Element& a, const Element& b) const;
    bool is_member(const Element& f) const;
    IndexOutcome index(const Element& f) const { return apw_index(f, semigroup_, cfg_); }
    std::optional<bool> invertible_in_R(const Element& f) const;
    std::vector<std::complex<double>> boundary_values(const Element& f) const;

private:
    std::optional<Semigroup> semigroup_;
    MeanMotionConfig cfg_;
};

static_assert(RingInstance<ApwRing>);

}  // namespace nyq
