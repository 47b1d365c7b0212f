#pragma once

#include <optional>
#include <string>

#include "nyq/index.hpp"
#include "nyq/rational_function.hpp"
#include "nyq/ring.hpp"

namespace nyq {

inline constexpr double kBoundaryTol = 1e-9;

struct DiskMembership {
    bool member = false;
    bool boundary_degenerate = false;  // a pole within tolerance of the unit circle
};

/// Membership in R: every pole has modulus > 1 + tol.
DiskMembership disk_membership(const RationalFunction& f, double tol = kBoundaryTol);

/// Invertibility on the unit circle and the winding number there. The argument-principle count is
/// cross-checked against sampled winding; disagreement is reported as degenerate.
IndexOutcome disk_index(const RationalFunction& f, double tol = kBoundaryTol);

/// Index for rational representatives of H-infinity: winding on a circle r < 1 just inside every
/// interior zero. Throws Membership for a pole in the closed disk.
IndexOutcome hardy_index_restricted(const RationalFunction& f, double tol = kBoundaryTol);

/// Shared pieces of the two rational instances.
class RationalRingBase {
public:
    using Element = RationalFunction;

    explicit RationalRingBase(double tol) : tol_(tol) {}

    Element one() const { return RationalFunction(1); }
    Element zero() const { return RationalFunction(0); }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    bool is_member(const Element& f) const { return disk_membership(f, tol_).member; }
    /// f and 1/f both in R; nullopt if a zero or pole sits on the tolerance band.
    std::optional<bool> invertible_in_R(const Element& f) const;
    std::vector<std::complex<double>> boundary_values(const Element& f) const;
    double tolerance() const { return tol_; }

protected:
    double tol_;
};

/// Rational functions without poles in the closed disk inside the disk algebra; index = winding on the circle.
class DiskRing : public RationalRingBase {
public:
    explicit DiskRing(double tol = kBoundaryTol) : RationalRingBase(tol) {}
    std::string name() const { return "disk_rational"; }
    IndexOutcome index(const Element& f) const { return disk_index(f, tol_); }
};

/// The same rationals viewed inside H-infinity + C. Non-members p/q are indexed as iota(p) - iota(q).
class HardyRing : public RationalRingBase {
public:
    explicit HardyRing(double tol = kBoundaryTol) : RationalRingBase(tol) {}
    std::string name() const { return "hardy_rational"; }
    IndexOutcome index(const Element& f) const;
};

static_assert(RingInstance<DiskRing>);
static_assert(RingInstance<HardyRing>);

}  // namespace nyq
