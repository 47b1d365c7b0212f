#pragma once

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nyq/gaussian.hpp"
#include "nyq/index.hpp"
#include "nyq/poly.hpp"
#include "nyq/ring.hpp"

namespace nyq {

/// Polynomial in n variables with Gaussian-rational coefficients. Constants combine with any
/// variable count.
class MultiPoly {
public:
    using Exponent = std::vector<int>;
    using Terms = std::map<Exponent, GaussQ>;

    explicit MultiPoly(int nvars = 1) : n_(nvars) {}
    MultiPoly(int nvars, const GaussQ& c);
    MultiPoly(int nvars, Terms terms);

    static MultiPoly variable(int nvars, int j);

    int nvars() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GaussQ constant_term() const;
    int total_degree() const;

    std::complex<double> eval(std::span<const std::complex<double>> z) const;
    GaussQ eval(std::span<const GaussQ> z) const;
    /// z -> f(z, ..., z)
    Poly diagonal() const;
    /// sum |c_alpha| |alpha|_1, a bound on every angular derivative on the torus
    double torus_lipschitz() const;
    /// |f(0)| > sum of the other |c_alpha|: no zeros on the closed polydisk.
    bool constant_dominates() const;

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

    std::string str() const;

private:
    void require_same(const MultiPoly& o) const;
    int n_;
    Terms terms_;
};

/// num / den; not reduced (no multivariate gcd), equality by cross multiplication.
class PolyRatio {
public:
    PolyRatio() : PolyRatio(MultiPoly(1), MultiPoly(1, GaussQ(1))) {}
    PolyRatio(int c) : PolyRatio(static_cast<long>(c)) {}
    PolyRatio(long c) : PolyRatio(MultiPoly(1, GaussQ(c)), MultiPoly(1, GaussQ(1))) {}
    PolyRatio(MultiPoly num) : PolyRatio(std::move(num), MultiPoly(1, GaussQ(1))) {}
    PolyRatio(MultiPoly num, MultiPoly den);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    int nvars() const { return num_.nvars(); }
    std::complex<double> eval(std::span<const std::complex<double>> z) const { return num_.eval(z) / den_.eval(z); }

    friend PolyRatio operator+(const PolyRatio& a, const PolyRatio& b);
    friend PolyRatio operator-(const PolyRatio& a, const PolyRatio& b);
    friend PolyRatio operator*(const PolyRatio& a, const PolyRatio& b);
    PolyRatio operator-() const { return PolyRatio(-num_, den_); }
    friend bool operator==(const PolyRatio& a, const PolyRatio& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

    std::string str() const;

private:
    MultiPoly num_, den_;
};

struct TorusMinimum {
    double bound = 0.0;     // certified lower bound when certified, else the grid minimum
    double grid_min = 0.0;
    std::size_t points = 0;
    bool certified = false;
};

/// Lipschitz-controlled grid on the n-torus, refined until L * h / 2 < grid_min / 2 or the cap.
TorusMinimum torus_minimum(const MultiPoly& f, std::size_t max_points = 1'000'000);

/// Invertibility of (f on the torus, diagonal restriction) and the winding of the diagonal.
/// Throws Membership when the denominator is not certified zero-free on the closed polydisk.
IndexOutcome polydisk_index(const PolyRatio& f, double tol = 1e-9);

/// Whether f has no zeros on the closed polydisk, decided by the nested one-variable test
/// p(0,..,0,w) and p(., w) for w on the circle. Nullopt when a root passes too close to the circle.
std::optional<bool> polydisk_zero_free(const MultiPoly& f);

class PolydiskRing {
public:
    using Element = PolyRatio;

    explicit PolydiskRing(int nvars = 2) : n_(nvars) {}

    std::string name() const { return "polydisk_rational"; }
    int nvars() const { return n_; }
    Element one() const { return PolyRatio(MultiPoly(n_, GaussQ(1)), MultiPoly(n_, GaussQ(1))); }
    Element zero() const { return PolyRatio(MultiPoly(n_), MultiPoly(n_, GaussQ(1))); }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    bool is_member(const Element& f) const;
    IndexOutcome index(const Element& f) const { return polydisk_index(f); }
    std::optional<bool> invertible_in_R(const Element& f) const;
    std::vector<std::complex<double>> boundary_values(const Element& f) const;

private:
    int n_;
};

static_assert(RingInstance<PolydiskRing>);

}  // namespace nyq
