#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nyq {

/// Exact frequency coordinates over a real basis; trailing zeros are trimmed so that
/// equal frequencies always compare equal.
using FrequencyCoords = std::vector<mpq_class>;

struct CoordsLess {
    bool operator()(const FrequencyCoords& a, const FrequencyCoords& b) const;
};

FrequencyCoords trim_coords(FrequencyCoords c);

/// Finite Bohr-Fourier sum  sum_q f_q exp(i * lambda(q) * y),  lambda(q) = sum_j q_j * basis_j.
/// The basis starts with 1. Two bases combine when one is a prefix of the other.
class ExponentialPolynomial {
public:
    using Terms = std::map<FrequencyCoords, std::complex<double>, CoordsLess>;

    ExponentialPolynomial() : basis_{1.0} {}
    ExponentialPolynomial(int c) : ExponentialPolynomial(static_cast<long>(c)) {}
    ExponentialPolynomial(long c) : ExponentialPolynomial(std::complex<double>(static_cast<double>(c))) {}
    ExponentialPolynomial(double c) : ExponentialPolynomial(std::complex<double>(c)) {}
    ExponentialPolynomial(std::complex<double> c);
    ExponentialPolynomial(std::vector<double> basis, Terms terms);

    /// coefficient * e_lambda with lambda given by exact coordinates.
    static ExponentialPolynomial exponential(FrequencyCoords coords, std::complex<double> coefficient = 1.0,
                                             std::vector<double> basis = {1.0});
    /// coefficient * e_q for a rational frequency q over the default basis.
    static ExponentialPolynomial exponential(const mpq_class& q, std::complex<double> coefficient = 1.0);

    const std::vector<double>& basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    double frequency(const FrequencyCoords& coords) const;
    /// Numeric spectrum, sorted ascending.
    std::vector<double> spectrum() const;
    /// Coefficient at the zero frequency.
    std::complex<double> mean() const;
    /// sum |f_lambda|
    double l1_norm() const;
    /// sum |lambda| |f_lambda|; bounds |f'| on the real line.
    double lipschitz() const;
    /// All frequencies rational multiples of basis[0] = 1.
    bool is_commensurable() const;
    /// Every frequency is >= 0 (exact, via coordinates when commensurable, numeric otherwise).
    bool has_nonnegative_spectrum() const;

    std::complex<double> eval(double y) const;
    /// Analytic continuation f(s) = sum f_lambda e^{i lambda s}.
    std::complex<double> eval(std::complex<double> s) const;

    ExponentialPolynomial& operator+=(const ExponentialPolynomial& o);
    ExponentialPolynomial& operator-=(const ExponentialPolynomial& o);
    friend ExponentialPolynomial operator+(ExponentialPolynomial a, const ExponentialPolynomial& b) { return a += b; }
    friend ExponentialPolynomial operator-(ExponentialPolynomial a, const ExponentialPolynomial& b) { return a -= b; }
    friend ExponentialPolynomial operator*(const ExponentialPolynomial& a, const ExponentialPolynomial& b);
    ExponentialPolynomial operator-() const;
    friend bool operator==(const ExponentialPolynomial& a, const ExponentialPolynomial& b);

    /// Largest coefficient difference after subtraction.
    static double distance(const ExponentialPolynomial& a, const ExponentialPolynomial& b);

    std::string str() const;

private:
    static std::vector<double> merged_basis(const std::vector<double>& a, const std::vector<double>& b);
    void prune();

    std::vector<double> basis_;
    Terms terms_;
};

}  // namespace nyq
