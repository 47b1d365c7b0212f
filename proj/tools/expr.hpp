#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "nyq/cd_element.hpp"
#include "nyq/error.hpp"
#include "nyq/exponential_polynomial.hpp"
#include "nyq/gaussian.hpp"
#include "nyq/polydisk.hpp"
#include "nyq/rational_function.hpp"

namespace nyq::cli {

struct Node {
    enum class Kind { Number, Imag, Name, Add, Sub, Mul, Div, Neg, Pow, Call };
    Kind kind;
    mpq_class number;  // Number
    std::string name;  // Name, Call
    long exponent = 0; // Pow
    std::vector<std::unique_ptr<Node>> args;
};

using NodePtr = std::unique_ptr<Node>;

/// Grammar: sums and products of numbers ("3", "1/2" as division, "0.25", "1e-3"), the unit i,
/// names, calls name(arg, ...), integer powers ^ or **, unary signs, and implicit products such as
/// "2z" or "3(z+1)". Throws Error(Parse) with the offending position.
NodePtr parse_expression(std::string_view text);

/// Values substituted for free names (sweep parameters).
using Params = std::map<std::string, GaussQ>;

/// Rational function in one variable (z for the disk rings, s for the delay ring).
RationalFunction to_rational(const Node& n, const Params& params, const std::string& var = "z");

/// Bohr-Fourier sum from terms c * e(lambda). Frequencies are rational combinations of 1 and
/// sqrt(k) for square-free k > 1; the basis grows in order of first appearance.
class FrequencyBasis {
public:
    FrequencyBasis() : radicands_{1} {}
    std::size_t index_of(long radicand);
    std::vector<double> values() const;
    const std::vector<long>& radicands() const { return radicands_; }

private:
    std::vector<long> radicands_;
};
ExponentialPolynomial to_exponential(const Node& n, const Params& params, FrequencyBasis& basis);

/// Sums of R_k(s) exp(-t_k s) with exp(c - t s), t >= 0 rational. The constant factor e^c is rounded
/// to the nearest double.
CDElement to_cd(const Node& n, const Params& params);

/// Ratio of polynomials in z1..zn; nvars is raised to the largest index seen.
PolyRatio to_polyratio(const Node& n, const Params& params, int nvars);
int polydisk_variable_count(const Node& n);

}  // namespace nyq::cli
