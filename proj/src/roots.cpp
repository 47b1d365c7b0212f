#include "nyq/roots.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "nyq/error.hpp"

namespace nyq {

namespace {

using cld = std::complex<long double>;

std::vector<std::complex<double>> companion_roots(const Poly& f) {
    const int n = f.degree();
    std::vector<std::complex<double>> out;
    if (n == 1) {
        out.push_back((-f.coeff(0) / f.coeff(1)).to_complex());
        return out;
    }
    Poly m = f.monic();
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -m.coeff(i).to_complex();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::Unresolved, "companion eigenvalue solver failed");
    const auto& ev = solver.eigenvalues();
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(ev(i));
    return out;
}

// Newton polish on a square-free factor; keeps the original if a step makes things worse.
std::complex<double> polish(const Poly& f, const Poly& df, std::complex<double> z0) {
    cld z(z0.real(), z0.imag());
    long double best = std::abs(f.eval(z));
    for (int it = 0; it < 8 && best > 0; ++it) {
        cld d = df.eval(z);
        if (std::abs(d) == 0) break;
        cld next = z - f.eval(z) / d;
        long double val = std::abs(f.eval(next));
        if (!(val < best)) break;
        z = next;
        best = val;
    }
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

}  // namespace

std::vector<Root> poly_roots(const Poly& p) {
    if (p.degree() < 1) throw Error(ErrorKind::InvalidArgument, "root finding on a constant polynomial");
    std::vector<Root> out;
    for (const auto& [factor, mult] : square_free(p)) {
        Poly df = factor.derivative();
        for (auto z : companion_roots(factor)) out.push_back({factor.degree() == 1 ? z : polish(factor, df, z), mult});
    }
    return out;
}

std::vector<std::complex<double>> numeric_roots(std::vector<std::complex<double>> c) {
    while (!c.empty() && c.back() == 0.0) c.pop_back();
    if (c.size() < 2) return {};
    const int n = static_cast<int>(c.size()) - 1;
    if (n == 1) return {-c[0] / c[1]};
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::Unresolved, "companion eigenvalue solver failed");
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    return out;
}

int count_roots_inside(const std::vector<Root>& roots, double radius, double tol) {
    int count = 0;
    for (const auto& r : roots) {
        double m = std::abs(r.value);
        if (std::abs(m - radius) < tol) return -1;
        if (m < radius) count += r.multiplicity;
    }
    return count;
}

}  // namespace nyq
