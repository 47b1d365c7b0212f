#include "nyq/samplers.hpp"

#include <cmath>
#include <numbers>

namespace nyq::samplers {

namespace {

int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(std::mt19937& rng, double p) { return std::bernoulli_distribution(p)(rng); }

GaussQ lattice_point(std::mt19937& rng, double min_mod, double max_mod, double avoid_circle) {
    while (true) {
        GaussQ r(mpq_class(uniform(rng, -15, 15), 6), mpq_class(uniform(rng, -15, 15), 6));
        double m = std::abs(r.to_complex());
        if (m > min_mod && m < max_mod && std::abs(m - 1.0) > avoid_circle) return r;
    }
}

}  // namespace

RationalFunction disk_rational(std::mt19937& rng) {
    int k = uniform(rng, 1, 8) * (coin(rng, 0.5) ? 1 : -1);
    Poly num(GaussQ(mpq_class(k, 4)));
    Poly den(1);
    for (int i = uniform(rng, 0, 3); i > 0; --i) num *= Poly::linear(lattice_point(rng, -1.0, 2.5, 0.05));
    for (int i = uniform(rng, 0, 3); i > 0; --i) den *= Poly::linear(lattice_point(rng, 1.05, 2.6, 0.05));
    return RationalFunction(num, den);
}

ExponentialPolynomial apw_plus(std::mt19937& rng) {
    std::uniform_real_distribution<double> c(-2.0, 2.0);
    auto coeff = [&] { return std::complex<double>(c(rng), c(rng)); };
    if (coin(rng, 0.8)) {
        ExponentialPolynomial f;
        for (int i = uniform(rng, 1, 3); i > 0; --i) f += ExponentialPolynomial::exponential(mpq_class(uniform(rng, 0, 4), 2), coeff());
        if (coin(rng, 0.5)) f += ExponentialPolynomial(std::polar(f.l1_norm() + 0.5, c(rng)));
        if (f.is_zero()) f = ExponentialPolynomial(1.0);
        return f;
    }
    const std::vector<double> basis{1.0, std::numbers::sqrt2};
    ExponentialPolynomial f({1.0, std::numbers::sqrt2}, {});
    auto coords = [&] { return FrequencyCoords{mpq_class(uniform(rng, 0, 2)), mpq_class(uniform(rng, 0, 2))}; };
    for (int i = uniform(rng, 1, 2); i > 0; --i) f += ExponentialPolynomial::exponential(coords(), coeff(), basis);
    return f + ExponentialPolynomial::exponential(coords(), std::polar(f.l1_norm() * 1.5 + 0.3, c(rng)), basis);
}

CDElement callier_desoer(std::mt19937& rng) {
    std::uniform_real_distribution<double> c(-1.0, 1.0);
    const Poly s = Poly::monomial(1);
    CDElement f;
    double others = 0.0;
    for (auto t : {mpq_class(1, 2), mpq_class(1)}) {
        if (!coin(rng, 0.5)) continue;
        std::complex<double> a(c(rng), c(rng));
        others += std::abs(a);
        f = f + CDElement::delay(t, a);
    }
    f = f + CDElement(std::polar(std::max(1.5, others + 0.5), c(rng) * std::numbers::pi));
    const mpq_class delays[] = {mpq_class(0), mpq_class(1, 2), mpq_class(1)};
    const mpq_class poles[] = {mpq_class(1, 2), mpq_class(1), mpq_class(2), mpq_class(3)};
    for (int i = uniform(rng, 0, 2); i > 0; --i) {
        GaussQ gain(mpq_class(uniform(rng, -8, 8), 2));
        Poly den = Poly::linear(GaussQ(-poles[uniform(rng, 0, 3)]));
        if (coin(rng, 0.3)) den = den * den;
        f = f + CDElement::rational(RationalFunction(Poly(gain), den), delays[uniform(rng, 0, 2)]);
    }
    if (coin(rng, 0.2)) {
        mpq_class a = coin(rng, 0.5) ? mpq_class(1, 2) : mpq_class(1);
        GaussQ gain(mpq_class(uniform(rng, 1, 4), 2));
        Poly den = s - Poly(GaussQ(a));
        f = f + CDElement::rational(RationalFunction(Poly(gain), den)) -
            CDElement::rational(RationalFunction(Poly(gain * GaussQ::from_double(std::exp(a.get_d()))), den), 1);
    }
    return f;
}

PolyRatio polydisk_rational(std::mt19937& rng) {
    const MultiPoly z1 = MultiPoly::variable(2, 0), z2 = MultiPoly::variable(2, 1);
    auto constant = [](const mpq_class& q) { return MultiPoly(2, GaussQ(q)); };
    const MultiPoly monos[] = {z1, z2, z1 * z2, z1 * z2 * z2};
    const mpq_class levels[] = {mpq_class(1, 4), mpq_class(1, 2), mpq_class(2), mpq_class(3)};
    MultiPoly num = constant(mpq_class(uniform(rng, 1, 4) * (coin(rng, 0.5) ? 1 : -1), 2));
    for (int i = uniform(rng, 1, 2); i > 0; --i) {
        if (coin(rng, 0.15)) num = num * (constant(2) - z1 - constant(mpq_class(1, 2)) * z2);
        else num = num * (constant(levels[uniform(rng, 0, 3)]) - monos[uniform(rng, 0, 3)]);
    }
    MultiPoly den = constant(1);
    switch (uniform(rng, 0, 2)) {
        case 1: den = constant(3) - z1 * z2; break;
        case 2: den = constant(4) + z1 + z2; break;
        default: break;
    }
    return PolyRatio(num, den);
}

}  // namespace nyq::samplers
