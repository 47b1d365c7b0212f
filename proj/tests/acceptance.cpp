// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include <fmt/format.h>

#include "nyq/apw_ring.hpp"
#include "nyq/cd_element.hpp"
#include "nyq/coprime.hpp"
#include "nyq/disk_ring.hpp"
#include "nyq/feedback.hpp"
#include "nyq/mean_motion.hpp"
#include "nyq/polydisk.hpp"
#include "nyq/ring.hpp"
#include "nyq/samplers.hpp"
#include "nyq/winding.hpp"
#include "support.hpp"

using namespace nyq;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const Poly z = Poly::monomial(1);
Poly c(long a, long b = 1) { return Poly(GaussQ(mpq_class(a, b))); }

void random_disk_instances() {
    std::mt19937 rng(2024);
    DiskRing ring;
    const auto t0 = Clock::now();
    int agree = 0, disagree = 0, degenerate = 0, yes = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = trial % 2 == 0 ? 1 : 2;
        RationalMatrix P = testing::random_rational_matrix(rng, n, n, 4);
        RationalMatrix C = testing::random_rational_matrix(rng, n, n, 4);
        try {
            OracleAnswer o = direct_stability_oracle(P, C, ring);
            if (o == OracleAnswer::IllPosed) {
                ++degenerate;
                continue;
            }
            Verdict v = nyquist_verdict(P, C, right_coprime_factorization(P), left_coprime_factorization(C), ring);
            if (v.stabilizes == Stabilizes::Degenerate) {
                ++degenerate;
                continue;
            }
            bool same = (v.stabilizes == Stabilizes::Yes) == (o == OracleAnswer::Yes);
            (same ? agree : disagree)++;
            yes += v.stabilizes == Stabilizes::Yes;
        } catch (const Error& e) {
            ++degenerate;
            std::printf("  instance %d raised %s: %s\n", trial, to_string(e.kind()), e.what());
        }
    }
    const double secs = seconds_since(t0);
    const double rate = degenerate / 200.0;
    report(1, disagree == 0 && rate < 0.05 && secs < 60.0,
           fmt::format("{} agree, {} disagree ({} stabilizing), degenerate rate {:.3f}, {:.1f} s", agree, disagree, yes,
                       rate, secs));
}

void gain_sweep() {
    RationalMatrix P = RationalMatrix::scalar(RationalFunction(c(1), z - c(1, 2)));
    std::string got;
    bool ok = true;
    const std::pair<mpq_class, Stabilizes> cases[] = {{mpq_class(1, 5), Stabilizes::No},
                                                      {mpq_class(2, 5), Stabilizes::No},
                                                      {mpq_class(3, 5), Stabilizes::Yes},
                                                      {mpq_class(1), Stabilizes::Yes}};
    for (const auto& [k, want] : cases) {
        RationalMatrix C = RationalMatrix::scalar(RationalFunction(Poly(GaussQ(k))));
        Verdict v = nyquist_verdict(P, C, right_coprime_factorization(P), left_coprime_factorization(C), DiskRing{});
        got += std::string(got.empty() ? "" : ", ") + to_string(v.stabilizes);
        ok = ok && v.stabilizes == want;
    }
    report(2, ok, "k = 0.2, 0.4, 0.6, 1.0 give {" + got + "}");
}

// Certified pairs: either the product keeps a dominant term (each factor's lead exceeds three times
// the rest), or all frequencies are rational so the periodic route applies.
ExponentialPolynomial certified_factor(std::mt19937& rng, bool periodic) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0), phase(0.0, 2.0 * std::numbers::pi);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
    const std::vector<double> basis = periodic ? std::vector<double>{1.0} : std::vector<double>{1.0, std::numbers::sqrt2};
    auto coords = [&] {
        FrequencyCoords c{mpq_class(num(rng), den(rng))};
        if (!periodic) c.push_back(mpq_class(num(rng), den(rng)));
        for (auto& q : c) q.canonicalize();
        return c;
    };
    ExponentialPolynomial f(basis, {});
    double budget = 0.0;
    for (int k = 0; k < 3; ++k) {
        std::complex<double> c(unit(rng), unit(rng));
        budget += std::abs(c);
        f += ExponentialPolynomial::exponential(coords(), c, basis);
    }
    const double lead = periodic ? budget * 1.2 + 0.1 : budget * 3.5 + 0.2;
    return f + ExponentialPolynomial::exponential(coords(), std::polar(lead, phase(rng)), basis);
}

void additivity() {
    std::mt19937 rng(31);
    int exact_ok = 0;
    for (int trial = 0; trial < 500; ++trial) {
        std::uniform_int_distribution<int> deg(0, 3);
        RationalFunction f(testing::poly_with_safe_roots(rng, deg(rng)), testing::poly_with_safe_roots(rng, deg(rng)));
        RationalFunction g(testing::poly_with_safe_roots(rng, deg(rng)), testing::poly_with_safe_roots(rng, deg(rng)));
        exact_ok += disk_winding_exact(f * g) == disk_winding_exact(f) + disk_winding_exact(g);
    }
    int certified = 0, ep_ok = 0, attempts = 0;
    double worst = 0.0;
    while (certified < 100 && attempts < 400) {
        ++attempts;
        const bool periodic = attempts % 2 == 0;
        auto f = certified_factor(rng, periodic), g = certified_factor(rng, periodic);
        WindingResult wf, wg, wfg;
        try {
            wf = average_winding(f);
            wg = average_winding(g);
            wfg = average_winding(f * g);
        } catch (const Error&) {
            continue;
        }
        if (!(wf.certified && wg.certified && wfg.certified)) continue;
        ++certified;
        double err = std::abs(wfg.value - wf.value - wg.value);
        worst = std::max(worst, err);
        ep_ok += err < 2e-4;
    }
    report(3, exact_ok == 500 && certified == 100 && ep_ok == 100,
           fmt::format("rational {}/500 exact; exponential {}/{} certified pairs within 2e-4 (worst {:.2e}, {} drawn)", exact_ok,
                       ep_ok, certified, worst, attempts));
}

void mean_motion_checks() {
    const std::vector<double> basis{1.0, std::numbers::sqrt2};
    struct Case {
        FrequencyCoords lambda;
        double value;
    };
    const Case cases[] = {{{mpq_class(0), mpq_class(0)}, 0.0},
                          {{mpq_class(1), mpq_class(0)}, 1.0},
                          {{mpq_class(5, 3), mpq_class(0)}, 5.0 / 3.0},
                          {{mpq_class(0), mpq_class(1)}, std::numbers::sqrt2}};
    double worst_exact = 0.0;
    for (const auto& cs : cases) {
        auto r = average_winding(ExponentialPolynomial::exponential(cs.lambda, 1.0, basis));
        worst_exact = std::max(worst_exact, std::abs(r.value - cs.value));
    }
    std::mt19937 rng(47);
    int agree = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        auto f = testing::random_dominant_ep(rng);
        auto d = dominance_winding(f);
        if (!d) continue;
        double err = std::abs(mean_motion_estimate(f).value - *d);
        worst = std::max(worst, err);
        agree += err < 1e-3;
    }
    report(4, worst_exact < 1e-6 && agree == 100,
           fmt::format("e_lambda error {:.1e}; dominance vs estimator {}/100 within 1e-3 (worst {:.2e})", worst_exact, agree,
                       worst));
}

std::string pair_text(const IndexOutcome& o) {
    if (!o.invertible_in_S || !o.index) return "not invertible";
    const auto& p = std::get<PairIndex>(*o.index);
    return fmt::format("({}, {})", p.real, p.integer);
}

bool pair_is(const IndexOutcome& o, double real, long long integer) {
    if (!o.invertible_in_S || !o.index) return false;
    const auto& p = std::get<PairIndex>(*o.index);
    return std::abs(p.real - real) < 1e-9 && p.integer == integer;
}

void callier_desoer() {
    const Poly s = Poly::monomial(1);
    const double e = std::numbers::e;
    CDElement delta0(1), delta1 = CDElement::rational(RationalFunction(1), 1);
    CDElement lead = CDElement::rational(RationalFunction(s + c(2), s + c(1)));
    CDElement rhp = CDElement::rational(RationalFunction(s - c(1), s + c(1)));
    bool idx_ok = pair_is(cd_index(delta0), 0, 0) && pair_is(cd_index(delta1), -1, 0) && pair_is(cd_index(lead), 0, 0) &&
                  pair_is(cd_index(rhp), 0, -1);

    // P = e^{-s}/(s - 1)
    CDElement N = CDElement::rational(RationalFunction(c(1), s + c(1)), 1);
    CDElement D = rhp;
    CDElement X(2.0 * e);
    CDElement Y = CDElement(1) + CDElement::rational(RationalFunction(c(2), s - c(1))) -
                  CDElement::rational(RationalFunction(Poly(GaussQ::from_double(2.0 * e)), s - c(1)), 1);
    const double bezout = cd_grid_distance(X * N + Y * D, CDElement(1));
    CDRing ring;
    CoprimeFactorization<CDElement> rcf{Side::Right, Matrix<CDElement>::scalar(N), Matrix<CDElement>::scalar(D),
                                        Matrix<CDElement>::scalar(X), Matrix<CDElement>::scalar(Y)};
    auto invert = [](const CDElement& x) { return x.inverse_if_delay_free(); };
    std::vector<CoprimeFactorization<CDElement>> controllers{
        {Side::Left, Matrix<CDElement>::scalar(-X), Matrix<CDElement>::scalar(Y), Matrix<CDElement>::scalar(-N),
         Matrix<CDElement>::scalar(D)},
        {Side::Left, Matrix<CDElement>::scalar(0), Matrix<CDElement>::scalar(1), Matrix<CDElement>::scalar(0),
         Matrix<CDElement>::scalar(1)}};
    int consistent = 0;
    std::string verdicts;
    for (const auto& lcf : controllers) {
        Verdict v = nyquist_verdict_factored(rcf, lcf, ring);
        auto H = closed_loop_factored(rcf, lcf, invert);
        bool members = H && std::all_of(H->data().begin(), H->data().end(), [](const CDElement& h) { return cd_membership(h); });
        consistent += v.stabilizes != Stabilizes::Degenerate && H && ((v.stabilizes == Stabilizes::Yes) == members);
        verdicts += std::string(verdicts.empty() ? "" : " ") + to_string(v.stabilizes);
    }
    const bool youla_yes = verdicts.rfind("yes", 0) == 0;
    report(5, idx_ok && bezout < 1e-9 && consistent == static_cast<int>(controllers.size()) && youla_yes,
           fmt::format("W(1)={} W(e^-s)={} W((s+2)/(s+1))={} W((s-1)/(s+1))={}; Bezout error {:.1e}; verdicts [{}] "
                       "match closed-loop membership {}/{}",
                       pair_text(cd_index(delta0)), pair_text(cd_index(delta1)), pair_text(cd_index(lead)),
                       pair_text(cd_index(rhp)), bezout, verdicts, consistent, controllers.size()));
}

void polydisk() {
    PolydiskRing ring(2);
    MultiPoly z1 = MultiPoly::variable(2, 0), z2 = MultiPoly::variable(2, 1);
    PolyRatio f(MultiPoly(2, GaussQ(4)) - z1 * z2), g(z1 * z2 - MultiPoly(2, GaussQ(mpq_class(1, 4))));
    IndexOutcome of = ring.index(f), og = ring.index(g);
    auto inv_f = ring.invertible_in_R(f), inv_g = ring.invertible_in_R(g);
    const double at_half = std::abs(g.eval(std::vector<std::complex<double>>{0.5, 0.5}));
    const bool ok = of.invertible_in_S && std::get<IntIndex>(*of.index).value == 0 && inv_f == true &&
                    og.invertible_in_S && std::get<IntIndex>(*og.index).value == 2 && inv_g == false && at_half < 1e-15;
    report(6, ok,
           fmt::format("4 - z1 z2: index {}, invertible {}; z1 z2 - 1/4: index {}, invertible {}, |f(1/2,1/2)| = {:.1e}",
                       of.index ? std::get<IntIndex>(*of.index).value : -99, inv_f.value_or(false),
                       og.index ? std::get<IntIndex>(*og.index).value : -99, inv_g.value_or(true), at_half));
}

void axioms() {
    const auto t0 = Clock::now();
    std::vector<AxiomReport> reports;
    reports.push_back(axiom_suite(DiskRing{}, samplers::disk_rational, 100));
    reports.push_back(axiom_suite(HardyRing{}, samplers::disk_rational, 100));
    reports.push_back(axiom_suite(ApwRing{}, samplers::apw_plus, 100));
    reports.push_back(axiom_suite(CDRing{}, samplers::callier_desoer, 100));
    reports.push_back(axiom_suite(PolydiskRing{2}, samplers::polydisk_rational, 100));
    bool ok = true;
    std::string detail;
    for (const auto& r : reports) {
        ok = ok && r.ok();
        int failed = r.a1.failed + r.a2.failed + r.a3.failed + r.a4.failed;
        detail += fmt::format("{}{} {} failed", detail.empty() ? "" : "; ", r.ring, failed);
        for (const auto& f : r.failures) std::printf("  %s: %s\n", r.ring.c_str(), f.c_str());
    }
    report(7, ok, fmt::format("n=100: {} ({:.1f} s)", detail, seconds_since(t0)));
}

void exact_vs_numeric() {
    std::mt19937 rng(8);
    int equal = 0, certified = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> deg(0, 4);
        RationalFunction f(testing::poly_with_safe_roots(rng, deg(rng)), testing::poly_with_safe_roots(rng, deg(rng)));
        int exact = disk_winding_exact(f);
        WindingResult w = winding_number({[&](double t) { return f.eval(std::polar(1.0, 2.0 * std::numbers::pi * t)); }, std::nullopt});
        equal += std::lround(w.value) == exact;
        certified += w.certified;
    }
    report(8, equal == 200 && certified >= 198, fmt::format("{}/200 equal, {}/200 certified", equal, certified));
}

}  // namespace

int main() {
    const std::pair<int, std::function<void()>> criteria[] = {
        {1, random_disk_instances}, {2, gain_sweep}, {3, additivity}, {4, mean_motion_checks},
        {5, callier_desoer},        {6, polydisk},   {7, axioms},     {8, exact_vs_numeric}};
    for (const auto& [id, run] : criteria) {
        try {
            run();
        } catch (const std::exception& e) {
            report(id, false, std::string("threw: ") + e.what());
        }
    }
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
