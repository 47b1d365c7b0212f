#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "nyq/apw_ring.hpp"
#include "nyq/cd_element.hpp"
#include "nyq/coprime.hpp"
#include "nyq/disk_ring.hpp"
#include "nyq/feedback.hpp"
#include "nyq/polydisk.hpp"
#include "nyq/winding.hpp"

namespace nyq::cli {

using nlohmann::json;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
        case ErrorKind::ZeroDivision: return kParse;
        case ErrorKind::InvalidFactorization: return kInvalidFactorization;
        case ErrorKind::DimensionMismatch: return kDimensionMismatch;
        case ErrorKind::UnsupportedRing: return kUnsupportedRing;
        case ErrorKind::IllPosedLoop: return kIllPosed;
        case ErrorKind::Io: return kIo;
        case ErrorKind::DegenerateBoundary:
        case ErrorKind::NeedsRefinement:
        case ErrorKind::Unresolved: return kDegenerate;
        case ErrorKind::VariantMismatch:
        case ErrorKind::Membership:
        case ErrorKind::InvalidArgument: return kFailure;
    }
    return kFailure;
}

namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

Problem load_with_flags(const std::string& path, const Flags& flags) {
    Problem p = load_problem(path);
    if (flags.ring) p.ring = parse_ring(*flags.ring);
    if (flags.tolerance) p.options.boundary_tol = *flags.tolerance;
    if (flags.index_tolerance) p.options.index_tol = *flags.index_tolerance;
    if (flags.samples) p.options.samples = *flags.samples;
    if (flags.gamma) p.options.gamma = parse_gauss(*flags.gamma);
    if (flags.window) p.options.window = *flags.window;
    if (p.options.samples < 2) fail(ErrorKind::InvalidArgument, "need at least 2 samples");
    return p;
}

std::string number_text(double x) {
    if (std::abs(x) < 1e15 && std::abs(x - std::round(x)) < 1e-9) return fmt::format("{:.1f}", std::round(x) + 0.0);
    return fmt::format("{:.10g}", x);
}

std::string index_text(const IndexValue& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, IntIndex>) return std::to_string(x.value);
            else if constexpr (std::is_same_v<T, RealIndex>) return number_text(x.value);
            else return fmt::format("({}, {})", number_text(x.real), x.integer);
        },
        v);
}

json index_json(const IndexValue& v) {
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, IntIndex>) return x.value;
            else if constexpr (std::is_same_v<T, RealIndex>) return x.value;
            else return json::array({x.real, x.integer});
        },
        v);
}

json outcome_json(const IndexOutcome& o) {
    json j{{"invertible", o.invertible_in_S},
           {"index", o.index ? index_json(*o.index) : json(nullptr)},
           {"min_modulus", o.certificate.min_modulus},
           {"certified", o.certificate.certified},
           {"degenerate", o.degenerate}};
    if (!o.note.empty()) j["note"] = o.note;
    return j;
}

int verdict_exit(Stabilizes s) {
    switch (s) {
        case Stabilizes::Yes: return kYes;
        case Stabilizes::No: return kNo;
        case Stabilizes::Degenerate: return kDegenerate;
    }
    return kFailure;
}

json verdict_json(const Verdict& v) {
    return json{{"verdict", to_string(v.stabilizes)},
                {"exit_code", verdict_exit(v.stabilizes)},
                {"index_sum", v.index_sum ? index_json(*v.index_sum) : json(nullptr)},
                {"det_I_minus_CP", outcome_json(v.det_I_minus_CP)},
                {"det_D_P", outcome_json(v.det_DP)},
                {"det_Dtilde_C", outcome_json(v.det_DtildeC)},
                {"notes", v.notes}};
}

void print_outcome(std::ostream& out, const char* name, const IndexOutcome& o) {
    out << "  " << name << ": ";
    if (o.invertible_in_S && o.index) {
        out << fmt::format("index {}, min modulus {:.6g}, {}", index_text(*o.index), o.certificate.min_modulus,
                           o.certificate.certified ? "certified" : "uncertified");
    } else {
        out << (o.degenerate ? "degenerate" : "not invertible");
    }
    out << "\n";
}

void print_verdict(std::ostream& out, const Verdict& v) {
    out << "verdict: " << to_string(v.stabilizes) << "\n";
    print_outcome(out, "det(I - CP)", v.det_I_minus_CP);
    print_outcome(out, "det D_P    ", v.det_DP);
    print_outcome(out, "det D~_C   ", v.det_DtildeC);
    out << "index sum: " << (v.index_sum ? index_text(*v.index_sum) : std::string("-")) << "\n";
    for (const auto& n : v.notes) out << "note: " << n << "\n";
}

IndexValue widen(IndexValue v, double tol) {
    std::visit(
        [&](auto& x) {
            if constexpr (!std::is_same_v<std::decay_t<decltype(x)>, IntIndex>) x.tol = std::max(x.tol, tol);
        },
        v);
    return v;
}

void apply_index_tolerance(Verdict& v, double tol) {
    if (v.stabilizes == Stabilizes::Degenerate || !v.index_sum) return;
    v.index_sum = widen(*v.index_sum, tol);
    v.stabilizes = index_is_identity(*v.index_sum) ? Stabilizes::Yes : Stabilizes::No;
}

template <class E, class Conv>
CoprimeFactorization<E> build_factorization(const FactorizationInput& f, Side side, Conv&& conv) {
    return {side, build_matrix<E>(f.N, conv), build_matrix<E>(f.D, conv), build_matrix<E>(f.X, conv),
            build_matrix<E>(f.Y, conv)};
}

int max_polydisk_vars(const Problem& p) {
    int n = p.options.variables;
    auto scan = [&](const EntryMatrix& m) {
        for (const auto& row : m)
            for (const auto& e : row)
                if (e.expr) n = std::max(n, polydisk_variable_count(*e.expr));
    };
    for (const auto* m : {p.plant ? &*p.plant : nullptr, p.controller ? &*p.controller : nullptr})
        if (m) scan(*m);
    for (const auto* f : {p.plant_factorization ? &*p.plant_factorization : nullptr,
                          p.controller_factorization ? &*p.controller_factorization : nullptr})
        if (f)
            for (const auto* m : {&f->N, &f->D, &f->X, &f->Y}) scan(*m);
    return n;
}

// Per-ring element conversion; the almost periodic basis is shared through the captured reference.
struct Converters {
    const Params& params;
    FrequencyBasis basis;
    int nvars = 2;

    RationalFunction rational(const Entry& e) const {
        return e.coefficients ? *e.coefficients : to_rational(*e.expr, params, "z");
    }
    ExponentialPolynomial exponential(const Entry& e) {
        if (!e.expr) fail(ErrorKind::Parse, "almost periodic entries are written as expressions in e(lambda)");
        return to_exponential(*e.expr, params, basis);
    }
    CDElement cd(const Entry& e) const {
        if (e.coefficients) return CDElement::rational(*e.coefficients);
        return to_cd(*e.expr, params);
    }
    PolyRatio poly(const Entry& e) const {
        if (!e.expr) fail(ErrorKind::Parse, "polydisk entries are written as expressions in z1..zn");
        return to_polyratio(*e.expr, params, nvars);
    }
};

template <RingInstance Ring>
bool matrices_equal(const Matrix<typename Ring::Element>& a, const Matrix<typename Ring::Element>& b, const Ring& ring) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!ring.equal(a(r, c), b(r, c))) return false;
    return true;
}

template <RingInstance Ring, class Conv>
Verdict analyze_factored(const Problem& p, const Ring& ring, Conv&& conv) {
    using E = typename Ring::Element;
    if (!p.plant_factorization || !p.controller_factorization) {
        fail(ErrorKind::InvalidFactorization,
             ring.name() + " has no automatic factorization; supply factorization.plant and factorization.controller");
    }
    auto rcf = build_factorization<E>(*p.plant_factorization, Side::Right, conv);
    auto lcf = build_factorization<E>(*p.controller_factorization, Side::Left, conv);
    if (p.plant && !matrices_equal(build_matrix<E>(*p.plant, conv) * rcf.D, rcf.N, ring)) {
        fail(ErrorKind::InvalidFactorization, "plant factorization fails P D = N");
    }
    if (p.controller && !matrices_equal(lcf.D * build_matrix<E>(*p.controller, conv), lcf.N, ring)) {
        fail(ErrorKind::InvalidFactorization, "controller factorization fails D C = N");
    }
    auto [G, Gt] = stack_matrices(rcf, lcf);
    if (ring.equal(det(Gt * G), ring.zero())) fail(ErrorKind::IllPosedLoop, "det(G~_C G_P) vanishes; the loop is ill-posed");
    return nyquist_verdict_factored(rcf, lcf, ring);
}

template <class Ring>
Verdict analyze_rational(const Problem& p, const Ring& ring, Converters& cv) {
    if (!p.plant || !p.controller) fail(ErrorKind::Parse, "rational rings need \"plant\" and \"controller\"");
    auto conv = [&](const Entry& e) { return cv.rational(e); };
    RationalMatrix P = build_matrix<RationalFunction>(*p.plant, conv);
    RationalMatrix C = build_matrix<RationalFunction>(*p.controller, conv);
    if (C.rows() != P.cols() || C.cols() != P.rows()) {
        fail(ErrorKind::DimensionMismatch, "plant " + P.shape() + " and controller " + C.shape());
    }
    const double tol = p.options.boundary_tol;
    RationalFactorization rcf = p.plant_factorization
                                    ? build_factorization<RationalFunction>(*p.plant_factorization, Side::Right, conv)
                                    : right_coprime_factorization(P, p.options.gamma, tol);
    RationalFactorization lcf = p.controller_factorization
                                    ? build_factorization<RationalFunction>(*p.controller_factorization, Side::Left, conv)
                                    : left_coprime_factorization(C, p.options.gamma, tol);
    return nyquist_verdict(P, C, rcf, lcf, ring);
}

Verdict analyze_once(const Problem& p, const Params& params) {
    Converters cv{params, {}, max_polydisk_vars(p)};
    const double tol = p.options.boundary_tol;
    Verdict v;
    switch (p.ring) {
        case RingKind::Disk: v = analyze_rational(p, DiskRing(tol), cv); break;
        case RingKind::Hardy: v = analyze_rational(p, HardyRing(tol), cv); break;
        case RingKind::Apw:
            v = analyze_factored(p, ApwRing{}, [&](const Entry& e) { return cv.exponential(e); });
            break;
        case RingKind::Cd: v = analyze_factored(p, CDRing{}, [&](const Entry& e) { return cv.cd(e); }); break;
        case RingKind::Polydisk:
            v = analyze_factored(p, PolydiskRing(cv.nvars), [&](const Entry& e) { return cv.poly(e); });
            break;
    }
    apply_index_tolerance(v, p.options.index_tol);
    return v;
}

struct PointResult {
    std::string value;
    std::optional<Verdict> verdict;
    std::optional<Error> error;
};

// Sweep points run on a worker pool; results keep the order of the grid.
std::vector<PointResult> run_sweep(const Problem& p) {
    const Sweep& s = *p.options.sweep;
    std::vector<PointResult> results(s.values.size());
    auto task = [&](std::size_t i) {
        results[i].value = s.values[i];
        try {
            results[i].verdict = analyze_once(p, Params{{s.parameter, parse_gauss(s.values[i])}});
        } catch (const Error& e) {
            results[i].error = e;
        } catch (const std::exception& e) {
            results[i].error = Error(ErrorKind::InvalidArgument, e.what());
        }
    };
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < results.size(); start += workers) {
        std::vector<std::future<void>> batch;
        for (std::size_t i = start; i < std::min(results.size(), start + workers); ++i)
            batch.push_back(std::async(std::launch::async, task, i));
        for (auto& f : batch) f.get();
    }
    return results;
}

void write_json(const std::optional<std::string>& path, const json& j) {
    if (!path) return;
    std::ofstream f(*path);
    if (!f) fail(ErrorKind::Io, "cannot write " + *path);
    f << j.dump(2) << "\n";
}

// Closed boundary parametrized by t in [0, 1].
using Trace = std::function<std::complex<double>(double)>;

std::complex<double> on_circle(double t) { return std::polar(1.0, 2.0 * std::numbers::pi * t); }
std::complex<double> on_axis(double t) { return {0.0, std::tan(std::numbers::pi * (t - 0.5))}; }

template <RingInstance Ring, class Conv, class At>
Trace factored_trace(const Problem& p, const Ring& ring, Conv&& conv, At at) {
    using E = typename Ring::Element;
    if (p.plant && p.controller) {
        Matrix<E> P = build_matrix<E>(*p.plant, conv), C = build_matrix<E>(*p.controller, conv);
        E d = det(Matrix<E>::identity(P.cols()) - C * P);
        if (ring.equal(d, ring.zero())) fail(ErrorKind::IllPosedLoop, "det(I - CP) vanishes identically");
        return [d, at](double t) { return at(d, t); };
    }
    if (!p.plant_factorization || !p.controller_factorization) {
        fail(ErrorKind::Parse, "need plant and controller, or both factorizations");
    }
    auto rcf = build_factorization<E>(*p.plant_factorization, Side::Right, conv);
    auto lcf = build_factorization<E>(*p.controller_factorization, Side::Left, conv);
    auto [G, Gt] = stack_matrices(rcf, lcf);
    E delta = det(Gt * G), dP = det(rcf.D), dC = det(lcf.D);
    if (ring.equal(delta, ring.zero())) fail(ErrorKind::IllPosedLoop, "det(G~_C G_P) vanishes; the loop is ill-posed");
    return [=](double t) { return at(delta, t) / (at(dP, t) * at(dC, t)); };
}

Trace det_trace(const Problem& p, Converters& cv) {
    const double tol = p.options.boundary_tol;
    switch (p.ring) {
        case RingKind::Disk:
        case RingKind::Hardy:
            return factored_trace(p, DiskRing(tol), [&](const Entry& e) { return cv.rational(e); },
                                  [](const RationalFunction& f, double t) { return f.eval(on_circle(t)); });
        case RingKind::Apw: {
            const double w = p.options.window;
            return factored_trace(p, ApwRing{}, [&](const Entry& e) { return cv.exponential(e); },
                                  [w](const ExponentialPolynomial& f, double t) { return f.eval(-w + 2.0 * w * t); });
        }
        case RingKind::Cd:
            return factored_trace(p, CDRing{}, [&](const Entry& e) { return cv.cd(e); },
                                  [](const CDElement& f, double t) { return f.eval(on_axis(t)); });
        case RingKind::Polydisk:
            return factored_trace(p, PolydiskRing(cv.nvars), [&](const Entry& e) { return cv.poly(e); },
                                  [](const PolyRatio& f, double t) {
                                      std::vector<std::complex<double>> z(static_cast<std::size_t>(f.nvars()), on_circle(t));
                                      return f.eval(z);
                                  });
    }
    fail(ErrorKind::UnsupportedRing, "unknown ring");
}

struct WindResult {
    IndexOutcome outcome;
    std::optional<bool> member, invertible;
    Trace trace;
};

// Membership and R-invertibility are reported alongside the index; either may be undecidable.
template <RingInstance Ring>
WindResult wind_with(const Ring& ring, const typename Ring::Element& f, Trace trace) {
    WindResult w{ring.index(f), std::nullopt, std::nullopt, std::move(trace)};
    try {
        w.member = ring.is_member(f);
        if (*w.member) w.invertible = ring.invertible_in_R(f);
        else w.invertible = false;
    } catch (const Error&) {
    }
    return w;
}

double grid_t(std::size_t k, std::size_t n) { return static_cast<double>(k) / static_cast<double>(n - 1); }

std::ostream& open_csv(const std::optional<std::string>& path, std::ofstream& file, std::ostream& fallback) {
    if (!path || *path == "-") return fallback;
    file.open(*path);
    if (!file) fail(ErrorKind::Io, "cannot write " + *path);
    return file;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Io, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int cmd_analyze(const std::string& path, const Flags& flags, std::ostream& out) {
    Problem p = load_with_flags(path, flags);
    out << "ring: " << ring_name(p.ring) << "\n";
    if (!p.options.sweep) {
        Verdict v = analyze_once(p, {});
        print_verdict(out, v);
        json j = verdict_json(v);
        j["ring"] = ring_name(p.ring);
        write_json(flags.json_out, j);
        return verdict_exit(v.stabilizes);
    }
    const auto results = run_sweep(p);
    int code = kYes;
    std::optional<int> error_code;
    json points = json::array();
    for (const auto& r : results) {
        out << "\n" << p.options.sweep->parameter << " = " << r.value << "\n";
        json j{{"value", r.value}};
        if (r.error) {
            int c = exit_code_for(r.error->kind());
            out << "error: " << r.error->what() << "\n";
            if (!error_code) error_code = c;
            j["error"] = r.error->what();
            j["exit_code"] = c;
        } else {
            print_verdict(out, *r.verdict);
            j.update(verdict_json(*r.verdict));
            code = std::max(code, verdict_exit(r.verdict->stabilizes));
        }
        points.push_back(std::move(j));
    }
    int final_code = error_code.value_or(code);
    write_json(flags.json_out, json{{"ring", ring_name(p.ring)},
                                    {"sweep", {{"parameter", p.options.sweep->parameter}, {"points", points}}},
                                    {"exit_code", final_code}});
    return final_code;
}

int cmd_wind(const std::string& arg, const Flags& flags, std::ostream& out) {
    std::string text = arg;
    std::optional<std::string> ring_text = flags.ring;
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        text = read_file(arg);
        auto j = json::parse(text, nullptr, false);
        if (!j.is_discarded() && j.is_object()) {
            if (!j.contains("expression") || !j["expression"].is_string()) fail(ErrorKind::Parse, arg + ": missing \"expression\"");
            text = j["expression"].get<std::string>();
            if (!ring_text && j.contains("ring")) ring_text = j["ring"].get<std::string>();
        }
    }
    const RingKind ring = ring_text ? parse_ring(*ring_text) : RingKind::Disk;
    const double tol = flags.tolerance.value_or(kBoundaryTol);
    const double window = flags.window.value_or(64.0);
    NodePtr node = parse_expression(text);
    Params none;
    WindResult w;
    switch (ring) {
        case RingKind::Disk:
        case RingKind::Hardy: {
            RationalFunction f = to_rational(*node, none, "z");
            Trace trace = [f](double t) { return f.eval(on_circle(t)); };
            w = ring == RingKind::Disk ? wind_with(DiskRing(tol), f, trace) : wind_with(HardyRing(tol), f, trace);
            break;
        }
        case RingKind::Apw: {
            FrequencyBasis basis;
            ExponentialPolynomial f = to_exponential(*node, none, basis);
            w = wind_with(ApwRing{}, f, [f, window](double t) { return f.eval(-window + 2.0 * window * t); });
            break;
        }
        case RingKind::Cd: {
            CDElement f = to_cd(*node, none);
            w = wind_with(CDRing{}, f, [f](double t) { return f.eval(on_axis(t)); });
            break;
        }
        case RingKind::Polydisk: {
            PolyRatio f = to_polyratio(*node, none, 1);
            w = wind_with(PolydiskRing(f.nvars()), f, [f](double t) {
                std::vector<std::complex<double>> z(static_cast<std::size_t>(f.nvars()), on_circle(t));
                return f.eval(z);
            });
            break;
        }
    }
    const IndexOutcome& o = w.outcome;
    const Trace& trace = w.trace;
    out << "ring: " << ring_name(ring) << "\n";
    int code = kYes;
    if (o.invertible_in_S && o.index) {
        out << "index: " << index_text(*o.index) << "\n";
        out << "certified: " << (o.certificate.certified ? "yes" : "no") << "\n";
        out << fmt::format("min_modulus: {:.17g}\n", o.certificate.min_modulus);
    } else {
        out << (o.degenerate ? "degenerate" : "not invertible") << "\n";
        code = o.degenerate ? kDegenerate : kNo;
    }
    auto answer = [](std::optional<bool> b) { return b ? (*b ? "yes" : "no") : "unknown"; };
    out << "member: " << answer(w.member) << "\n";
    out << "invertible_in_R: " << answer(w.invertible) << "\n";
    if (!o.note.empty()) out << "note: " << o.note << "\n";
    json report{{"ring", ring_name(ring)}, {"expression", text}, {"outcome", outcome_json(o)}, {"exit_code", code}};
    report["member"] = w.member ? json(*w.member) : json(nullptr);
    report["invertible_in_R"] = w.invertible ? json(*w.invertible) : json(nullptr);
    write_json(flags.json_out, report);

    if (flags.csv) {
        const std::size_t n = flags.samples.value_or(1024);
        if (n < 2) fail(ErrorKind::InvalidArgument, "need at least 2 samples");
        std::vector<std::complex<double>> values(n);
        for (std::size_t k = 0; k < n; ++k) values[k] = trace(grid_t(k, n));
        std::vector<double> arg_unwrapped = phase_unwrap(values);
        std::ofstream file;
        std::ostream& csv = open_csv(flags.csv, file, out);
        csv << "t,re,im,unwrapped_arg\n";
        for (std::size_t k = 0; k < n; ++k) {
            csv << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g}\n", grid_t(k, n), values[k].real(), values[k].imag(),
                               arg_unwrapped[k]);
        }
    }
    return code;
}

int cmd_factorize(const std::string& path, const Flags& flags, std::ostream& out) {
    Problem p = load_with_flags(path, flags);
    if (!is_rational_ring(p.ring)) {
        fail(ErrorKind::UnsupportedRing, std::string("automatic factorization is only available over rational rings, not ") +
                                             ring_name(p.ring));
    }
    if (p.options.sweep) fail(ErrorKind::InvalidArgument, "factorize does not take a sweep");
    if (!p.plant) fail(ErrorKind::Parse, "factorize needs a \"plant\"");
    Params none;
    Converters cv{none, {}, 2};
    auto conv = [&](const Entry& e) { return cv.rational(e); };
    const double tol = p.options.boundary_tol;

    json doc{{"ring", ring_name(p.ring)}};
    json fac;
    auto emit = [](const RationalFactorization& f) {
        return json{{"N", matrix_to_json(f.N)}, {"D", matrix_to_json(f.D)}, {"X", matrix_to_json(f.X)}, {"Y", matrix_to_json(f.Y)}};
    };
    RationalMatrix P = build_matrix<RationalFunction>(*p.plant, conv);
    RationalFactorization rcf = right_coprime_factorization(P, p.options.gamma, tol);
    if (!verify_bezout(rcf, P)) fail(ErrorKind::InvalidFactorization, "plant factorization failed its Bezout check");
    doc["plant"] = matrix_to_json(P);
    fac["plant"] = emit(rcf);
    if (p.controller) {
        RationalMatrix C = build_matrix<RationalFunction>(*p.controller, conv);
        RationalFactorization lcf = left_coprime_factorization(C, p.options.gamma, tol);
        if (!verify_bezout(lcf, C)) fail(ErrorKind::InvalidFactorization, "controller factorization failed its Bezout check");
        doc["controller"] = matrix_to_json(C);
        fac["controller"] = emit(lcf);
    }
    doc["factorization"] = fac;
    doc["options"] = {{"tolerance", p.options.boundary_tol}, {"index_tolerance", p.options.index_tol}};

    const std::string text = doc.dump(2) + "\n";
    if (flags.output) {
        std::ofstream f(*flags.output);
        if (!f) fail(ErrorKind::Io, "cannot write " + *flags.output);
        f << text;
    } else {
        out << text;
    }
    return 0;
}

int cmd_curve(const std::string& path, const Flags& flags, std::ostream& out) {
    Problem p = load_with_flags(path, flags);
    Params none;
    Converters cv{none, {}, max_polydisk_vars(p)};
    Trace trace = det_trace(p, cv);
    const std::size_t n = p.options.samples;
    std::ofstream file;
    std::ostream& csv = open_csv(flags.csv, file, out);
    csv << "t,re,im\n";
    for (std::size_t k = 0; k < n; ++k) {
        double t = grid_t(k, n);
        std::complex<double> v = trace(t);
        csv << fmt::format("{:.17g},{:.17g},{:.17g}\n", t, v.real(), v.imag());
    }
    return 0;
}

}  // namespace nyq::cli
