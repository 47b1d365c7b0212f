#include "problem.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "nyq/error.hpp"

namespace nyq::cli {

using nlohmann::json;

RingKind parse_ring(const std::string& name) {
    if (name == "disk" || name == "disk_rational") return RingKind::Disk;
    if (name == "hardy" || name == "hardy_rational") return RingKind::Hardy;
    if (name == "ap" || name == "apw" || name == "apw_plus") return RingKind::Apw;
    if (name == "cd" || name == "callier_desoer") return RingKind::Cd;
    if (name == "polydisk" || name == "polydisk_rational") return RingKind::Polydisk;
    throw Error(ErrorKind::UnsupportedRing, "unknown ring '" + name + "'");
}

const char* ring_name(RingKind r) {
    switch (r) {
        case RingKind::Disk: return "disk_rational";
        case RingKind::Hardy: return "hardy_rational";
        case RingKind::Apw: return "apw_plus";
        case RingKind::Cd: return "callier_desoer";
        case RingKind::Polydisk: return "polydisk_rational";
    }
    return "?";
}

bool is_rational_ring(RingKind r) { return r == RingKind::Disk || r == RingKind::Hardy; }

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

// Symbolic positions take strings; JSON integers are tolerated, floats never.
std::string symbol_text(const json& j, const std::string& where) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    if (j.is_number()) bad(where + ": floating-point literal in a symbolic position; write it as a string such as \"1/5\"");
    bad(where + ": expected a string");
}

Entry parse_entry(const json& j, const std::string& where) {
    Entry e;
    if (j.is_object()) {
        if (!j.contains("num") || !j.contains("den")) bad(where + ": coefficient form needs \"num\" and \"den\"");
        auto coeffs = [&](const json& arr, const char* part) {
            if (!arr.is_array()) bad(where + "." + part + ": expected an array of coefficient strings");
            std::vector<GaussQ> v;
            for (const auto& c : arr) v.push_back(parse_gauss(symbol_text(c, where + "." + part)));
            return Poly(std::move(v));
        };
        Poly num = coeffs(j["num"], "num"), den = coeffs(j["den"], "den");
        if (den.is_zero()) bad(where + ": zero denominator");
        e.coefficients = RationalFunction(num, den);
        return e;
    }
    e.expr = parse_expression(symbol_text(j, where));
    return e;
}

double positive_number(const json& j, const char* key) {
    if (!j.is_number()) bad(std::string("options.") + key + ": expected a number");
    double v = j.get<double>();
    if (!(v > 0)) bad(std::string("options.") + key + ": must be positive");
    return v;
}

Options parse_options(const json& j) {
    Options o;
    if (j.is_null()) return o;
    if (!j.is_object()) bad("options: expected an object");
    for (const auto& [key, v] : j.items()) {
        if (key == "tolerance") o.boundary_tol = positive_number(v, "tolerance");
        else if (key == "index_tolerance") o.index_tol = positive_number(v, "index_tolerance");
        else if (key == "samples") {
            if (!v.is_number_integer() || v.get<long long>() < 2) bad("options.samples: expected an integer >= 2");
            o.samples = v.get<std::size_t>();
        } else if (key == "gamma") o.gamma = parse_gauss(symbol_text(v, "options.gamma"));
        else if (key == "window") o.window = positive_number(v, "window");
        else if (key == "variables") {
            if (!v.is_number_integer() || v.get<int>() < 1 || v.get<int>() > 4) bad("options.variables: expected 1..4");
            o.variables = v.get<int>();
        } else if (key == "sweep") {
            if (!v.is_object() || !v.contains("parameter") || !v.contains("values") || !v["values"].is_array()) {
                bad("options.sweep: expected {\"parameter\": name, \"values\": [...]}");
            }
            Sweep s{v["parameter"].get<std::string>(), {}};
            for (const auto& x : v["values"]) {
                std::string t = symbol_text(x, "options.sweep.values");
                parse_gauss(t);  // validate now
                s.values.push_back(t);
            }
            if (s.values.empty()) bad("options.sweep.values: empty");
            o.sweep = std::move(s);
        } else {
            bad("options: unknown key '" + key + "'");
        }
    }
    return o;
}

FactorizationInput parse_factorization(const json& j, const std::string& where) {
    if (!j.is_object()) bad(where + ": expected an object with N, D, X, Y");
    auto get = [&](const char* k) {
        if (!j.contains(k)) bad(where + ": missing " + k);
        return parse_matrix(j[k], (where + "." + k).c_str());
    };
    return {get("N"), get("D"), get("X"), get("Y")};
}

}  // namespace

EntryMatrix parse_matrix(const json& j, const char* what) {
    EntryMatrix m;
    if (!j.is_array()) {
        m.push_back({parse_entry(j, what)});
        return m;
    }
    if (j.empty()) throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": empty matrix");
    if (!j[0].is_array()) {
        std::vector<Entry> row;
        for (std::size_t c = 0; c < j.size(); ++c) row.push_back(parse_entry(j[c], fmt::format("{}[{}]", what, c)));
        m.push_back(std::move(row));
        return m;
    }
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array()) bad(fmt::format("{}[{}]: expected a row array", what, r));
        std::vector<Entry> row;
        for (std::size_t c = 0; c < j[r].size(); ++c) row.push_back(parse_entry(j[r][c], fmt::format("{}[{}][{}]", what, r, c)));
        if (row.empty() || (!m.empty() && row.size() != m[0].size())) {
            throw Error(ErrorKind::DimensionMismatch, fmt::format("{}: ragged rows", what));
        }
        m.push_back(std::move(row));
    }
    return m;
}

Problem parse_problem(const json& j) {
    if (!j.is_object()) bad("problem: expected a JSON object");
    Problem p;
    for (const auto& [key, v] : j.items()) {
        if (key == "ring") p.ring = parse_ring(v.get<std::string>());
        else if (key == "plant") p.plant = parse_matrix(v, "plant");
        else if (key == "controller") p.controller = parse_matrix(v, "controller");
        else if (key == "factorization") {
            if (!v.is_object()) bad("factorization: expected an object");
            if (v.contains("plant")) p.plant_factorization = parse_factorization(v["plant"], "factorization.plant");
            if (v.contains("controller")) {
                p.controller_factorization = parse_factorization(v["controller"], "factorization.controller");
            }
        } else if (key == "options") p.options = parse_options(v);
        else if (key == "comment" || key == "description") continue;
        else bad("problem: unknown key '" + key + "'");
    }
    return p;
}

Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        bad(path + ": " + e.what());
    }
    try {
        return parse_problem(j);
    } catch (const json::exception& e) {
        bad(path + ": " + e.what());
    }
}

json rational_to_json(const RationalFunction& f) {
    return json{{"num", f.num().to_strings()}, {"den", f.den().to_strings()}};
}

json matrix_to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace nyq::cli
