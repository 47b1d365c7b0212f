#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "expr.hpp"
#include "nyq/gaussian.hpp"
#include "nyq/matrix.hpp"
#include "nyq/rational_function.hpp"
#include "nyq/smith_mcmillan.hpp"

namespace nyq::cli {

enum class RingKind { Disk, Hardy, Apw, Cd, Polydisk };

/// Accepts the full names and the short forms disk, hardy, ap, cd, polydisk.
RingKind parse_ring(const std::string& name);
const char* ring_name(RingKind r);
bool is_rational_ring(RingKind r);

/// One matrix entry: an expression, or explicit coefficient arrays (num, den).
struct Entry {
    std::shared_ptr<const Node> expr;
    std::optional<RationalFunction> coefficients;
};
using EntryMatrix = std::vector<std::vector<Entry>>;

struct FactorizationInput {
    EntryMatrix N, D, X, Y;
};

struct Sweep {
    std::string parameter;
    std::vector<std::string> values;  // exact rational strings
};

struct Options {
    double boundary_tol = 1e-9;
    double index_tol = 1e-6;
    std::size_t samples = 1024;
    GaussQ gamma = GaussQ(2);
    double window = 64.0;  // half-width of the real-line window for almost periodic curves
    int variables = 2;     // polydisk
    std::optional<Sweep> sweep;
};

struct Problem {
    RingKind ring = RingKind::Disk;
    std::optional<EntryMatrix> plant, controller;
    std::optional<FactorizationInput> plant_factorization, controller_factorization;
    Options options;
};

/// Reads and validates a problem file. Throws Error(Io) or Error(Parse); dimension checks that do
/// not depend on the ring throw DimensionMismatch.
Problem load_problem(const std::string& path);
Problem parse_problem(const nlohmann::json& j);

EntryMatrix parse_matrix(const nlohmann::json& j, const char* what);

/// Evaluates an entry matrix with a per-entry converter.
template <class T, class F>
Matrix<T> build_matrix(const EntryMatrix& m, F&& convert) {
    Matrix<T> out(m.size(), m.empty() ? 0 : m[0].size());
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m[r].size(); ++c) out(r, c) = convert(m[r][c]);
    return out;
}

/// Coefficient-array serialization used by factorize: {"num": [...], "den": [...]}.
nlohmann::json rational_to_json(const RationalFunction& f);
nlohmann::json matrix_to_json(const RationalMatrix& m);

}  // namespace nyq::cli
