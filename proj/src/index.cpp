#include "nyq/index.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "nyq/error.hpp"

namespace nyq {

namespace {

template <class... F>
struct Overload : F... {
    using F::operator()...;
};

[[noreturn]] void mismatch(const IndexValue& a, const IndexValue& b) {
    throw Error(ErrorKind::VariantMismatch,
                "index values " + index_str(a) + " and " + index_str(b) + " come from different ring instances");
}

}  // namespace

IndexValue index_combine(const IndexValue& a, const IndexValue& b) {
    if (a.index() != b.index()) mismatch(a, b);
    return std::visit(
        Overload{
            [&](const IntIndex& x) -> IndexValue { return IntIndex{x.value + std::get<IntIndex>(b).value}; },
            [&](const RealIndex& x) -> IndexValue {
                const auto& y = std::get<RealIndex>(b);
                return RealIndex{x.value + y.value, std::max(x.tol, y.tol)};
            },
            [&](const PairIndex& x) -> IndexValue {
                const auto& y = std::get<PairIndex>(b);
                return PairIndex{x.real + y.real, x.integer + y.integer, std::max(x.tol, y.tol)};
            },
        },
        a);
}

IndexValue index_negate(const IndexValue& a) {
    return std::visit(Overload{
                          [](const IntIndex& x) -> IndexValue { return IntIndex{-x.value}; },
                          [](const RealIndex& x) -> IndexValue { return RealIndex{-x.value, x.tol}; },
                          [](const PairIndex& x) -> IndexValue { return PairIndex{-x.real, -x.integer, x.tol}; },
                      },
                      a);
}

IndexValue index_identity_like(const IndexValue& a) {
    return std::visit(Overload{
                          [](const IntIndex&) -> IndexValue { return IntIndex{0}; },
                          [](const RealIndex& x) -> IndexValue { return RealIndex{0.0, x.tol}; },
                          [](const PairIndex& x) -> IndexValue { return PairIndex{0.0, 0, x.tol}; },
                      },
                      a);
}

bool index_is_identity(const IndexValue& a) {
    return std::visit(Overload{
                          [](const IntIndex& x) { return x.value == 0; },
                          [](const RealIndex& x) { return std::abs(x.value) <= x.tol; },
                          [](const PairIndex& x) { return x.integer == 0 && std::abs(x.real) <= x.tol; },
                      },
                      a);
}

bool index_equal(const IndexValue& a, const IndexValue& b) {
    if (a.index() != b.index()) return false;
    return index_is_identity(index_combine(a, index_negate(b)));
}

std::string index_str(const IndexValue& a) {
    return std::visit(Overload{
                          [](const IntIndex& x) { return fmt::format("{}", x.value); },
                          [](const RealIndex& x) { return fmt::format("{:.10g}", x.value); },
                          [](const PairIndex& x) { return fmt::format("({:.10g}, {})", x.real, x.integer); },
                      },
                      a);
}

IndexOutcome IndexOutcome::invertible(IndexValue index, double min_modulus, bool certified, std::string note) {
    IndexOutcome o;
    o.invertible_in_S = true;
    o.index = std::move(index);
    o.certificate = {min_modulus, certified};
    o.note = std::move(note);
    return o;
}

IndexOutcome IndexOutcome::not_invertible(std::string note, bool degenerate) {
    IndexOutcome o;
    o.degenerate = degenerate;
    o.note = std::move(note);
    return o;
}

}  // namespace nyq
