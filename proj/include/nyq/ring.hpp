#pragma once

#include <complex>
#include <concepts>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nyq/index.hpp"

namespace nyq {

/// A concrete (R, S, iota) triple. Elements carry + - * themselves; the ring object supplies
/// equality, membership in R, the ambient index, and an R-invertibility decision that does not
/// go through the index (so the harness can check one against the other).
template <class Ring>
concept RingInstance = requires(const Ring& r, const typename Ring::Element& a) {
    typename Ring::Element;
    { r.name() } -> std::convertible_to<std::string>;
    { r.one() } -> std::same_as<typename Ring::Element>;
    { r.zero() } -> std::same_as<typename Ring::Element>;
    { a + a } -> std::convertible_to<typename Ring::Element>;
    { a - a } -> std::convertible_to<typename Ring::Element>;
    { a * a } -> std::convertible_to<typename Ring::Element>;
    { r.equal(a, a) } -> std::same_as<bool>;
    { r.is_member(a) } -> std::same_as<bool>;
    { r.index(a) } -> std::same_as<IndexOutcome>;
    // nullopt when the instance cannot decide
    { r.invertible_in_R(a) } -> std::same_as<std::optional<bool>>;
    // values of the image in S at fixed, instance-chosen points
    { r.boundary_values(a) } -> std::same_as<std::vector<std::complex<double>>>;
};

struct AxiomCount {
    int passed = 0;
    int failed = 0;
    int skipped = 0;
};

struct AxiomReport {
    std::string ring;
    AxiomCount a1, a2, a3, a4;
    std::vector<std::string> failures;

    bool ok() const { return a1.failed + a2.failed + a3.failed + a4.failed == 0; }
    std::string summary() const;
};

namespace detail {

bool values_close(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b,
                  double rel_tol);
void record(AxiomCount& c, std::optional<bool> ok, std::vector<std::string>& failures, const std::string& what);

}  // namespace detail

/// Property harness for the four axioms.
/// A1: commutativity, associativity, distributivity, units.
/// A2: closure of R and the embedding R -> S respecting + and * at boundary points.
/// A3: iota(ab) = iota(a) iota(b) whenever a, b are invertible in S.
/// A4: for x in R invertible in S, iota(x) = identity iff the instance finds x invertible in R.
/// Failures are counted and described, never thrown.
template <RingInstance Ring>
AxiomReport axiom_suite(const Ring& ring, const std::function<typename Ring::Element(std::mt19937&)>& sampler, int n,
                        unsigned seed = 1) {
    using E = typename Ring::Element;
    AxiomReport rep;
    rep.ring = ring.name();
    if (n <= 0) return rep;
    std::mt19937 rng(seed);
    std::vector<E> xs;
    xs.reserve(n);
    for (int k = 0; k < n; ++k) xs.push_back(sampler(rng));

    auto safe_index = [&](const E& x) -> std::optional<IndexOutcome> {
        try {
            return ring.index(x);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    };

    {
        auto o = safe_index(ring.one());
        bool ok = o && o->invertible_in_S && index_is_identity(*o->index);
        detail::record(rep.a3, ok, rep.failures, "index of the unit is not the identity");
    }

    for (int k = 0; k < n; ++k) {
        const E& a = xs[k];
        const E& b = xs[(k + 1) % n];
        const E& c = xs[(k + 2) % n];
        const std::string tag = " (sample " + std::to_string(k) + ")";

        const E ab = a * b;
        bool a1 = ring.equal(ab, b * a) && ring.equal(ab * c, a * (b * c)) &&
                  ring.equal(a * (b + c), ab + a * c) && ring.equal(a * ring.one(), a) &&
                  ring.equal(a + ring.zero(), a) && ring.equal(a - a, ring.zero());
        detail::record(rep.a1, a1, rep.failures, "ring identities" + tag);

        bool members = ring.is_member(a) && ring.is_member(ab) && ring.is_member(a + b);
        bool hom = true;
        {
            auto va = ring.boundary_values(a), vb = ring.boundary_values(b);
            auto vab = ring.boundary_values(ab), vsum = ring.boundary_values(a + b);
            std::vector<std::complex<double>> prod(va.size()), sum(va.size());
            for (std::size_t j = 0; j < va.size(); ++j) {
                prod[j] = va[j] * vb[j];
                sum[j] = va[j] + vb[j];
            }
            hom = detail::values_close(vab, prod, 1e-8) && detail::values_close(vsum, sum, 1e-8);
        }
        detail::record(rep.a2, members && hom, rep.failures, "embedding of R into S" + tag);

        auto oa = safe_index(a), ob = safe_index(b), oab = safe_index(ab);
        std::optional<bool> a3;
        if (oa && ob && oab && !oa->degenerate && !ob->degenerate && !oab->degenerate && oa->invertible_in_S &&
            ob->invertible_in_S) {
            a3 = oab->invertible_in_S && index_equal(index_combine(*oa->index, *ob->index), *oab->index);
        }
        detail::record(rep.a3, a3, rep.failures, "index homomorphism" + tag);

        std::optional<bool> a4;
        if (oa && !oa->degenerate) {
            std::optional<bool> inv_r;
            try {
                inv_r = ring.invertible_in_R(a);
            } catch (const std::exception&) {
            }
            if (inv_r) {
                if (oa->invertible_in_S) a4 = index_is_identity(*oa->index) == *inv_r;
                else a4 = !*inv_r;
            }
        }
        detail::record(rep.a4, a4, rep.failures, "R-invertibility versus index" + tag);
    }
    return rep;
}

}  // namespace nyq
