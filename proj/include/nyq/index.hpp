#pragma once

#include <optional>
#include <string>
#include <variant>

namespace nyq {

inline constexpr double kDefaultIndexTol = 1e-6;

struct IntIndex {
    long long value = 0;
};

struct RealIndex {
    double value = 0.0;
    double tol = kDefaultIndexTol;
};

/// Real x integer, as used for the Callier-Desoer pair index.
struct PairIndex {
    double real = 0.0;
    long long integer = 0;
    double tol = kDefaultIndexTol;
};

/// Element of the index group G.
using IndexValue = std::variant<IntIndex, RealIndex, PairIndex>;

/// Componentwise sum; the result carries the larger tolerance. Throws VariantMismatch.
IndexValue index_combine(const IndexValue& a, const IndexValue& b);
IndexValue index_negate(const IndexValue& a);
/// The identity of a's variant.
IndexValue index_identity_like(const IndexValue& a);
bool index_is_identity(const IndexValue& a);
/// Equality at the larger stored tolerance; false across variants.
bool index_equal(const IndexValue& a, const IndexValue& b);
std::string index_str(const IndexValue& a);

struct IndexCertificate {
    double min_modulus = 0.0;
    bool certified = false;
};

/// What one ambient-algebra query reports: invertibility in S and, when invertible, the index.
struct IndexOutcome {
    bool invertible_in_S = false;
    std::optional<IndexValue> index;
    IndexCertificate certificate;
    bool degenerate = false;  // boundary came within tolerance; neither answer is trustworthy
    std::string note;

    static IndexOutcome invertible(IndexValue index, double min_modulus, bool certified, std::string note = {});
    static IndexOutcome not_invertible(std::string note, bool degenerate = false);
};

}  // namespace nyq
