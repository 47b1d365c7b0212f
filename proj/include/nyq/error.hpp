#pragma once

#include <stdexcept>
#include <string>

namespace nyq {

enum class ErrorKind {
    Parse,
    DimensionMismatch,
    VariantMismatch,
    ZeroDivision,
    DegenerateBoundary,
    NeedsRefinement,
    Unresolved,
    IllPosedLoop,
    InvalidFactorization,
    UnsupportedRing,
    Membership,
    InvalidArgument,
    Io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Carries the last estimate of a numerical procedure that did not converge.
class UnresolvedError : public Error {
public:
    UnresolvedError(const std::string& what, double last_estimate)
        : Error(ErrorKind::Unresolved, what), last_estimate_(last_estimate) {}

    double last_estimate() const noexcept { return last_estimate_; }

private:
    double last_estimate_;
};

}  // namespace nyq
