#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "nyq/error.hpp"
#include "problem.hpp"

namespace nyq::cli {

// 0 yes, 1 no, 2 degenerate; errors from 3 up.
enum ExitCode : int {
    kYes = 0,
    kNo = 1,
    kDegenerate = 2,
    kUsage = 3,
    kParse = 4,
    kInvalidFactorization = 5,
    kDimensionMismatch = 6,
    kUnsupportedRing = 7,
    kIllPosed = 8,
    kIo = 9,
    kFailure = 10,
};

int exit_code_for(ErrorKind kind);

/// Command-line overrides; unset fields fall back to the problem file, then to the defaults.
struct Flags {
    std::optional<std::string> ring;
    std::optional<double> tolerance;
    std::optional<double> index_tolerance;
    std::optional<std::size_t> samples;
    std::optional<std::string> gamma;
    std::optional<double> window;
    std::optional<std::string> csv;
    std::optional<std::string> json_out;
    std::optional<std::string> output;
};

int cmd_analyze(const std::string& path, const Flags& flags, std::ostream& out);
int cmd_wind(const std::string& expression_or_path, const Flags& flags, std::ostream& out);
int cmd_factorize(const std::string& path, const Flags& flags, std::ostream& out);
int cmd_curve(const std::string& path, const Flags& flags, std::ostream& out);

}  // namespace nyq::cli
