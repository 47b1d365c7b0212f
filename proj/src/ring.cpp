#include "nyq/ring.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace nyq {

std::string AxiomReport::summary() const {
    auto part = [](const char* name, const AxiomCount& c) {
        return fmt::format("{} {}/{}/{}", name, c.passed, c.failed, c.skipped);
    };
    return fmt::format("{}: {}  {}  {}  {}  (passed/failed/skipped)", ring, part("A1", a1), part("A2", a2),
                       part("A3", a3), part("A4", a4));
}

namespace detail {

bool values_close(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b,
                  double rel_tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        double scale = std::max({1.0, std::abs(a[k]), std::abs(b[k])});
        if (!(std::abs(a[k] - b[k]) <= rel_tol * scale)) return false;
    }
    return true;
}

void record(AxiomCount& c, std::optional<bool> ok, std::vector<std::string>& failures, const std::string& what) {
    if (!ok) {
        ++c.skipped;
    } else if (*ok) {
        ++c.passed;
    } else {
        ++c.failed;
        failures.push_back(what);
    }
}

}  // namespace detail

}  // namespace nyq
