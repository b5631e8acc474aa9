#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace projsys::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;  // wall-clock limit; exceeding it fails the criterion
};

/// Runs acceptance criteria 1-8 (or only `only` when nonzero). One line per criterion goes to `log` if given.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, std::ostream* log = nullptr, int only = 0);

/// "PASS [3] search certifications (12.3 s / 300 s): ..."
std::string format_line(const CriterionResult& r);

}  // namespace projsys::verify
