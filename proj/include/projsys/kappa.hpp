#pragma once

#include <optional>
#include <string>
#include <vector>

namespace projsys {

/// Why a dimension k is or is not length-maximal for (s, q).
struct KappaStep {
    int k = 0;
    long long full_length = 0;  // (s+1)(q+1)+k-2
    long long lower = 0;
    long long upper = 0;
    std::string lower_rule;
    std::string exclusion;  // empty unless k is ruled out
};

/// kappa(s,q): the largest k admitting a code of length (s+1)(q+1)+k-2.
struct KappaEntry {
    int s = 0;
    int q = 0;
    int lower = 2;
    std::string lower_rule = "trivial.k2";
    std::string lower_witness = "two_dim_extremal";
    std::optional<int> upper;  // none when no exclusion was found in the sweep
    std::string upper_rule;    // exclusion reason at upper+1
    std::vector<KappaStep> steps;
    std::vector<std::string> notes;
    bool searched = false;

    bool exact() const noexcept { return upper && *upper == lower; }
    std::string status() const { return exact() ? "exact" : "interval"; }
};

/// Largest k in the sweep (k = 3 .. max(2q+3, 12)).
int kappa_sweep_limit(int q);

/// Reason k is ruled out for kappa(s,q): the first failing integrality quantity, else the
/// binding upper rule when it is below the full length. Empty when k is not excluded.
std::string kappa_exclusion(int s, int q, int k);

/// Bounds and integrality only; see refine_kappa in search.hpp for the search step.
KappaEntry kappa(int s, int q);

}  // namespace projsys
