#pragma once

#include "projsys/kappa.hpp"
#include "projsys/projsystem.hpp"

#include <optional>
#include <string>
#include <vector>

namespace projsys {

inline constexpr long long kDefaultSearchBudget = 100'000'000;
inline constexpr long long kSearchPointLimit = 100'000;

struct SearchConfig {
    int k = 0;
    int q = 0;
    int s = 0;
    int max_mult = 0;  // 0 means s+1
    long long budget = kDefaultSearchBudget;
    /// Root at point 0 with the largest multiplicity and put the next point at index 1
    /// (PGL is 2-transitive on points). Off means pure lexicographic extension.
    bool fix_points = true;
    bool use_engine_bound = true;
    int threads = 0;  // 0: PROJSYS_THREADS, else hardware concurrency
    /// Stop at the first system of exactly this length instead of maximizing.
    std::optional<long long> target;
};

struct SearchCertificate {
    int k = 0;
    int q = 0;
    int s = 0;
    long long n_max = 0;  // 0 when no spanning system was found
    std::optional<ProjectiveSystem> witness;
    /// The canonical tree was fully explored, or the result was proven optimal (engine
    /// bound reached, or the target found).
    bool exhaustive = false;
    long long nodes = 0;
    std::vector<std::string> rules_used;
    std::vector<std::string> symmetry;
};

/// Longest multiset in PG(k-1,q) with every hyperplane holding at most k+s-1 points.
/// Throws Unsupported when theta(k-1,q) > kSearchPointLimit.
SearchCertificate max_length(const SearchConfig& config);

enum class KappaOutcome { exists, ruled_out, exhausted_no_code, inconclusive };
std::string outcome_name(KappaOutcome o);

struct KappaVerdict {
    KappaOutcome outcome = KappaOutcome::inconclusive;
    std::string reason;  // rule id, witness source or why the search stopped
    std::optional<ProjectiveSystem> witness;
    long long nodes = 0;
};

/// Is there a code of length (s+1)(q+1)+k-2? Bounds first, then catalog witnesses, then search.
KappaVerdict verify_kappa_entry(int s, int q, int k, long long budget = kDefaultSearchBudget);

/// Dual defect of the witness. Throws ForcingViolated if a witness longer than s(q+1)+k-1
/// (s >= 1) has t > 1.
int dual_defect_scan(const SearchCertificate& cert);

/// Tightens a kappa entry with verify_kappa_entry for k above the lower end, up to the
/// upper end (or k_limit when there is none).
KappaEntry refine_kappa(KappaEntry entry, long long budget = kDefaultSearchBudget, int k_limit = 8);

/// Worker count: `requested` if positive, else PROJSYS_THREADS, else hardware concurrency.
int resolve_threads(int requested);

}  // namespace projsys
