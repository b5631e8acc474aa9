#pragma once

// Brute-force references used by tests and the acceptance suite. They work from the generator
// matrix or raw coordinates and avoid the incidence tables and search code they check.

#include "projsys/projsystem.hpp"

#include <map>
#include <optional>
#include <random>

namespace projsys::oracle {

/// Weight distribution by encoding every message (q^k codewords).
std::map<int, long long> codeword_weights(const ProjectiveSystem& ps);

/// Minimum nonzero weight of the dual code by enumerating its q^(n-k) words; k+1 when n = k.
int dual_min_weight(const ProjectiveSystem& ps);

/// Longest spanning multiset of PG(k-1,q) (multiplicity <= s+1) with every hyperplane holding at
/// most k+s-1 points, by plain enumeration with capacity checks only.
int max_multiarc_length(int k, int q, int s);

/// Random spanning system with n points chosen with replacement (zero_mult zero columns added).
ProjectiveSystem random_system(int k, int q, int n, std::mt19937_64& rng, int zero_mult = 0);

}  // namespace projsys::oracle
