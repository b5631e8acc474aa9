#pragma once

#include "projsys/geometry.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace projsys {

struct CodeParams {
    int n = 0;
    int k = 0;
    int d = 0;
    int d_perp = 0;
    int s = 0;
    int t = 0;
    int k_perp = 0;
    bool projective = false;
    bool degenerate = false;
    bool griesmer_met = false;

    bool operator==(const CodeParams&) const = default;
};

/**
 * A linear [n,k,d]_q code as a multiset of points of PG(k-1,q) plus a count of zero columns.
 *
 * The support always spans the whole space (the constructor throws RankDeficient otherwise).
 */
class ProjectiveSystem {
  public:
    ProjectiveSystem(SpacePtr space, std::map<int, int> mult, int zero_mult = 0);

    const SpacePtr& space() const noexcept { return space_; }
    int k() const noexcept { return space_->k(); }
    int q() const noexcept { return space_->q(); }
    const Field& field() const noexcept { return space_->field(); }

    const std::map<int, int>& mult() const noexcept { return mult_; }
    int multiplicity(int point) const noexcept;
    int zero_mult() const noexcept { return zero_mult_; }
    int n() const noexcept { return n_; }
    int max_mult() const noexcept;
    std::vector<int> support() const;
    bool is_projective() const noexcept;

    bool operator==(const ProjectiveSystem& o) const noexcept {
        return space_->same_as(*o.space_) && mult_ == o.mult_ && zero_mult_ == o.zero_mult_;
    }

  private:
    SpacePtr space_;
    std::map<int, int> mult_;
    int zero_mult_ = 0;
    int n_ = 0;
};

/// Columns sorted by point index (each repeated by multiplicity), zero columns last.
Matrix to_generator_matrix(const ProjectiveSystem& ps);
/// Throws RankDeficient if rank(rows) < rows.rows().
ProjectiveSystem from_generator_matrix(const Field& field, const Matrix& rows);

/// Multiplicity-weighted |G ∩ H| for every hyperplane index (zero columns not included).
std::vector<int> hyperplane_counts(const ProjectiveSystem& ps);

struct MinDistance {
    int d = 0;
    std::vector<int> secants;  // hyperplane indices attaining n - d
};
MinDistance min_distance(const ProjectiveSystem& ps);

/// Smallest size of a linearly dependent sub-multiset; k + 1 when none exists (n = k).
int dual_distance(const ProjectiveSystem& ps);

CodeParams params(const ProjectiveSystem& ps);

/// Sum over i < k of ceil(d / q^i).
long long griesmer_length(int k, int d, int q);

/// weight -> number of codewords, including A_0 = 1.
std::map<int, long long> weight_distribution(const ProjectiveSystem& ps);

/// Generator matrix of the dual code (a basis of the null space of the generator matrix).
Matrix dual_code(const ProjectiveSystem& ps);

struct ShortenResult {
    ProjectiveSystem system;
    int alpha = 0;  // mass on the flat, zero columns included
    int ell = 0;    // projective dimension of the flat
};
/// Throws CodimTooSmall / EmptyQuotient.
ShortenResult quotient_shorten(const ProjectiveSystem& ps, const Flat& flat);

struct NsmdsReport {
    bool k_condition = false;          // k >= (s-1)(q+1)
    bool affine_independent = false;   // every (k-s)-subset independent, i.e. d_perp >= k-s+1
    bool applies = false;
    bool conclusion_holds = false;     // t == s
    int s = 0;
    int t = 0;
};
/// Requires s > 1 and d > 1 (Precondition otherwise).
NsmdsReport check_nsmds_conditions(const ProjectiveSystem& ps);

/// Generator-matrix text format: `q <q> poly <poly>`, `k <k> n <n>`, then k rows.
void write_gm(std::ostream& out, const ProjectiveSystem& ps);
ProjectiveSystem read_gm(std::istream& in);
void write_gm_file(const std::string& path, const ProjectiveSystem& ps);
ProjectiveSystem read_gm_file(const std::string& path);

}  // namespace projsys
