#pragma once

#include "projsys/projsystem.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace projsys {

enum class ConstructionId {
    trivial_spike,
    two_dim_extremal,
    full_space,
    plane_minus_line,
    hyperoval,
    denniston,
    elliptic_quadric,
    cap8_pg32,
    union_,
};

std::string construction_name(ConstructionId id);
std::optional<ConstructionId> parse_construction(std::string_view name);

/// e_1 with multiplicity s+1 plus e_2..e_k: a [k+s, k, 1] code.
ProjectiveSystem trivial_spike(int k, int q, int s);
/// Every point of PG(1,q) with multiplicity s+1.
ProjectiveSystem two_dim_extremal(int q, int s);
/// All points of PG(k-1,q).
ProjectiveSystem full_space(int k, int q);
/// PG(2,q) without the line x0 = 0.
ProjectiveSystem plane_minus_line(int q);
/// Conic {(1,t,t^2)} plus (0,1,0) and (0,0,1). Throws QOdd.
ProjectiveSystem hyperoval(int q);
/// Maximal (degree*q - q + degree, degree)-arc in PG(2,q). Throws QOdd / BadDegree.
ProjectiveSystem denniston(int q, int degree);
/// Elliptic quadric in PG(3,q): q^2+1 points, no three collinear.
ProjectiveSystem elliptic_quadric(int q);
/// The 8 points of PG(3,2) off the plane x0 = 0.
ProjectiveSystem cap8_pg32();
/// Multiset sum. Throws AmbientMismatch.
ProjectiveSystem union_of(const ProjectiveSystem& a, const ProjectiveSystem& b);

/// Smallest lambda with z^2 + lambda z + 1 irreducible over GF(q), q even.
Elem denniston_lambda(const Field& f);
/// Smallest (b, c) with z^2 + b z + c irreducible over GF(q).
std::pair<Elem, Elem> quadric_coefficients(const Field& f);

struct ConstructionArgs {
    int q = 0;
    int k = 0;
    int s = 0;
    int degree = 0;
};
/// Dispatch by id for the command line; `union_` is rejected (it needs two inputs).
ProjectiveSystem construct(ConstructionId id, const ConstructionArgs& args);

/// The system behind a lower-bound witness name at (k,q,s), when it can be built directly.
std::optional<ProjectiveSystem> witness_system(const std::string& witness, int k, int q, int s);

}  // namespace projsys
