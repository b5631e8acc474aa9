#pragma once

#include "projsys/gf.hpp"
#include "projsys/matrix.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace projsys {

/// Number of points of PG(dim, q), i.e. (q^(dim+1) - 1) / (q - 1); 0 for dim < 0.
/// Saturates at LLONG_MAX/4.
long long theta(int dim, int q) noexcept;

/// Gaussian binomial [n choose m]_q: the number of m-dimensional subspaces of GF(q)^n.
long long gaussian_binomial(int n, int m, int q) noexcept;

inline constexpr long long kDefaultPointLimit = 1'000'000;

struct Point {
    std::vector<Elem> coords;
    int index = -1;
};

struct Hyperplane {
    std::vector<Elem> dual_coords;
    int index = -1;
};

/// Compressed adjacency: the neighbours of item i are values[offsets[i] .. offsets[i+1]).
struct Adjacency {
    std::vector<std::int64_t> offsets;
    std::vector<int> values;

    std::span<const int> operator[](std::size_t i) const noexcept {
        return {values.data() + offsets[i], static_cast<std::size_t>(offsets[i + 1] - offsets[i])};
    }
    std::size_t size() const noexcept { return offsets.empty() ? 0 : offsets.size() - 1; }
};

/// Point-hyperplane incidence, both directions. Hyperplanes share the point index space
/// (a hyperplane is named by its normalized dual coordinates).
struct Incidence {
    Adjacency hyperplanes_of_point;
    Adjacency points_of_hyperplane;
};

/**
 * PG(k-1, q): the normalized points of GF(q)^k in lexicographic order of coordinate tuples.
 *
 * Points and hyperplanes are addressed by index. The incidence table is built on first
 * use and shared read-only afterwards.
 */
class ProjectiveSpace {
  public:
    /// Throws Overflow if theta(k-1, q) exceeds `point_limit`.
    ProjectiveSpace(int k, Field field, long long point_limit = kDefaultPointLimit);

    /// Shared instance per (k, q) with the default limit.
    static std::shared_ptr<const ProjectiveSpace> get(int k, int q);

    int k() const noexcept { return k_; }
    int q() const noexcept { return field_.q(); }
    const Field& field() const noexcept { return field_; }
    int num_points() const noexcept { return num_points_; }

    std::span<const Elem> coords(int index) const noexcept {
        return {coords_.data() + static_cast<std::size_t>(index) * k_, static_cast<std::size_t>(k_)};
    }
    Point point(int index) const;
    Hyperplane hyperplane(int index) const;

    /// Index of the point spanned by `v` (any nonzero scalar multiple); -1 for the zero vector.
    int index_of(std::span<const Elem> v) const;

    Elem dot(int point, int hyperplane) const noexcept;
    bool incident(int point, int hyperplane) const noexcept { return dot(point, hyperplane) == 0; }

    /// Throws Overflow when theta(k-1,q) * theta(k-2,q) exceeds the table cap.
    const Incidence& incidence() const;
    bool incidence_available() const noexcept;

    bool same_as(const ProjectiveSpace& other) const noexcept { return k_ == other.k_ && field_ == other.field_; }

  private:
    int k_;
    Field field_;
    int num_points_;
    std::vector<Elem> coords_;
    std::vector<std::uint64_t> codes_;  // sorted base-q value of each point's coordinate tuple
    std::vector<int> dense_index_;      // code -> index when q^k is small, else empty
    mutable std::once_flag incidence_once_;
    mutable std::unique_ptr<Incidence> incidence_;
};

using SpacePtr = std::shared_ptr<const ProjectiveSpace>;

/// All points of PG(k-1, q) in canonical order.
std::vector<Point> enumerate_points(int k, const Field& field, long long point_limit = kDefaultPointLimit);

/// Linear rank of the coordinate vectors. Throws MixedAmbient on differing lengths.
int rank(const Field& field, std::span<const Point> points);
int rank(const ProjectiveSpace& space, std::span<const int> point_indices);

/// A projective subspace, stored as the reduced row-echelon basis of its linear span.
class Flat {
  public:
    Flat() = default;
    Flat(int k, Echelon basis) : k_(k), basis_(std::move(basis)) {}

    int k() const noexcept { return k_; }
    int proj_dim() const noexcept { return basis_.rank() - 1; }
    int codim() const noexcept { return k_ - basis_.rank(); }
    const Echelon& basis() const noexcept { return basis_; }

    bool contains(const Field& f, std::span<const Elem> v) const;

    bool operator==(const Flat& other) const noexcept {
        return k_ == other.k_ && basis_.rows == other.basis_.rows;
    }

  private:
    int k_ = 0;
    Echelon basis_;
};

Flat span_flat(const ProjectiveSpace& space, std::span<const int> point_indices);
Flat span_flat(const Field& field, std::span<const Point> points);

std::vector<int> points_of(const ProjectiveSpace& space, const Flat& flat);

/// Hyperplanes (by index) containing the flat.
std::vector<int> hyperplanes_through(const ProjectiveSpace& space, const Flat& flat);

/// Every flat of the given projective dimension, in a deterministic order.
std::vector<Flat> enumerate_flats(const ProjectiveSpace& space, int proj_dim);

/// Points of each flat of the given projective dimension plus the reverse map.
struct FlatIncidence {
    Adjacency points_of_flat;
    Adjacency flats_of_point;
};
FlatIncidence flat_incidence(const ProjectiveSpace& space, int proj_dim);

/// Quotient of PG(k-1,q) by a flat of codimension r >= 2: PG(r-1,q).
struct QuotientMap {
    int r = 0;
    SpacePtr quotient;
    /// Quotient point of <flat, P> for each point P; -1 for points on the flat.
    std::vector<int> assign;
};

/// Throws CodimTooSmall if the flat has codimension < 2.
QuotientMap quotient_map(const ProjectiveSpace& space, const Flat& flat);

}  // namespace projsys
