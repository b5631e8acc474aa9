#include "projsys/constructions.hpp"

#include "projsys/error.hpp"

#include <array>

namespace projsys {

namespace {

constexpr std::array<std::pair<ConstructionId, std::string_view>, 9> kNames{{
    {ConstructionId::trivial_spike, "trivial_spike"},
    {ConstructionId::two_dim_extremal, "two_dim_extremal"},
    {ConstructionId::full_space, "full_space"},
    {ConstructionId::plane_minus_line, "plane_minus_line"},
    {ConstructionId::hyperoval, "hyperoval"},
    {ConstructionId::denniston, "denniston"},
    {ConstructionId::elliptic_quadric, "elliptic_quadric"},
    {ConstructionId::cap8_pg32, "cap8_pg32"},
    {ConstructionId::union_, "union"},
}};

// Index of the point with the given coordinates.
int at(const ProjectiveSpace& space, std::initializer_list<int> coords) {
    std::vector<Elem> v(coords.begin(), coords.end());
    return space.index_of(v);
}

bool has_root(const Field& f, Elem b, Elem c) {
    for (int z = 0; z < f.q(); ++z) {
        const Elem e = static_cast<Elem>(z);
        if (f.add(f.add(f.mul(e, e), f.mul(b, e)), c) == 0) return true;
    }
    return false;
}

void require_even(int q) {
    if (q % 2 != 0) throw Error(ErrorCode::QOdd, "q = " + std::to_string(q) + " is odd");
}

}  // namespace

std::string construction_name(ConstructionId id) {
    for (const auto& [i, name] : kNames)
        if (i == id) return std::string(name);
    return "unknown";
}

std::optional<ConstructionId> parse_construction(std::string_view name) {
    for (const auto& [i, n] : kNames)
        if (n == name) return i;
    return std::nullopt;
}

ProjectiveSystem trivial_spike(int k, int q, int s) {
    if (k < 2 || s < 0) throw Error(ErrorCode::Precondition, "trivial_spike needs k >= 2, s >= 0");
    auto space = ProjectiveSpace::get(k, q);
    std::map<int, int> mult;
    std::vector<Elem> e(k, 0);
    for (int i = 0; i < k; ++i) {
        std::fill(e.begin(), e.end(), 0);
        e[i] = 1;
        mult[space->index_of(e)] = i == 0 ? s + 1 : 1;
    }
    return ProjectiveSystem(space, std::move(mult));
}

ProjectiveSystem two_dim_extremal(int q, int s) {
    if (s < 0) throw Error(ErrorCode::Precondition, "two_dim_extremal needs s >= 0");
    auto space = ProjectiveSpace::get(2, q);
    std::map<int, int> mult;
    for (int i = 0; i < space->num_points(); ++i) mult[i] = s + 1;
    return ProjectiveSystem(space, std::move(mult));
}

ProjectiveSystem full_space(int k, int q) {
    if (k < 2) throw Error(ErrorCode::Precondition, "full_space needs k >= 2");
    auto space = ProjectiveSpace::get(k, q);
    std::map<int, int> mult;
    for (int i = 0; i < space->num_points(); ++i) mult[i] = 1;
    return ProjectiveSystem(space, std::move(mult));
}

ProjectiveSystem plane_minus_line(int q) {
    auto space = ProjectiveSpace::get(3, q);
    std::map<int, int> mult;
    for (int i = 0; i < space->num_points(); ++i)
        if (space->coords(i)[0] != 0) mult[i] = 1;
    return ProjectiveSystem(space, std::move(mult));
}

ProjectiveSystem hyperoval(int q) {
    require_even(q);
    auto space = ProjectiveSpace::get(3, q);
    const Field& f = space->field();
    std::map<int, int> mult;
    for (int t = 0; t < q; ++t) {
        const Elem e = static_cast<Elem>(t);
        mult[at(*space, {1, t, f.mul(e, e)})] = 1;
    }
    mult[at(*space, {0, 1, 0})] = 1;
    mult[at(*space, {0, 0, 1})] = 1;
    return ProjectiveSystem(space, std::move(mult));
}

Elem denniston_lambda(const Field& f) {
    for (int l = 0; l < f.q(); ++l)
        if (!has_root(f, static_cast<Elem>(l), 1)) return static_cast<Elem>(l);
    throw Error(ErrorCode::Precondition, "no anisotropic form over GF(" + std::to_string(f.q()) + ")");
}

std::pair<Elem, Elem> quadric_coefficients(const Field& f) {
    for (int b = 0; b < f.q(); ++b)
        for (int c = 0; c < f.q(); ++c)
            if (!has_root(f, static_cast<Elem>(b), static_cast<Elem>(c))) return {static_cast<Elem>(b), static_cast<Elem>(c)};
    throw Error(ErrorCode::Precondition, "no irreducible quadratic over GF(" + std::to_string(f.q()) + ")");
}

ProjectiveSystem denniston(int q, int degree) {
    require_even(q);
    if (degree < 2 || degree > q || q % degree != 0)
        throw Error(ErrorCode::BadDegree, "degree " + std::to_string(degree) + " must divide q = " + std::to_string(q) +
                                              " and be at least 2");
    auto space = ProjectiveSpace::get(3, q);
    const Field& f = space->field();
    const Elem lambda = denniston_lambda(f);
    // In characteristic 2 the span of the first e basis elements is exactly the values below 2^e.
    std::map<int, int> mult;
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            const Elem ex = static_cast<Elem>(x);
            const Elem ey = static_cast<Elem>(y);
            const Elem v = f.add(f.add(f.mul(ex, ex), f.mul(lambda, f.mul(ex, ey))), f.mul(ey, ey));
            if (v < degree) mult[at(*space, {1, x, y})] = 1;
        }
    return ProjectiveSystem(space, std::move(mult));
}

ProjectiveSystem elliptic_quadric(int q) {
    auto space = ProjectiveSpace::get(4, q);
    const Field& f = space->field();
    const auto [b, c] = quadric_coefficients(f);
    std::map<int, int> mult;
    for (int y = 0; y < q; ++y)
        for (int z = 0; z < q; ++z) {
            const Elem ey = static_cast<Elem>(y);
            const Elem ez = static_cast<Elem>(z);
            const Elem form = f.add(f.add(f.mul(ey, ey), f.mul(b, f.mul(ey, ez))), f.mul(c, f.mul(ez, ez)));
            mult[at(*space, {1, f.neg(form), y, z})] = 1;
        }
    mult[at(*space, {0, 1, 0, 0})] = 1;
    return ProjectiveSystem(space, std::move(mult));
}

ProjectiveSystem cap8_pg32() {
    auto space = ProjectiveSpace::get(4, 2);
    std::map<int, int> mult;
    for (int i = 0; i < space->num_points(); ++i)
        if (space->coords(i)[0] != 0) mult[i] = 1;
    return ProjectiveSystem(space, std::move(mult));
}

ProjectiveSystem union_of(const ProjectiveSystem& a, const ProjectiveSystem& b) {
    if (!a.space()->same_as(*b.space()))
        throw Error(ErrorCode::AmbientMismatch, "union of systems in PG(" + std::to_string(a.k() - 1) + "," +
                                                    std::to_string(a.q()) + ") and PG(" + std::to_string(b.k() - 1) +
                                                    "," + std::to_string(b.q()) + ")");
    std::map<int, int> mult = a.mult();
    for (const auto& [p, m] : b.mult()) mult[p] += m;
    return ProjectiveSystem(a.space(), std::move(mult), a.zero_mult() + b.zero_mult());
}

ProjectiveSystem construct(ConstructionId id, const ConstructionArgs& a) {
    switch (id) {
        case ConstructionId::trivial_spike: return trivial_spike(a.k, a.q, a.s);
        case ConstructionId::two_dim_extremal: return two_dim_extremal(a.q, a.s);
        case ConstructionId::full_space: return full_space(a.k, a.q);
        case ConstructionId::plane_minus_line: return plane_minus_line(a.q);
        case ConstructionId::hyperoval: return hyperoval(a.q);
        case ConstructionId::denniston: return denniston(a.q, a.degree);
        case ConstructionId::elliptic_quadric: return elliptic_quadric(a.q);
        case ConstructionId::cap8_pg32: return cap8_pg32();
        case ConstructionId::union_: break;
    }
    throw Error(ErrorCode::Precondition, "union needs two input systems");
}

std::optional<ProjectiveSystem> witness_system(const std::string& witness, int k, int q, int s) {
    if (witness == "trivial_spike") return trivial_spike(k, q, s);
    if (witness == "two_dim_extremal" && k == 2) return two_dim_extremal(q, s);
    if (witness == "full_space") return full_space(k, q);
    if (witness == "plane_minus_line" && k == 3) return plane_minus_line(q);
    if (witness == "hyperoval" && k == 3) return hyperoval(q);
    if (witness == "denniston" && k == 3) return denniston(q, s + 2);
    if (witness == "elliptic_quadric" && k == 4) return elliptic_quadric(q);
    if (witness == "cap8_pg32" && k == 4 && q == 2) return cap8_pg32();
    return std::nullopt;
}

}  // namespace projsys
