#include "projsys/constructions.hpp"
#include "projsys/error.hpp"

#include <doctest.h>

#include <functional>
#include <set>

using namespace projsys;

namespace {

struct Shape {
    int n, k, d, s;
};

void check_shape(const ProjectiveSystem& ps, Shape want) {
    const auto p = params(ps);
    CHECK(p.n == want.n);
    CHECK(p.k == want.k);
    CHECK(p.d == want.d);
    CHECK(p.s == want.s);
}

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::Precondition;
}

// Points of each line, by brute force over all lines of PG(2,q).
std::set<int> line_counts(const ProjectiveSystem& ps) {
    std::set<int> out;
    const auto& sp = *ps.space();
    for (int h = 0; h < sp.num_points(); ++h) {
        int c = 0;
        for (const auto& [p, m] : ps.mult()) c += sp.incident(p, h) ? m : 0;
        out.insert(c);
    }
    return out;
}

}  // namespace

TEST_CASE("trivial_spike") {
    check_shape(trivial_spike(3, 3, 2), {5, 3, 1, 2});
    check_shape(trivial_spike(2, 2, 0), {2, 2, 1, 0});
    const auto s = trivial_spike(4, 2, 1);
    check_shape(s, {5, 4, 1, 1});
    CHECK(params(s).d_perp == 2);
}

TEST_CASE("two_dim_extremal") {
    check_shape(two_dim_extremal(2, 1), {6, 2, 4, 1});
    check_shape(two_dim_extremal(3, 0), {4, 2, 3, 0});
    check_shape(two_dim_extremal(4, 2), {15, 2, 12, 2});
}

TEST_CASE("full_space and plane_minus_line") {
    check_shape(plane_minus_line(3), {9, 3, 6, 1});
    check_shape(full_space(3, 2), {7, 3, 4, 1});
    check_shape(full_space(3, 4), {21, 3, 16, 3});
    for (int q : {2, 3, 4, 5, 7}) {
        CHECK(params(full_space(3, q)).s == q - 1);
        CHECK(params(plane_minus_line(q)).s == q - 2);
    }
}

TEST_CASE("hyperoval") {
    check_shape(hyperoval(2), {4, 3, 2, 0});
    check_shape(hyperoval(4), {6, 3, 4, 0});
    check_shape(hyperoval(8), {10, 3, 8, 0});
    for (int q : {2, 4, 8, 16}) {
        const auto counts = line_counts(hyperoval(q));
        CHECK(*counts.rbegin() == 2);  // no three collinear
    }
    CHECK(code_of([] { hyperoval(3); }) == ErrorCode::QOdd);
}

TEST_CASE("denniston") {
    CHECK(denniston(4, 2).n() == 6);
    const auto d44 = denniston(4, 4);
    check_shape(d44, {16, 3, 12, 2});
    CHECK(params(d44).t == 1);
    check_shape(denniston(8, 4), {28, 3, 24, 2});
    for (int q : {2, 4, 8, 16})
        for (int deg = 2; deg <= q; deg *= 2) {
            const auto arc = denniston(q, deg);
            CAPTURE(q);
            CAPTURE(deg);
            CHECK(arc.n() == deg * q - q + deg);
            CHECK(arc.is_projective());
            const auto counts = line_counts(arc);
            CHECK(counts == std::set<int>{0, deg});
        }
    CHECK(code_of([] { denniston(8, 3); }) == ErrorCode::BadDegree);
    CHECK(code_of([] { denniston(4, 8); }) == ErrorCode::BadDegree);
    CHECK(code_of([] { denniston(9, 3); }) == ErrorCode::QOdd);
}

TEST_CASE("elliptic_quadric") {
    const auto q3 = elliptic_quadric(3);
    check_shape(q3, {10, 4, 6, 1});
    CHECK(params(q3).t == 1);
    const auto q4 = elliptic_quadric(4);
    check_shape(q4, {17, 4, 12, 2});
    CHECK(params(q4).t == 1);
    check_shape(elliptic_quadric(5), {26, 4, 20, 3});
    for (int q : {2, 3, 4, 5}) {
        const auto ps = elliptic_quadric(q);
        CAPTURE(q);
        CHECK(ps.n() == q * q + 1);
        CHECK(ps.is_projective());
        // Planes meet in 1 or q+1 points.
        const auto counts = hyperplane_counts(ps);
        const std::set<int> planes(counts.begin(), counts.end());
        CHECK(planes == std::set<int>{1, q + 1});
        // No three collinear: every line through two of its points has no third.
        const auto sup = ps.support();
        const auto& sp = *ps.space();
        for (std::size_t i = 0; i < sup.size(); ++i)
            for (std::size_t j = i + 1; j < sup.size(); ++j) {
                const int two[] = {sup[i], sup[j]};
                const Flat line = span_flat(sp, two);
                int on = 0;
                for (int p : sup) on += line.contains(sp.field(), sp.coords(p));
                CHECK(on == 2);
            }
    }
}

TEST_CASE("cap8_pg32") {
    const auto c = cap8_pg32();
    check_shape(c, {8, 4, 4, 1});
    CHECK(params(c).t == 1);
    CHECK(params(c).d_perp == 4);
    CHECK(c.n() == 2 * 3 + 4 - 2);  // length-maximal at s = 1, q = 2, k = 4
}

TEST_CASE("union") {
    const auto ss = union_of(full_space(3, 2), full_space(3, 2));
    check_shape(ss, {14, 3, 8, 4});
    const auto hh = union_of(hyperoval(4), hyperoval(4));
    const auto p = params(hh);
    CHECK(p.n == 12);
    CHECK(p.s <= 2);
    // Conic of PG(2,3), an MDS 4-arc, doubled.
    auto space = ProjectiveSpace::get(3, 3);
    std::map<int, int> conic;
    for (int t = 0; t < 3; ++t) {
        const std::vector<Elem> v{1, static_cast<Elem>(t), space->field().mul(t, t)};
        conic[space->index_of(v)] = 1;
    }
    const std::vector<Elem> inf{0, 0, 1};
    conic[space->index_of(inf)] = 1;
    const ProjectiveSystem arc(space, conic);
    REQUIRE(params(arc).s == 0);
    CHECK(params(union_of(arc, arc)).s <= 2);
    // Defect of a union never exceeds k-1+s1+s2.
    const ProjectiveSystem parts[] = {full_space(3, 3), plane_minus_line(3), hyperoval(2), trivial_spike(3, 3, 1)};
    for (const auto& a : parts)
        for (const auto& b : parts) {
            if (!(a.space()->same_as(*b.space()))) continue;
            CHECK(params(union_of(a, b)).s <= 3 - 1 + params(a).s + params(b).s);
        }
    CHECK(code_of([] { union_of(full_space(3, 2), full_space(3, 3)); }) == ErrorCode::AmbientMismatch);
}

TEST_CASE("construction names and dispatch") {
    for (auto id : {ConstructionId::trivial_spike, ConstructionId::two_dim_extremal, ConstructionId::full_space,
                    ConstructionId::plane_minus_line, ConstructionId::hyperoval, ConstructionId::denniston,
                    ConstructionId::elliptic_quadric, ConstructionId::cap8_pg32, ConstructionId::union_})
        CHECK(parse_construction(construction_name(id)) == id);
    CHECK(construction_name(ConstructionId::union_) == "union");
    CHECK_FALSE(parse_construction("nope").has_value());
    CHECK(construct(ConstructionId::elliptic_quadric, {4, 0, 0, 0}) == elliptic_quadric(4));
    CHECK(construct(ConstructionId::denniston, {8, 0, 0, 4}) == denniston(8, 4));
    CHECK(code_of([] { construct(ConstructionId::union_, {2, 3, 0, 0}); }) == ErrorCode::Precondition);
}

TEST_CASE("deterministic coefficients") {
    // x^2 + x + 1 is the only irreducible quadratic over GF(2).
    CHECK(denniston_lambda(Field(2)) == 1);
    const auto [b, c] = quadric_coefficients(Field(3));
    CHECK(b == 0);
    CHECK(c == 1);  // z^2 + 1 over GF(3)
    CHECK(denniston(8, 4) == denniston(8, 4));
}
