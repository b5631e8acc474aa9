#include "oracle/oracle.hpp"
#include "projsys/constructions.hpp"
#include "projsys/error.hpp"
#include "projsys/projsystem.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace projsys;

namespace {

Matrix rows_of(std::initializer_list<std::initializer_list<int>> rows) {
    Matrix m(0, static_cast<int>(rows.begin()->size()));
    for (const auto& r : rows) {
        std::vector<Elem> v(r.begin(), r.end());
        m.append_row(v);
    }
    return m;
}

// Minimum weight of the code spanned by the rows, by enumeration.
int min_weight_of(const Field& f, const Matrix& g) {
    int best = g.cols() + 1;
    long long total = 1;
    for (int i = 0; i < g.rows(); ++i) total *= f.q();
    std::vector<Elem> c(g.rows());
    for (long long x = 1; x < total; ++x) {
        long long y = x;
        for (auto& e : c) e = static_cast<Elem>(y % f.q()), y /= f.q();
        int w = 0;
        for (int col = 0; col < g.cols(); ++col) {
            Elem v = 0;
            for (int r = 0; r < g.rows(); ++r) v = f.axpy(c[r], g(r, col), v);
            w += v != 0;
        }
        best = std::min(best, w);
    }
    return best;
}

}  // namespace

TEST_CASE("from_generator_matrix examples") {
    const Field f2(2);
    const auto id = from_generator_matrix(f2, rows_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(id.n() == 3);
    CHECK(id.is_projective());
    const auto simplex = from_generator_matrix(
        f2, rows_of({{1, 0, 0, 1, 1, 0, 1}, {0, 1, 0, 1, 0, 1, 1}, {0, 0, 1, 0, 1, 1, 1}}));
    CHECK(simplex == full_space(3, 2));
    const auto rep = from_generator_matrix(f2, rows_of({{1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
    CHECK(rep.max_mult() == 2);
    CHECK(rep.n() == 4);
    const auto zero = from_generator_matrix(f2, rows_of({{1, 0, 0}, {0, 1, 0}}));
    CHECK(zero.zero_mult() == 1);
    try {
        from_generator_matrix(f2, rows_of({{1, 1}, {1, 1}}));
        FAIL("rank-deficient matrix accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::RankDeficient);
    }
    // Scalars normalize: (2,4) over GF(5) is the point (1,2).
    const auto scaled = from_generator_matrix(Field(5), rows_of({{2, 0}, {4, 1}}));
    CHECK(scaled.n() == 2);
}

TEST_CASE("generator matrix round trip") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const int k = 2 + static_cast<int>(rng() % 3);
        const int q = std::vector<int>{2, 3, 4, 5, 8}[rng() % 5];
        const auto ps = oracle::random_system(k, q, k + static_cast<int>(rng() % 8), rng, static_cast<int>(rng() % 2));
        CHECK(from_generator_matrix(ps.field(), to_generator_matrix(ps)) == ps);
        std::stringstream ss;
        write_gm(ss, ps);
        CHECK(read_gm(ss) == ps);
    }
}

TEST_CASE("gm text format") {
    std::stringstream ss;
    write_gm(ss, hyperoval(4));
    const std::string text = ss.str();
    CHECK(text.rfind("q 4 poly 3\nk 3 n 6\n", 0) == 0);
    std::istringstream bad("q 4 poly 3\nk 3 n 2\n1 0\n0 1\n");
    CHECK_THROWS_AS(read_gm(bad), Error);
    std::istringstream out_of_range("q 2 poly 0\nk 1 n 1\n2\n");
    CHECK_THROWS_AS(read_gm(out_of_range), Error);
}

TEST_CASE("min_distance examples") {
    CHECK(min_distance(full_space(3, 2)).d == 4);
    const auto pml = params(plane_minus_line(3));
    CHECK(pml.n == 9);
    CHECK(pml.d == 6);
    const auto spike = trivial_spike(3, 3, 2);
    CHECK(min_distance(spike).d == 1);
    const MinDistance md = min_distance(full_space(3, 2));
    CHECK(md.secants.size() == 7);
}

TEST_CASE("dual_distance examples") {
    CHECK(dual_distance(trivial_spike(3, 3, 2)) == 2);
    CHECK(dual_distance(full_space(3, 2)) == 3);
    CHECK(dual_distance(cap8_pg32()) == 4);
    const auto degenerate = ProjectiveSystem(ProjectiveSpace::get(2, 3), {{0, 1}, {1, 1}}, 2);
    CHECK(dual_distance(degenerate) == 1);
    CHECK(params(degenerate).degenerate);
}

TEST_CASE("params examples") {
    const auto q3 = params(elliptic_quadric(3));
    CHECK(q3.n == 10);
    CHECK(q3.k == 4);
    CHECK(q3.d == 6);
    CHECK(q3.s == 1);
    CHECK(q3.t == 1);
    const auto q4 = params(elliptic_quadric(4));
    CHECK(q4.n == 17);
    CHECK(q4.d == 12);
    CHECK(q4.s == 2);
    CHECK(q4.t == 1);
    CHECK(q4.griesmer_met);
    CHECK(q4.k_perp == 13);
    CHECK(params(full_space(3, 2)).s == 1);
    CHECK(griesmer_length(4, 12, 4) == 17);
}

TEST_CASE("weight_distribution examples") {
    const auto simplex = weight_distribution(full_space(3, 2));
    CHECK(simplex == std::map<int, long long>{{0, 1}, {4, 7}});
    const auto cap = weight_distribution(cap8_pg32());
    CHECK(cap == std::map<int, long long>{{0, 1}, {4, 14}, {8, 1}});
    long long total = 0;
    for (const auto& [w, c] : weight_distribution(hyperoval(4))) total += c;
    CHECK(total == 64);
}

TEST_CASE("oracle equivalence on random systems") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        const int q = std::vector<int>{2, 3, 4, 5}[rng() % 4];
        const int k = q == 2 ? 2 + static_cast<int>(rng() % 6) : 2 + static_cast<int>(rng() % 3);
        const int n = k + static_cast<int>(rng() % (q == 2 ? 8 : 4));
        const auto ps = oracle::random_system(k, q, n, rng, static_cast<int>(rng() % 4 == 0));
        CAPTURE(i);
        CHECK(weight_distribution(ps) == oracle::codeword_weights(ps));
        CHECK(dual_distance(ps) == oracle::dual_min_weight(ps));
        // The smallest nonzero weight is d.
        const auto wd = oracle::codeword_weights(ps);
        CHECK(std::next(wd.begin())->first == params(ps).d);
    }
}

TEST_CASE("dual defect equals the Singleton defect of the explicit dual code") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        const int q = std::vector<int>{2, 3, 4}[rng() % 3];
        const int k = 2 + static_cast<int>(rng() % 3);
        const int n = k + 1 + static_cast<int>(rng() % 5);
        const auto ps = oracle::random_system(k, q, n, rng);
        const CodeParams p = params(ps);
        const Matrix h = dual_code(ps);
        REQUIRE(h.rows() == p.k_perp);
        const int dual_d = min_weight_of(ps.field(), h);
        CHECK(p.t == p.n - p.k_perp + 1 - dual_d);
    }
}

TEST_CASE("projective iff d_perp >= 3 for k > 2") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const int q = std::vector<int>{2, 3, 4, 5}[rng() % 4];
        const int k = 3 + static_cast<int>(rng() % 2);
        const auto ps = oracle::random_system(k, q, k + static_cast<int>(rng() % 6), rng);
        CHECK(ps.is_projective() == (dual_distance(ps) >= 3));
    }
}

TEST_CASE("quotient_shorten examples") {
    const auto eq = elliptic_quadric(3);
    const int pt[] = {eq.support().front()};
    const ShortenResult sr = quotient_shorten(eq, span_flat(*eq.space(), pt));
    const auto sp = params(sr.system);
    CHECK(sp.n == 9);
    CHECK(sp.k == 3);
    CHECK(sp.d >= 6);
    CHECK(sp.s <= 1);
    CHECK(sr.alpha == 1);
    CHECK(sr.ell == 0);

    const auto simplex = full_space(3, 2);
    const int p0[] = {0};
    const auto ss = params(quotient_shorten(simplex, span_flat(*simplex.space(), p0)).system);
    CHECK(ss.n == 6);
    CHECK(ss.k == 2);
    CHECK(ss.d == 4);

    // Point of multiplicity m on a secant: s* = s - m + 1, d* = d.
    const auto spike = trivial_spike(3, 3, 2);
    const int e1[] = {spike.support().back()};
    REQUIRE(spike.multiplicity(e1[0]) == 3);
    const auto sh = params(quotient_shorten(spike, span_flat(*spike.space(), e1)).system);
    const auto base = params(spike);
    CHECK(sh.s == base.s - 3 + 1);
    CHECK(sh.d == base.d);

    const int line[] = {0, 1};
    try {
        quotient_shorten(simplex, span_flat(*simplex.space(), line));
        FAIL("codimension 1 accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CodimTooSmall);
    }
    const auto spike4 = trivial_spike(4, 2, 0);
    const auto sup = spike4.support();
    const int three[] = {sup[0], sup[1]};
    CHECK_NOTHROW(quotient_shorten(spike4, span_flat(*spike4.space(), three)));
}

TEST_CASE("quotient shortening inequalities on random pairs") {
    std::mt19937_64 rng(9);
    int done = 0;
    while (done < 300) {
        const int q = std::vector<int>{2, 3, 4}[rng() % 3];
        const int k = 3 + static_cast<int>(rng() % 2);
        const auto ps = oracle::random_system(k, q, k + 2 + static_cast<int>(rng() % 8), rng);
        const auto sup = ps.support();
        std::vector<int> span;
        for (int j = 0; j <= static_cast<int>(rng() % (k - 2)); ++j) span.push_back(sup[rng() % sup.size()]);
        const Flat fl = span_flat(*ps.space(), span);
        if (fl.codim() < 2) continue;
        try {
            const ShortenResult sr = quotient_shorten(ps, fl);
            const auto a = params(ps), b = params(sr.system);
            CHECK(b.n == a.n - sr.alpha);
            CHECK(b.k == fl.codim());
            CHECK(b.d >= a.d);
            CHECK(b.s <= a.s - sr.alpha + sr.ell + 1);
            ++done;
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::EmptyQuotient);
        }
    }
}

TEST_CASE("check_nsmds_conditions") {
    const NsmdsReport r = check_nsmds_conditions(elliptic_quadric(4));
    CHECK_FALSE(r.k_condition);
    CHECK_FALSE(r.applies);
    try {
        check_nsmds_conditions(cap8_pg32());
        FAIL("s = 1 accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Precondition);
    }
    // Projective binary systems in PG(3,2) with s = 2: the conditions hold and force t = s.
    std::mt19937_64 rng(1);
    int applied = 0;
    for (int i = 0; i < 400 && applied < 20; ++i) {
        auto space = ProjectiveSpace::get(4, 2);
        std::map<int, int> mult;
        const int n = 6 + static_cast<int>(rng() % 6);
        while (static_cast<int>(mult.size()) < n) mult[static_cast<int>(rng() % 15)] = 1;
        std::vector<int> sup;
        for (const auto& [p, m] : mult) sup.push_back(p);
        if (rank(*space, sup) < 4) continue;
        const ProjectiveSystem ps(space, mult);
        const auto p = params(ps);
        if (p.s != 2 || p.d <= 1) continue;
        const NsmdsReport rep = check_nsmds_conditions(ps);
        CHECK(rep.k_condition);
        CHECK(rep.affine_independent == (p.d_perp >= p.k - p.s + 1));
        if (rep.applies) {
            ++applied;
            CHECK(rep.conclusion_holds);
            CHECK(rep.t == 2);
        }
    }
    CHECK(applied > 0);
}

TEST_CASE("system invariants") {
    auto space = ProjectiveSpace::get(3, 2);
    try {
        ProjectiveSystem(space, {{0, 1}, {1, 1}});
        FAIL("non-spanning system accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::RankDeficient);
    }
    const ProjectiveSystem ps(space, {{0, 2}, {1, 1}, {3, 1}}, 1);
    CHECK(ps.n() == 5);
    CHECK_FALSE(ps.is_projective());
    const auto p = params(ps);
    CHECK(p.s == p.n - p.k + 1 - p.d);
    CHECK(p.t == p.k + 1 - p.d_perp);
    CHECK(p.degenerate == (p.d_perp == 1));
}
