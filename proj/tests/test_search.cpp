#include "oracle/oracle.hpp"
#include "projsys/audit.hpp"
#include "projsys/bounds.hpp"
#include "projsys/error.hpp"
#include "projsys/search.hpp"

#include <doctest.h>

using namespace projsys;

namespace {

SearchConfig cfg_of(int k, int q, int s) {
    SearchConfig c;
    c.k = k;
    c.q = q;
    c.s = s;
    c.threads = 1;
    return c;
}

void check_certificate(const SearchCertificate& cert) {
    if (!cert.witness) return;
    const auto p = params(*cert.witness);
    CHECK(p.k == cert.k);
    CHECK(p.n == cert.n_max);
    CHECK(p.s <= cert.s);
    CHECK(audit(*cert.witness).passed());
}

}  // namespace

TEST_CASE("max_length examples") {
    const auto a = max_length(cfg_of(3, 2, 0));
    CHECK(a.n_max == 4);
    CHECK(a.exhaustive);
    const auto b = max_length(cfg_of(4, 2, 1));
    CHECK(b.n_max == 8);
    CHECK(b.exhaustive);
    REQUIRE(b.witness);
    // Equivalent to the 8-cap: projective, planes meet in 0, 2 or 4 points.
    CHECK(b.witness->is_projective());
    CHECK(params(*b.witness).d == 4);
    const auto c = max_length(cfg_of(2, 3, 1));
    CHECK(c.n_max == 8);
    for (const auto& cert : {a, b, c}) check_certificate(cert);
}

TEST_CASE("search agrees with plain enumeration at tiny scale") {
    std::vector<std::pair<int, int>> shapes{{3, 2}, {3, 3}, {2, 2}, {2, 3}, {2, 4}, {2, 5}};
    for (const auto& [k, q] : shapes)
        for (int s = 0; s <= 2; ++s) {
            SearchConfig c = cfg_of(k, q, s);
            c.fix_points = false;
            c.use_engine_bound = false;
            const auto cert = max_length(c);
            CAPTURE(k);
            CAPTURE(q);
            CAPTURE(s);
            CHECK(cert.exhaustive);
            CHECK(cert.n_max == oracle::max_multiarc_length(k, q, s));
            check_certificate(cert);
            // Symmetry fixing and the engine cutoff do not change the answer.
            CHECK(max_length(cfg_of(k, q, s)).n_max == cert.n_max);
        }
}

TEST_CASE("search respects the engine bounds") {
    for (int k = 3; k <= 4; ++k)
        for (int q : {2, 3, 4})
            for (int s = 0; s <= 2; ++s) {
                if (k == 4 && q > 3) continue;
                SearchConfig c = cfg_of(k, q, s);
                c.use_engine_bound = false;
                c.budget = 20'000'000;
                const auto cert = max_length(c);
                if (!cert.exhaustive) continue;
                const BoundQuery bq{k, q, s, std::nullopt, std::nullopt};
                CAPTURE(k);
                CAPTURE(q);
                CAPTURE(s);
                CHECK(cert.n_max <= upper_value(bq));
                CHECK(cert.n_max >= lower_value(bq));
                check_certificate(cert);
            }
}

TEST_CASE("n_max strictly increases with s") {
    for (const auto& [k, q] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 2}, {2, 4}}) {
        long long prev = 0;
        for (int s = 0; s <= 3; ++s) {
            const auto cert = max_length(cfg_of(k, q, s));
            REQUIRE(cert.exhaustive);
            CHECK(cert.n_max > prev);
            prev = cert.n_max;
        }
    }
}

TEST_CASE("certificates do not depend on thread count") {
    for (const auto& [k, q, s] : std::vector<std::tuple<int, int, int>>{{3, 4, 1}, {4, 2, 2}, {5, 2, 1}, {3, 3, 2}}) {
        SearchConfig c = cfg_of(k, q, s);
        c.use_engine_bound = false;
        const auto one = max_length(c);
        for (int threads : {2, 3, 4}) {
            c.threads = threads;
            const auto many = max_length(c);
            CHECK(many.n_max == one.n_max);
            CHECK(many.exhaustive == one.exhaustive);
            REQUIRE(many.witness.has_value() == one.witness.has_value());
            if (one.witness) CHECK(*many.witness == *one.witness);
        }
    }
}

TEST_CASE("budget exhaustion is reported") {
    SearchConfig c = cfg_of(4, 3, 1);
    c.use_engine_bound = false;
    c.budget = 50;
    const auto cert = max_length(c);
    CHECK_FALSE(cert.exhaustive);
    CHECK(cert.nodes < 50 + 4096);  // counters are flushed in chunks
    c.budget = 0;
    CHECK_THROWS_AS(max_length(c), Error);
}

TEST_CASE("unsupported sizes") {
    try {
        max_length(cfg_of(5, 32, 0));
        FAIL("huge space accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Unsupported);
    }
}

TEST_CASE("target mode stops at the requested length") {
    SearchConfig c = cfg_of(3, 4, 2);
    c.target = 16;
    const auto cert = max_length(c);
    REQUIRE(cert.witness);
    CHECK(cert.n_max == 16);
    CHECK(params(*cert.witness).s <= 2);
}

TEST_CASE("verify_kappa_entry examples") {
    const auto r = verify_kappa_entry(2, 8, 4);
    CHECK(r.outcome == KappaOutcome::ruled_out);
    CHECK(r.reason == "full_length.gamma_0");
    const auto e = verify_kappa_entry(2, 4, 4);
    CHECK(e.outcome == KappaOutcome::exists);
    REQUIRE(e.witness);
    CHECK(params(*e.witness).n == 17);
    const auto f = verify_kappa_entry(0, 2, 3);
    CHECK(f.outcome == KappaOutcome::exists);
    REQUIRE(f.witness);
    CHECK(f.witness->n() == 4);
    CHECK(outcome_name(KappaOutcome::exhausted_no_code) == "ExhaustedNoCode");
}

TEST_CASE("even-weight codes are length-maximal MDS codes over GF(2)") {
    for (int k = 3; k <= 7; ++k) {
        const auto v = verify_kappa_entry(0, 2, k);
        REQUIRE(v.outcome == KappaOutcome::exists);
        const auto p = params(*v.witness);
        CHECK(p.n == k + 1);
        CHECK(p.d == 2);
        for (const auto& [w, c] : weight_distribution(*v.witness)) CHECK(w % 2 == 0);
    }
}

TEST_CASE("refine_kappa") {
    const auto e = refine_kappa(kappa(2, 4), 1'000'000);
    CHECK(e.searched);
    CHECK(e.exact());
    CHECK(e.lower == 4);
}

TEST_CASE("dual_defect_scan") {
    const auto b = max_length(cfg_of(4, 2, 1));
    CHECK(dual_defect_scan(b) == 1);
    SearchConfig c = cfg_of(2, 2, 1);
    const auto two = max_length(c);
    CHECK(two.n_max == 6);
    CHECK(dual_defect_scan(two) == 1);
    SearchCertificate empty;
    CHECK_THROWS_AS(dual_defect_scan(empty), Error);
}

TEST_CASE("resolve_threads") {
    CHECK(resolve_threads(3) == 3);
    CHECK(resolve_threads(0) >= 1);
}
