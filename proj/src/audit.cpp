#include "projsys/audit.hpp"

#include "projsys/bounds.hpp"
#include "projsys/error.hpp"

#include <algorithm>
#include <numeric>

namespace projsys {

bool AuditReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.passed; });
}

std::vector<std::string> AuditReport::failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.passed) out.push_back(c.rule_id + ": " + c.detail);
    return out;
}

namespace {

bool pow2(long long x) { return x > 0 && (x & (x - 1)) == 0; }

// Largest multiplicity-weighted mass of a (k-3)-flat; -1 when too many flats to scan.
int max_fat_flat_mass(const ProjectiveSystem& ps) {
    const int k = ps.k();
    if (k == 3) return ps.max_mult();
    const int dim = k - 3;
    if (gaussian_binomial(k, dim + 1, ps.q()) * theta(dim, ps.q()) > 20'000'000) return -1;
    const FlatIncidence fi = flat_incidence(*ps.space(), dim);
    int best = 0;
    for (std::size_t f = 0; f < fi.points_of_flat.size(); ++f) {
        int mass = 0;
        for (int p : fi.points_of_flat[f]) mass += ps.multiplicity(p);
        best = std::max(best, mass);
    }
    return best;
}

}  // namespace

AuditReport audit(const ProjectiveSystem& ps) {
    AuditReport rep;
    const CodeParams p = params(ps);
    rep.params = p;
    const long long n = p.n, k = p.k, q = ps.q(), s = p.s, t = p.t, d = p.d;
    auto check = [&](std::string id, std::string claim, bool ok, std::string detail) {
        rep.checks.push_back({std::move(id), std::move(claim), ok, ok ? std::string() : std::move(detail)});
    };
    const bool proper = !p.degenerate;

    // Every fired upper bound. Dual-defect rules only speak about non-degenerate codes.
    BoundQuery query{p.k, ps.q(), p.s, std::nullopt, p.d};
    if (proper) query.t = p.t;
    for (const auto& b : upper_bounds(query)) {
        if (b.target == Target::length) {
            check("upper." + b.rule_id, "n <= " + std::to_string(b.value), n <= b.value,
                  "n = " + std::to_string(n) + " exceeds " + std::to_string(b.value));
        } else if (d > 1) {
            check("upper." + b.rule_id, "k <= " + std::to_string(b.value), k <= b.value,
                  "k = " + std::to_string(k) + " exceeds " + std::to_string(b.value));
        }
    }
    if (!proper) return rep;

    // Checked one above the printed threshold: at n = s(q+1)+k-1 PG(3,2) gives t = 2.
    if (k >= 3 && s >= 1 && d > 1 && n > s * (q + 1) + k - 1) {
        check("forcing.long_griesmer", "t = 1, projective, Griesmer met", t == 1 && p.projective && p.griesmer_met,
              "t = " + std::to_string(t) + ", projective = " + std::to_string(p.projective) +
                  ", griesmer = " + std::to_string(p.griesmer_met));
    }
    if (k >= 2 && s >= 1 && n > s * (q + 1) + k - 1)
        check("forcing.ub_asmds.1a", "t <= 1", t <= 1, "t = " + std::to_string(t));

    if (s == 0) check("projective.p1", "MDS codes are projective", p.projective, "repeated point");
    if (k == 2)
        check("projective.p2", "k = 2: projective iff s = 0", p.projective == (s == 0),
              "projective = " + std::to_string(p.projective) + " with s = " + std::to_string(s));
    if (s > 0 && k > 2) {
        const long long m = upper_value(BoundQuery{p.k - 1, ps.q(), p.s - 1, std::nullopt, std::nullopt});
        if (m < kUnbounded && n > m + 2)
            check("projective.p3", "n > m^{s-1}(k-1,q)+2 forces projective", p.projective, "repeated point");
    }
    if (k > 2 && n > s * (q + 1) + k - 1)
        check("projective.p4", "n > s(q+1)+k-1 forces projective", p.projective, "repeated point");
    if (s == 1 && k > q && n > k + 2)
        check("projective.p5", "s = 1, k > q, n > k+2 forces projective", p.projective, "repeated point");
    if (k > 2)
        check("projective.dperp", "projective iff d_perp >= 3", p.projective == (p.d_perp >= 3),
              "d_perp = " + std::to_string(p.d_perp));

    if (k >= 3 && n == (s + 1) * (q + 1) + k - 2)
        check("long_bound.p2", "length-maximal implies s <= q-1", s <= q - 1, "s = " + std::to_string(s));

    // Codeword weights d+s+1-a, 0 <= a <= s+1, cap the length when t = 1.
    if (t == 1 && s >= 1 && d > 1) {
        for (const auto& [w, count] : weight_distribution(ps)) {
            const long long a = d + s + 1 - w;
            if (w == 0 || count == 0 || a < 0 || a > s + 1) continue;
            const long long cap = q * (s + 1) + k - 2 + a;
            check("ub_asmds.2", "weight " + std::to_string(w) + " gives n <= " + std::to_string(cap), n <= cap,
                  "n = " + std::to_string(n) + " exceeds " + std::to_string(cap));
        }
    }

    if (k >= 3) {
        const int mass = max_fat_flat_mass(ps);
        if (mass >= k - 2) {
            const long long a = mass - (k - 2);
            const long long cap = (s + 1 - a) * (q + 1) + k - 2 + a;
            check("fat_flat", "(k-3)-flat of mass " + std::to_string(mass) + " gives n <= " + std::to_string(cap),
                  n <= cap, "n = " + std::to_string(n) + " exceeds " + std::to_string(cap));
        }
        if (std::gcd(s + 2, q) == 1) {
            const auto counts = hyperplane_counts(ps);
            if (std::find(counts.begin(), counts.end(), k - 3) != counts.end()) {
                const long long cap = q * (s + 1) + k - 2;
                check("barlotti.p6", "hyperplane with k-3 points gives n <= " + std::to_string(cap), n <= cap,
                      "n = " + std::to_string(n) + " exceeds " + std::to_string(cap));
            }
        }
    }

    if (s > 1 && d > 1) {
        const NsmdsReport r = check_nsmds_conditions(ps);
        if (r.applies) check("nsmds_conditions", "conditions force t = s", r.conclusion_holds, "t = " + std::to_string(t));
    }
    if (s > 1 && s < q - 1 && !(pow2(s + 1) && pow2(q)) &&
        k > (s - 1) * (q + 1) - 1 && n > s * (q + 1) + k - 3)
        check("forcing.thm_nmds", "dual defect equals s", t == s, "t = " + std::to_string(t));

    return rep;
}

AuditReport audit_or_throw(const ProjectiveSystem& ps) {
    AuditReport rep = audit(ps);
    for (const auto& c : rep.checks)
        if (!c.passed) throw Error(ErrorCode::RuleViolation, c.rule_id + ": " + c.detail);
    return rep;
}

}  // namespace projsys
