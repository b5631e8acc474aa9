#include "projsys/bounds.hpp"

#include "projsys/error.hpp"
#include "projsys/geometry.hpp"
#include "projsys/gf.hpp"
#include "projsys/integrality.hpp"
#include "projsys/mds.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <shared_mutex>
#include <tuple>

namespace projsys {

std::string direction_name(Direction d) { return d == Direction::upper ? "upper" : "lower"; }
std::string target_name(Target t) { return t == Target::length ? "length" : "dimension"; }

void validate(const BoundQuery& query) {
    if (query.k < 1) throw Error(ErrorCode::Precondition, "k must be >= 1");
    if (query.s < 0) throw Error(ErrorCode::Precondition, "s must be >= 0");
    if (query.q > 64) throw Error(ErrorCode::Unsupported, "q = " + std::to_string(query.q) + " exceeds 64");
    if (prime_power_split(query.q).first == 0)
        throw Error(ErrorCode::NotPrimePower, "q = " + std::to_string(query.q));
    if (query.t && *query.t < 0) throw Error(ErrorCode::Precondition, "t must be >= 0");
    if (query.d && *query.d < 1) throw Error(ErrorCode::Precondition, "d must be >= 1");
}

namespace {

// Records the conditions a rule checks, and the first one that fails.
class Conds {
  public:
    bool operator()(bool ok, const char* text) {
        used.emplace_back(text);
        if (!ok && failed.empty()) failed = text;
        return ok;
    }
    std::vector<std::string> used;
    std::string failed;
};

using Eval = std::function<std::optional<long long>(const BoundQuery&, Conds&)>;
using WitnessT = std::function<std::optional<int>(const BoundQuery&)>;

struct Rule {
    RuleInfo info;
    Eval eval;
    std::string witness;
    WitnessT witness_t;  // lower bounds only: dual defect of the witness, when known
};

bool pow2(long long x) { return x > 0 && (x & (x - 1)) == 0; }
long long sq(long long x) { return x * x; }
bool has_t(const BoundQuery& Q) { return Q.t.has_value(); }
int T(const BoundQuery& Q) { return *Q.t; }

BoundQuery sub(int k, int q, int s) { return BoundQuery{k, q, s, std::nullopt, std::nullopt}; }

long long full_length(const BoundQuery& Q) { return static_cast<long long>(Q.s + 1) * (Q.q + 1) + Q.k - 2; }

std::vector<Rule> build_rules() {
    std::vector<Rule> r;
    auto up = [&](std::string id, int table, std::string cond, std::string formula, std::string cite, Eval e,
                  Target target = Target::length) {
        r.push_back({{std::move(id), Direction::upper, target, std::move(cond), std::move(formula), std::move(cite), table},
                     std::move(e), "", nullptr});
    };
    auto low = [&](std::string id, std::string cond, std::string formula, std::string cite, Eval e,
                   std::string witness, WitnessT wt) {
        r.push_back({{std::move(id), Direction::lower, Target::length, std::move(cond), std::move(formula), std::move(cite), 0},
                     std::move(e), std::move(witness), std::move(wt)});
    };
    using R = std::optional<long long>;
    const R none = std::nullopt;

    // ---- upper bounds on m^s(k,q) ----
    up("trivial.k1", 0, "k = 1, s > 0", "0", "Lemma 'trivial bounds' part 2",
       [=](const BoundQuery& Q, Conds& c) -> R { return c(Q.k == 1, "k = 1") && c(Q.s > 0, "s > 0") ? R(0) : none; });
    up("trivial.k2", 0, "k = 2", "(s+1)(q+1)", "Lemma 'trivial bounds' part 5",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(Q.k == 2, "k = 2") ? R(static_cast<long long>(Q.s + 1) * (Q.q + 1)) : none;
       });
    up("long_bound.p1", 3, "k >= 2", "(s+1)(q+1)+k-2", "Corollary 'from Barlotti' part 1",
       [=](const BoundQuery& Q, Conds& c) -> R { return c(Q.k >= 2, "k >= 2") ? R(full_length(Q)) : none; });
    up("barlotti.p2", 3, "k >= 3, 0 < s < q-2, (s+2,q) not both powers of 2", "(s+1)(q+1)+k-4",
       "Corollary 'from Barlotti' part 2",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(Q.k >= 3, "k >= 3") && c(Q.s > 0 && Q.s < Q.q - 2, "0 < s < q-2") &&
                          c(!(pow2(Q.s + 2) && pow2(Q.q)), "(s+2,q) not both powers of 2")
                      ? R(full_length(Q) - 2)
                      : none;
       });
    up("s_arcs.p1", 3, "k >= 3, q an odd prime >= 5, s+2 <= (q+3)/2", "q(s+1)+k-2",
       "Corollary 'from Barlotti' part 3 with Lemma 's-arcs in the plane' part 1",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(Q.k >= 3, "k >= 3") && c(is_prime(Q.q) && Q.q >= 5, "q an odd prime >= 5") &&
                          c(2 * (Q.s + 2) <= Q.q + 3, "s+2 <= (q+3)/2")
                      ? R(static_cast<long long>(Q.q) * (Q.s + 1) + Q.k - 2)
                      : none;
       });
    up("s_arcs.p2", 3, "k >= 3, gcd(s+2,q) = 1, s < sqrt(2q)-1", "q(s+1)+k-2",
       "Corollary 'from Barlotti' part 3 with Lemma 's-arcs in the plane' part 2",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(Q.k >= 3, "k >= 3") && c(std::gcd(Q.s + 2, Q.q) == 1, "gcd(s+2,q) = 1") &&
                          c(sq(Q.s + 1) < 2LL * Q.q, "s < sqrt(2q)-1")
                      ? R(static_cast<long long>(Q.q) * (Q.s + 1) + Q.k - 2)
                      : none;
       });
    up("s_arcs.p3", 3, "k >= 3, q odd, (s+2) | q, s < sqrt(q)/4-2", "q(s+1)+k-2",
       "Corollary 'from Barlotti' part 3 with Lemma 's-arcs in the plane' part 3",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(Q.k >= 3, "k >= 3") && c(Q.q % 2 == 1, "q odd") && c(Q.q % (Q.s + 2) == 0, "(s+2) | q") &&
                          c(16 * sq(Q.s + 2) < Q.q, "s < sqrt(q)/4-2")
                      ? R(static_cast<long long>(Q.q) * (Q.s + 1) + Q.k - 2)
                      : none;
       });
    up("prime_div.p1", 3, "k >= 3, s >= 1, prime p | prod_{i=1..s}(q(s+1)+i), s < p < k+s", "(s+1)(q+1)+k-3",
       "Corollary 'prime divisors' part 1",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(Q.k >= 3, "k >= 3") && c(Q.s >= 1, "s >= 1") &&
                          c(prime_divisor_witness(1, Q.k, Q.q, Q.s).has_value(),
                            "prime p | prod_{i=1..s}(q(s+1)+i), s < p < k+s")
                      ? R(full_length(Q) - 1)
                      : none;
       });
    up("prime_div.p2", 3, "k >= 3, s >= 1, prime p | prod_{i=1..s}(q(s+1)+i), s < p < k+s-1", "(s+1)(q+1)+k-4",
       "Corollary 'prime divisors' part 2",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(Q.k >= 3, "k >= 3") && c(Q.s >= 1, "s >= 1") &&
                          c(prime_divisor_witness(2, Q.k, Q.q, Q.s).has_value(),
                            "prime p | prod_{i=1..s}(q(s+1)+i), s < p < k+s-1")
                      ? R(full_length(Q) - 2)
                      : none;
       });
    up("prime_div.p3", 3, "k >= 3, s >= 1, prime p | prod_{i=0..s}(q(s+1)+i), gcd(p,q) = 1, s+1 < p < k+s-1",
       "(s+1)(q+1)+k-4", "Corollary 'prime divisors' part 3",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(Q.k >= 3, "k >= 3") && c(Q.s >= 1, "s >= 1") &&
                          c(prime_divisor_witness(3, Q.k, Q.q, Q.s).has_value(),
                            "prime p | prod_{i=0..s}(q(s+1)+i), gcd(p,q) = 1, s+1 < p < k+s-1")
                      ? R(full_length(Q) - 2)
                      : none;
       });
    up("prime_div.cor", 3, "k >= 3, 0 < s < q-2, (s+2) | q, prime p | prod_{i=1..s}(q(s+1)+i), s < p < k+s",
       "(s+1)(q+1)+k-4", "Corollary 'cor prime divisors'",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(Q.k >= 3, "k >= 3") && c(Q.s > 0 && Q.s < Q.q - 2, "0 < s < q-2") &&
                          c(Q.q % (Q.s + 2) == 0, "(s+2) | q") &&
                          c(prime_divisor_witness(1, Q.k, Q.q, Q.s).has_value(),
                            "prime p | prod_{i=1..s}(q(s+1)+i), s < p < k+s")
                      ? R(full_length(Q) - 2)
                      : none;
       });
    up("amds_k_bound.p2", 3, "k > q, s > 1", "s(q+1)+k-1", "Corollary 'AMDS k bound' part 2",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(Q.k > Q.q, "k > q") && c(Q.s > 1, "s > 1")
                      ? R(static_cast<long long>(Q.s) * (Q.q + 1) + Q.k - 1)
                      : none;
       });
    up("big_s_short", 3, "k >= 3, s >= a(q+1)-1 for a = floor((s+1)/(q+1)) >= 1", "(s+1-a)(q+1)+k-2+a",
       "Corollary 'big s short code'",
       [=](const BoundQuery& Q, Conds& c) -> R {
           const long long a = (Q.s + 1) / (Q.q + 1);
           return c(Q.k >= 3, "k >= 3") && c(a >= 1, "s >= q")
                      ? R((Q.s + 1 - a) * (Q.q + 1) + Q.k - 2 + a)
                      : none;
       });
    up("mc_big_s", 3, "k >= 3, m(k-1,q) = q+1 exactly, s > q+2-k", "s(q+1)+k-1", "Corollary 'MC big s short code'",
       [=](const BoundQuery& Q, Conds& c) -> R {
           if (!c(Q.k >= 3, "k >= 3")) return none;
           const MdsValue m = m_mds(Q.k - 1, Q.q);
           return c(m.exact() && m.lo == Q.q + 1, "m(k-1,q) = q+1 exactly") && c(Q.s > Q.q + 2 - Q.k, "s > q+2-k")
                      ? R(static_cast<long long>(Q.s) * (Q.q + 1) + Q.k - 1)
                      : none;
       });
    up("q_minus_1.p2", 3, "q > 2, s = q-1, k >= 4", "q^2+k", "Corollary 'q-1 and q-2' part 2",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(Q.q > 2, "q > 2") && c(Q.s == Q.q - 1, "s = q-1") && c(Q.k >= 4, "k >= 4")
                      ? R(sq(Q.q) + Q.k)
                      : none;
       });
    up("q_minus_1.p3", 3, "q = 2, s = 1, k >= 5", "k+2", "Corollary 'q-1 and q-2' part 3",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(Q.q == 2, "q = 2") && c(Q.s == 1, "s = 1") && c(Q.k >= 5, "k >= 5") ? R(Q.k + 2) : none;
       });
    up("q_minus_2.p5", 3, "q > 2, s = q-2, k >= 5", "s(q+1)+k-1", "Corollary 'q-1 and q-2' part 5",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(Q.q > 2, "q > 2") && c(Q.s == Q.q - 2, "s = q-2") && c(Q.k >= 5, "k >= 5")
                      ? R(static_cast<long long>(Q.s) * (Q.q + 1) + Q.k - 1)
                      : none;
       });
    up("big_d_short", 3, "k >= 3, d > a(q^2+q)-q for some a >= 1", "(s+1-a)(q+1)+k-2+a",
       "Corollary 'big d means short'",
       [=](const BoundQuery& Q, Conds& c) -> R {
           if (!c(Q.d.has_value(), "d given") || !c(Q.k >= 3, "k >= 3")) return none;
           const long long a = (*Q.d + Q.q - 1) / (sq(Q.q) + Q.q);
           return c(a >= 1, "d > q") ? R((Q.s + 1 - a) * (Q.q + 1) + Q.k - 2 + a) : none;
       });
    up("monotone.k", 0, "k >= 3", "m^s(k-1,q)+1", "Lemma 'bounds on length of AsMDS' part 2",
       [=](const BoundQuery& Q, Conds& c) -> R {
           if (!c(Q.k >= 3, "k >= 3")) return none;
           const long long prev = upper_value(sub(Q.k - 1, Q.q, Q.s));
           return c(prev < kUnbounded, "finite bound at k-1") ? R(prev + 1) : none;
       });
    up("mds.value", 0, "s = 0, m(k,q) bounded", "m(k,q)", "Lemma 'Bounds on MDS codes'",
       [=](const BoundQuery& Q, Conds& c) -> R {
           if (!c(Q.s == 0, "s = 0")) return none;
           const MdsValue m = m_mds(Q.k, Q.q);
           return c(!m.unbounded, "m(k,q) bounded") ? R(m.hi) : none;
       });

    // ---- upper bounds that need the dual defect t ----
    up("dual_defect.range", 4, "t given, k >= 2, t >= k", "0", "non-degenerate codes have d_perp >= 2",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(has_t(Q), "t given") && c(Q.k >= 2, "k >= 2") && c(T(Q) >= Q.k, "t >= k") ? R(0) : none;
       });
    up("mds.dual", 4, "t = 0, s > 0", "0", "the dual of an MDS code is MDS",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(has_t(Q), "t given") && c(T(Q) == 0, "t = 0") && c(Q.s > 0, "s > 0") ? R(0) : none;
       });
    up("ub_asmds.1a", 4, "k >= 3, s >= 1, t > 1", "s(q+1)+k-1", "Theorem 'ub ASMDS' part 1a",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(has_t(Q), "t given") && c(Q.k >= 3, "k >= 3") && c(Q.s >= 1, "s >= 1") && c(T(Q) > 1, "t > 1")
                      ? R(static_cast<long long>(Q.s) * (Q.q + 1) + Q.k - 1)
                      : none;
       });
    up("ub_asmds.1ab", 4, "k >= 3, s > 1, t > 1", "(s+t)(q+1)-2", "Theorem 'ub ASMDS' parts 1a and 1b",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(has_t(Q), "t given") && c(Q.k >= 3, "k >= 3") && c(Q.s > 1, "s > 1") && c(T(Q) > 1, "t > 1")
                      ? R(static_cast<long long>(Q.s + T(Q)) * (Q.q + 1) - 2)
                      : none;
       });
    up("ub_asmds.1b", 4, "s > 1, t >= 1, d > 1", "k <= t(q+1)-1", "Theorem 'ub ASMDS' part 1b",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(has_t(Q), "t given") && c(Q.s > 1, "s > 1") && c(T(Q) >= 1, "t >= 1")
                      ? R(static_cast<long long>(T(Q)) * (Q.q + 1) - 1)
                      : none;
       },
       Target::dimension);
    up("ub_asmds.3", 4, "s = 1, t >= 1, d > 1", "k <= (t+1)(q+1)-2", "Theorem 'ub ASMDS' part 3",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(has_t(Q), "t given") && c(Q.s == 1, "s = 1") && c(T(Q) >= 1, "t >= 1")
                      ? R(static_cast<long long>(T(Q) + 1) * (Q.q + 1) - 2)
                      : none;
       },
       Target::dimension);
    up("big_k.1", 4, "s in {0,1}, k >= (t+1)(q+1)-1", "k+1", "Corollary 'big k, k+s' part 1",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(has_t(Q), "t given") && c(Q.s <= 1, "s in {0,1}") &&
                          c(Q.k >= static_cast<long long>(T(Q) + 1) * (Q.q + 1) - 1, "k >= (t+1)(q+1)-1")
                      ? R(Q.k + 1)
                      : none;
       });
    up("big_k.2", 4, "s > 1, k >= t(q+1)", "k+s", "Corollary 'big k, k+s' part 2",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(has_t(Q), "t given") && c(Q.s > 1, "s > 1") &&
                          c(Q.k >= static_cast<long long>(T(Q)) * (Q.q + 1), "k >= t(q+1)")
                      ? R(Q.k + Q.s)
                      : none;
       });
    up("ub_asmds.4", 4, "s = t = 1, q > 3, k >= 3", "2q+k-2", "Theorem 'ub ASMDS' part 4",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(has_t(Q), "t given") && c(Q.s == 1 && T(Q) == 1, "s = t = 1") && c(Q.q > 3, "q > 3") &&
                          c(Q.k >= 3, "k >= 3")
                      ? R(2LL * Q.q + Q.k - 2)
                      : none;
       });
    up("ub_asmds.4b", 4, "s = t = 1, q > 3, k > 2q-2", "k+2", "Theorem 'ub ASMDS' part 4",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(has_t(Q), "t given") && c(Q.s == 1 && T(Q) == 1, "s = t = 1") && c(Q.q > 3, "q > 3") &&
                          c(Q.k >= 3, "k >= 3") && c(Q.k > 2 * Q.q - 2, "k > 2q-2")
                      ? R(Q.k + 2)
                      : none;
       });
    up("ub_asmds.5", 4, "t = 1, s >= 1, k+s-1 > m(k-1,q)", "k+s", "Theorem 'ub ASMDS' part 5",
       [=](const BoundQuery& Q, Conds& c) -> R {
           if (!c(has_t(Q), "t given") || !c(T(Q) == 1, "t = 1") || !c(Q.s >= 1, "s >= 1") || !c(Q.k >= 2, "k >= 2"))
               return none;
           const MdsValue m = m_mds(Q.k - 1, Q.q);
           return c(!m.unbounded && Q.k + Q.s - 1 > m.hi, "k+s-1 > m(k-1,q)") ? R(Q.k + Q.s) : none;
       });
    up("ub_asmds.6", 4, "s = 1, t >= 2", "k + max{k' : k'+t-1 <= m(k'-1,q)}", "Theorem 'ub ASMDS' part 6",
       [=](const BoundQuery& Q, Conds& c) -> R {
           if (!c(has_t(Q), "t given") || !c(Q.s == 1, "s = 1") || !c(T(Q) >= 2, "t >= 2")) return none;
           long long best = 1;
           for (int kp = 2; kp <= Q.q + 1; ++kp) {
               const MdsValue m = m_mds(kp - 1, Q.q);
               if (m.unbounded || kp + T(Q) - 1 <= m.hi) best = kp;
           }
           return R(Q.k + best);
       });
    up("amds_k_bound.p3", 4, "s > 1, t = 1, k > q", "k+s", "Corollary 'AMDS k bound' part 3",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(has_t(Q), "t given") && c(Q.s > 1, "s > 1") && c(T(Q) == 1, "t = 1") && c(Q.k > Q.q, "k > q")
                      ? R(Q.k + Q.s)
                      : none;
       });
    up("amds_k_bound.p3.k", 4, "s > 1, t = 1, d > 1", "k <= q", "Corollary 'AMDS k bound' part 3",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(has_t(Q), "t given") && c(Q.s > 1, "s > 1") && c(T(Q) == 1, "t = 1") ? R(Q.q) : none;
       },
       Target::dimension);
    up("amds_k_bound.p4", 4, "t > 1, s = 1", "q+k", "Corollary 'AMDS k bound' part 4",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(has_t(Q), "t given") && c(T(Q) > 1, "t > 1") && c(Q.s == 1, "s = 1") ? R(Q.q + Q.k) : none;
       });
    up("amds_no_k", 4, "k >= 3, q > 3, t = 1, s >= 1", "4q-2 if s = 1, else (s+2)(q+1)-3", "Corollary 'AMDS no k'",
       [=](const BoundQuery& Q, Conds& c) -> R {
           if (!(c(has_t(Q), "t given") && c(Q.k >= 3, "k >= 3") && c(Q.q > 3, "q > 3") && c(T(Q) == 1, "t = 1") &&
                 c(Q.s >= 1, "s >= 1")))
               return none;
           return Q.s == 1 ? R(4LL * Q.q - 2) : R(static_cast<long long>(Q.s + 2) * (Q.q + 1) - 3);
       });
    up("dperp_bound", 4, "k >= 3, s >= 1, 1 < t < k", "m^{s-1}(t,q)+k-t+1", "Lemma 'bounds based on d perp'",
       [=](const BoundQuery& Q, Conds& c) -> R {
           if (!(c(has_t(Q), "t given") && c(Q.k >= 3, "k >= 3") && c(Q.s >= 1, "s >= 1") &&
                 c(T(Q) > 1 && T(Q) < Q.k, "1 < t < k")))
               return none;
           const long long inner = upper_value(sub(T(Q), Q.q, Q.s - 1));
           return c(inner < kUnbounded, "finite bound on m^{s-1}(t,q)") ? R(inner + Q.k - T(Q) + 1) : none;
       });
    up("bound_s1_t.p1", 4, "t >= 3, s > 0, t < k", "m^{s-1}(3,q)+k-2", "Corollary 'bound s=1 t>1' part 1",
       [=](const BoundQuery& Q, Conds& c) -> R {
           if (!(c(has_t(Q), "t given") && c(T(Q) >= 3, "t >= 3") && c(Q.s > 0, "s > 0") && c(T(Q) < Q.k, "t < k")))
               return none;
           const long long inner = upper_value(sub(3, Q.q, Q.s - 1));
           return R(inner + Q.k - 2);
       });
    up("bound_s1_t.p2", 4, "k >= 2, t >= 2, s = 1", "q+k", "Corollary 'bound s=1 t>1' part 2",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(has_t(Q), "t given") && c(Q.k >= 2, "k >= 2") && c(T(Q) >= 2, "t >= 2") && c(Q.s == 1, "s = 1")
                      ? R(Q.q + Q.k)
                      : none;
       });
    up("bound_s1_t.p3", 4, "t >= q, s = 1", "k+2", "Corollary 'bound s=1 t>1' part 3",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(has_t(Q), "t given") && c(T(Q) >= Q.q, "t >= q") && c(Q.s == 1, "s = 1") ? R(Q.k + 2) : none;
       });
    up("big_d_short_t", 4, "k >= 3, t > 1, d > a(q^2+q)-2q for some a >= 1", "(s+1-a)(q+1)+k-2+a",
       "Corollary 'big d means short t>1'",
       [=](const BoundQuery& Q, Conds& c) -> R {
           if (!(c(has_t(Q), "t given") && c(Q.d.has_value(), "d given") && c(Q.k >= 3, "k >= 3") &&
                 c(T(Q) > 1, "t > 1")))
               return none;
           const long long a = (*Q.d + 2LL * Q.q - 1) / (sq(Q.q) + Q.q);
           return c(a >= 1, "d > q^2-q") ? R((Q.s + 1 - a) * (Q.q + 1) + Q.k - 2 + a) : none;
       });
    up("nmds_special_k", 4, "s = t = 1, q > 3, k in {2q-1, 2q}", "k+2", "Lemma 'NMDS special k'",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(has_t(Q), "t given") && c(Q.s == 1 && T(Q) == 1, "s = t = 1") && c(Q.q > 3, "q > 3") &&
                          c(Q.k == 2 * Q.q - 1 || Q.k == 2 * Q.q, "k in {2q-1, 2q}")
                      ? R(Q.k + 2)
                      : none;
       });
    up("nmds_general.p1", 4, "s = t = 1", "2q+k", "Corollary 'NMDS general bound' part 1",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(has_t(Q), "t given") && c(Q.s == 1 && T(Q) == 1, "s = t = 1") ? R(2LL * Q.q + Q.k) : none;
       });
    up("nmds_general.p2", 4, "s = t > 1", "s(q+1)+k-1", "Corollary 'NMDS general bound' part 2",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(has_t(Q), "t given") && c(Q.s > 1 && T(Q) == Q.s, "s = t > 1")
                      ? R(static_cast<long long>(Q.s) * (Q.q + 1) + Q.k - 1)
                      : none;
       });
    up("nmds_general.p2b", 4, "s = t > 1, k > s(q+1)-1", "k+s", "Corollary 'NMDS general bound' part 2",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(has_t(Q), "t given") && c(Q.s > 1 && T(Q) == Q.s, "s = t > 1") &&
                          c(Q.k > static_cast<long long>(Q.s) * (Q.q + 1) - 1, "k > s(q+1)-1")
                      ? R(Q.k + Q.s)
                      : none;
       });
    up("thm_nmds", 4, "1 < s < q-1, (s+1,q) not both powers of 2, k > (s-1)(q+1)-1, t != s", "s(q+1)+k-3",
       "Theorem 'NMDS' (forcing t = s)",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(has_t(Q), "t given") && c(Q.s > 1 && Q.s < Q.q - 1, "1 < s < q-1") &&
                          c(!(pow2(Q.s + 1) && pow2(Q.q)), "(s+1,q) not both powers of 2") &&
                          c(Q.k > static_cast<long long>(Q.s - 1) * (Q.q + 1) - 1, "k > (s-1)(q+1)-1") &&
                          c(T(Q) != Q.s, "t != s")
                      ? R(static_cast<long long>(Q.s) * (Q.q + 1) + Q.k - 3)
                      : none;
       });
    up("long_griesmer", 4, "k >= 3, s >= 1, t != 1", "s(q+1)+k-1", "Corollary 'long implies Griesmer'",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(has_t(Q), "t given") && c(Q.k >= 3, "k >= 3") && c(Q.s >= 1, "s >= 1") && c(T(Q) != 1, "t != 1")
                      ? R(static_cast<long long>(Q.s) * (Q.q + 1) + Q.k - 1)
                      : none;
       });
    up("m_prime.big_k", 4, "s = t = 1, k > 2q", "k+1", "m'(k,q) = k+1 for k > 2q",
       [=](const BoundQuery& Q, Conds& c) -> R {
           return c(has_t(Q), "t given") && c(Q.s == 1 && T(Q) == 1, "s = t = 1") && c(Q.k > 2 * Q.q, "k > 2q")
                      ? R(Q.k + 1)
                      : none;
       });

    // ---- lower bounds ----
    low("trivial.spike", "k >= 2", "k+s", "e_i spike: m^s(k,q) >= k+s",
        [=](const BoundQuery& Q, Conds& c) -> R { return c(Q.k >= 2, "k >= 2") ? R(Q.k + Q.s) : none; },
        "trivial_spike", [](const BoundQuery& Q) -> std::optional<int> { return Q.s > 0 ? Q.k - 1 : 0; });
    low("trivial.k2", "k = 2", "(s+1)(q+1)", "Lemma 'trivial bounds' part 5",
        [=](const BoundQuery& Q, Conds& c) -> R {
            return c(Q.k == 2, "k = 2") ? R(static_cast<long long>(Q.s + 1) * (Q.q + 1)) : none;
        },
        "two_dim_extremal", [](const BoundQuery& Q) -> std::optional<int> { return Q.s > 0 ? 1 : 0; });
    low("trivial.s1", "s = 1, k >= 2", "k+2", "Lemma 'trivial bounds' parts 3-4",
        [=](const BoundQuery& Q, Conds& c) -> R { return c(Q.s == 1, "s = 1") && c(Q.k >= 2, "k >= 2") ? R(Q.k + 2) : none; },
        "", nullptr);
    low("trivial.nmds", "s = 1, 2 <= k <= 2q", "k+2", "Lemma 'trivial bounds' part 4",
        [=](const BoundQuery& Q, Conds& c) -> R {
            return c(Q.s == 1, "s = 1") && c(Q.k >= 2 && Q.k <= 2 * Q.q, "2 <= k <= 2q") ? R(Q.k + 2) : none;
        },
        "", [](const BoundQuery&) -> std::optional<int> { return 1; });
    low("mds.lower", "s = 0, k >= 2", "m(k,q) lower end", "Lemma 'Bounds on MDS codes'",
        [=](const BoundQuery& Q, Conds& c) -> R {
            if (!c(Q.s == 0, "s = 0") || !c(Q.k >= 2, "k >= 2")) return none;
            return R(m_mds(Q.k, Q.q).lo);
        },
        "", [](const BoundQuery&) -> std::optional<int> { return 0; });
    low("monotone.s", "s >= 1, k >= 2", "m^{s-1}(k,q)+1", "Lemma 'bounds on length of AsMDS' part 1",
        [=](const BoundQuery& Q, Conds& c) -> R {
            if (!c(Q.s >= 1, "s >= 1") || !c(Q.k >= 2, "k >= 2")) return none;
            return R(lower_value(sub(Q.k, Q.q, Q.s - 1)) + 1);
        },
        "", nullptr);
    low("union", "k >= 2, s >= k-1", "max m^{s1}(k,q)+m^{s2}(k,q) over s1+s2 <= s-k+1",
        "Lemma 'bounds on length of AsMDS' parts 4-5",
        [=](const BoundQuery& Q, Conds& c) -> R {
            if (!c(Q.k >= 2, "k >= 2") || !c(Q.s >= Q.k - 1, "s >= k-1")) return none;
            const int budget = Q.s - Q.k + 1;
            long long best = 0;
            for (int s1 = 0; 2 * s1 <= budget; ++s1)
                best = std::max(best, lower_value(sub(Q.k, Q.q, s1)) + lower_value(sub(Q.k, Q.q, budget - s1)));
            return R(best);
        },
        "union", nullptr);
    low("construction.denniston", "k = 3, q even, (s+2) | q, s+2 <= q", "(s+1)(q+1)+1", "Lemma 'Barlotti 3d' part 4",
        [=](const BoundQuery& Q, Conds& c) -> R {
            return c(Q.k == 3, "k = 3") && c(Q.q % 2 == 0, "q even") && c(Q.q % (Q.s + 2) == 0, "(s+2) | q") &&
                           c(Q.s + 2 <= Q.q, "s+2 <= q")
                       ? R(full_length(Q))
                       : none;
        },
        "denniston", [](const BoundQuery& Q) -> std::optional<int> { return Q.s == 0 ? 0 : 1; });
    low("construction.hyperoval", "k = 3, q even, s = 0", "q+2", "Lemma 'Bounds on MDS codes' part 2",
        [=](const BoundQuery& Q, Conds& c) -> R {
            return c(Q.k == 3, "k = 3") && c(Q.q % 2 == 0, "q even") && c(Q.s == 0, "s = 0") ? R(Q.q + 2) : none;
        },
        "hyperoval", [](const BoundQuery&) -> std::optional<int> { return 0; });
    low("construction.plane_minus_line", "k = 3, s = q-2, q >= 3", "q^2", "plane minus a line",
        [=](const BoundQuery& Q, Conds& c) -> R {
            return c(Q.k == 3, "k = 3") && c(Q.q >= 3, "q >= 3") && c(Q.s == Q.q - 2, "s = q-2") ? R(sq(Q.q)) : none;
        },
        "plane_minus_line", [](const BoundQuery&) -> std::optional<int> { return 1; });
    low("construction.full_space", "k >= 2, s = theta(k-2,q)-k+1", "theta(k-1,q)", "all points of PG(k-1,q)",
        [=](const BoundQuery& Q, Conds& c) -> R {
            return c(Q.k >= 2, "k >= 2") && c(Q.s == theta(Q.k - 2, Q.q) - Q.k + 1, "s = theta(k-2,q)-k+1")
                       ? R(theta(Q.k - 1, Q.q))
                       : none;
        },
        "full_space", [](const BoundQuery& Q) -> std::optional<int> { return Q.k == 2 ? 0 : Q.k - 2; });
    low("construction.elliptic_quadric", "k = 4, s = q-2, q >= 3", "q^2+1", "elliptic quadric (q^2+1)-cap",
        [=](const BoundQuery& Q, Conds& c) -> R {
            return c(Q.k == 4, "k = 4") && c(Q.q >= 3, "q >= 3") && c(Q.s == Q.q - 2, "s = q-2") ? R(sq(Q.q) + 1) : none;
        },
        "elliptic_quadric", [](const BoundQuery&) -> std::optional<int> { return 1; });
    low("construction.cap8_pg32", "q = 2, k = 4, s = 1", "8", "8-cap in PG(3,2)",
        [=](const BoundQuery& Q, Conds& c) -> R {
            return c(Q.q == 2, "q = 2") && c(Q.k == 4, "k = 4") && c(Q.s == 1, "s = 1") ? R(8) : none;
        },
        "cap8_pg32", [](const BoundQuery&) -> std::optional<int> { return 1; });
    return r;
}

const std::vector<Rule>& rules() {
    static const std::vector<Rule> all = build_rules();
    return all;
}

using Key = std::tuple<int, int, int, int, int>;
Key key_of(const BoundQuery& Q) { return {Q.k, Q.q, Q.s, Q.t ? *Q.t : -1, Q.d ? *Q.d : -1}; }

struct Memo {
    std::shared_mutex mutex;
    std::map<Key, long long> values;

    std::optional<long long> find(const Key& key) {
        std::shared_lock lock(mutex);
        const auto it = values.find(key);
        if (it == values.end()) return std::nullopt;
        return it->second;
    }
    void store(const Key& key, long long v) {
        std::unique_lock lock(mutex);
        values.emplace(key, v);
    }
};

Memo& upper_memo() {
    static Memo m;
    return m;
}
Memo& lower_memo() {
    static Memo m;
    return m;
}

std::vector<BoundResult> evaluate(const BoundQuery& Q, Direction dir, std::vector<SkippedRule>* skipped) {
    validate(Q);
    std::vector<BoundResult> out;
    for (const Rule& rule : rules()) {
        if (rule.info.direction != dir) continue;
        if (dir == Direction::lower && Q.t) {
            // With t fixed only witnesses of known dual defect count.
            if (!rule.witness_t) continue;
            const auto wt = rule.witness_t(Q);
            if (!wt || *wt != *Q.t) continue;
        }
        Conds c;
        const auto v = rule.eval(Q, c);
        if (!v) {
            if (skipped) skipped->push_back({rule.info.id, c.failed});
            continue;
        }
        BoundResult res;
        res.value = *v;
        res.direction = dir;
        res.target = rule.info.target;
        res.rule_id = rule.info.id;
        res.citation = rule.info.citation;
        res.conditions_used = std::move(c.used);
        res.witness = rule.witness;
        out.push_back(std::move(res));
    }
    if (dir == Direction::upper) {
        std::sort(out.begin(), out.end(), [](const BoundResult& a, const BoundResult& b) {
            return std::tie(a.target, a.value, a.rule_id) < std::tie(b.target, b.value, b.rule_id);
        });
    } else {
        std::sort(out.begin(), out.end(), [](const BoundResult& a, const BoundResult& b) {
            if (a.value != b.value) return a.value > b.value;
            return a.rule_id < b.rule_id;
        });
    }
    for (auto& r : out)
        if (r.target == Target::length) {
            r.binding = true;
            break;
        }
    return out;
}

}  // namespace

const std::vector<RuleInfo>& rule_catalog() {
    static const std::vector<RuleInfo> infos = [] {
        std::vector<RuleInfo> v;
        for (const auto& r : rules()) v.push_back(r.info);
        return v;
    }();
    return infos;
}

std::vector<BoundResult> upper_bounds(const BoundQuery& query) { return evaluate(query, Direction::upper, nullptr); }

std::vector<SkippedRule> skipped_upper_bounds(const BoundQuery& query) {
    std::vector<SkippedRule> skipped;
    evaluate(query, Direction::upper, &skipped);
    return skipped;
}

std::vector<BoundResult> lower_bounds(const BoundQuery& query) { return evaluate(query, Direction::lower, nullptr); }

long long upper_value(const BoundQuery& query) {
    const Key key = key_of(query);
    if (auto v = upper_memo().find(key)) return *v;
    long long best = kUnbounded;
    for (const auto& r : upper_bounds(query))
        if (r.target == Target::length) best = std::min(best, r.value);
    upper_memo().store(key, best);
    return best;
}

long long lower_value(const BoundQuery& query) {
    if (query.k == 1 && query.s == 0) return kUnbounded;
    const Key key = key_of(query);
    if (auto v = lower_memo().find(key)) return *v;
    long long best = 0;
    for (const auto& r : lower_bounds(query)) best = std::max(best, r.value);
    lower_memo().store(key, best);
    return best;
}

std::optional<BoundResult> binding_upper(const BoundQuery& query) {
    for (auto& r : upper_bounds(query))
        if (r.binding) return r;
    return std::nullopt;
}

std::optional<BoundResult> binding_lower(const BoundQuery& query) {
    auto all = lower_bounds(query);
    if (all.empty()) return std::nullopt;
    return all.front();
}

}  // namespace projsys
