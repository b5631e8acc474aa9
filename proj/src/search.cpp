#include "projsys/search.hpp"

#include "projsys/bounds.hpp"
#include "projsys/constructions.hpp"
#include "projsys/error.hpp"
#include "projsys/integrality.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace projsys {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("PROJSYS_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::string outcome_name(KappaOutcome o) {
    switch (o) {
        case KappaOutcome::exists: return "Exists";
        case KappaOutcome::ruled_out: return "RuledOut";
        case KappaOutcome::exhausted_no_code: return "ExhaustedNoCode";
        case KappaOutcome::inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

namespace {

constexpr long long kFlatEntryCap = 30'000'000;
constexpr long long kFlushEvery = 1024;

using Choice = std::pair<int, int>;  // point, multiplicity

// Flats of one projective dimension whose mass is capped at dim+1+s: extending a flat to a
// hyperplane through points of a spanning system adds at least one point per dimension.
struct FlatTrack {
    int dim = 0;
    int cap = 0;
    FlatIncidence inc;
};

struct Geometry {
    SpacePtr space;
    int k = 0;
    int q = 0;
    int n_points = 0;
    int r = 0;        // hyperplane capacity k+s-1
    int cap = 0;      // per-point multiplicity cap
    long long ub = kUnbounded;
    const Adjacency* hyps = nullptr;
    std::vector<FlatTrack> flats;
    int fat_track = -1;  // index of the (k-3)-flat track, if any
};

struct Task {
    std::vector<Choice> prefix;
    int next = 0;      // first point index the extension may use
    int max_mult = 0;  // multiplicity cap for the extension
    bool extend = true;
};

struct TaskResult {
    long long best = 0;
    std::vector<Choice> witness;
    bool completed = false;
};

struct Shared {
    std::atomic<long long> nodes{0};
    std::atomic<bool> budget_hit{false};
    std::atomic<int> stop_above{INT_MAX};
    std::atomic<long long> global_best{0};
};

class Worker {
  public:
    Worker(const Geometry& g, const SearchConfig& cfg, Shared& shared)
        : g_(g), cfg_(cfg), sh_(shared), hcnt_(g.n_points, 0), mult_(g.n_points, 0) {
        for (const auto& f : g.flats) mass_.emplace_back(f.inc.points_of_flat.size(), 0);
    }

    TaskResult run(int id, const Task& task) {
        id_ = id;
        res_ = {};
        aborted_ = false;
        for (const auto& [p, m] : task.prefix) {
            if (!fits(p, m)) {
                undo_all();
                res_.completed = true;
                return res_;
            }
            apply(p, m);
        }
        if (task.extend)
            dfs(task.next, task.max_mult);
        else
            visit();
        flush();
        undo_all();
        res_.completed = !aborted_;
        return res_;
    }

  private:
    bool fits(int p, int m) const {
        for (std::size_t t = 0; t < g_.flats.size(); ++t) {
            const int cap = g_.flats[t].cap;
            for (int f : g_.flats[t].inc.flats_of_point[p])
                if (mass_[t][f] + m > cap) return false;
        }
        for (int h : (*g_.hyps)[p])
            if (hcnt_[h] + m > g_.r) return false;
        return true;
    }

    void apply(int p, int m) {
        fat_stack_.push_back(fat_);
        for (int h : (*g_.hyps)[p]) hcnt_[h] += m;
        for (std::size_t t = 0; t < g_.flats.size(); ++t)
            for (int f : g_.flats[t].inc.flats_of_point[p]) {
                mass_[t][f] += m;
                if (static_cast<int>(t) == g_.fat_track) fat_ = std::max(fat_, mass_[t][f]);
            }
        mult_[p] += m;
        if (g_.k == 3) fat_ = std::max(fat_, mult_[p]);
        n_ += m;
        chosen_.emplace_back(p, m);
    }

    void undo() {
        const auto [p, m] = chosen_.back();
        chosen_.pop_back();
        for (int h : (*g_.hyps)[p]) hcnt_[h] -= m;
        for (std::size_t t = 0; t < g_.flats.size(); ++t)
            for (int f : g_.flats[t].inc.flats_of_point[p]) mass_[t][f] -= m;
        mult_[p] -= m;
        n_ -= m;
        fat_ = fat_stack_.back();
        fat_stack_.pop_back();
    }

    void undo_all() {
        while (!chosen_.empty()) undo();
    }

    // Best length any extension of the current state can reach.
    long long bound() const {
        long long b = g_.ub;
        if (g_.k >= 3) b = std::min(b, static_cast<long long>(g_.q + 1) * (g_.r - fat_) + fat_);
        return b;
    }

    bool should_abort() {
        if (++pending_ >= kFlushEvery) flush();
        return aborted_;
    }

    void flush() {
        const long long total = sh_.nodes.fetch_add(pending_) + pending_;
        pending_ = 0;
        if (total > cfg_.budget) sh_.budget_hit = true;
        if (sh_.budget_hit || id_ > sh_.stop_above.load()) aborted_ = true;
    }

    void signal_stop() {
        int cur = sh_.stop_above.load();
        while (id_ < cur && !sh_.stop_above.compare_exchange_weak(cur, id_)) {
        }
    }

    // Records the current state; returns true when the search can stop.
    bool visit() {
        if (n_ > g_.r && n_ > res_.best) {
            res_.best = n_;
            res_.witness = chosen_;
            long long cur = sh_.global_best.load();
            while (n_ > cur && !sh_.global_best.compare_exchange_weak(cur, n_)) {
            }
            if (cfg_.target ? n_ == *cfg_.target : n_ >= g_.ub) {
                signal_stop();
                return true;
            }
        }
        return cfg_.target && n_ >= *cfg_.target;
    }

    void dfs(int next, int max_mult) {
        if (should_abort()) return;
        if (visit()) {
            aborted_ = aborted_ || res_.best >= (cfg_.target ? *cfg_.target : g_.ub);
            return;
        }
        const long long b = bound();
        if (cfg_.target) {
            if (b < *cfg_.target) return;
        } else if (b <= res_.best || b < sh_.global_best.load(std::memory_order_relaxed)) {
            return;
        }
        long long room = cfg_.target ? *cfg_.target - n_ : LLONG_MAX;
        for (int p = next; p < g_.n_points; ++p) {
            if (!cfg_.target && n_ + static_cast<long long>(g_.n_points - p) * max_mult <= res_.best) return;
            for (int m = static_cast<int>(std::min<long long>(max_mult, room)); m >= 1; --m) {
                if (!fits(p, m)) continue;
                apply(p, m);
                dfs(p + 1, max_mult);
                undo();
                if (aborted_) return;
            }
        }
    }

    const Geometry& g_;
    const SearchConfig& cfg_;
    Shared& sh_;
    std::vector<int> hcnt_;
    std::vector<int> mult_;
    std::vector<std::vector<int>> mass_;
    std::vector<Choice> chosen_;
    std::vector<int> fat_stack_;
    int fat_ = 0;
    long long n_ = 0;
    long long pending_ = 0;
    int id_ = 0;
    bool aborted_ = false;
    TaskResult res_;
};

Geometry build_geometry(const SearchConfig& cfg, std::vector<std::string>& rules) {
    Geometry g;
    g.k = cfg.k;
    g.q = cfg.q;
    g.space = ProjectiveSpace::get(cfg.k, cfg.q);
    g.n_points = g.space->num_points();
    g.r = cfg.k + cfg.s - 1;
    g.cap = std::min(cfg.max_mult > 0 ? cfg.max_mult : cfg.s + 1, g.r);
    g.hyps = &g.space->incidence().hyperplanes_of_point;
    rules.push_back("hyperplane capacity k+s-1");
    if (cfg.use_engine_bound) {
        if (auto b = binding_upper(BoundQuery{cfg.k, cfg.q, cfg.s, std::nullopt, std::nullopt})) {
            g.ub = b->value;
            rules.push_back("engine upper bound " + std::to_string(b->value) + " (" + b->citation + ")");
        }
    }
    long long entries = 0;
    for (int dim = 1; dim <= cfg.k - 3; ++dim) {
        const long long e = static_cast<long long>(g.n_points) * gaussian_binomial(cfg.k - 1, dim, cfg.q);
        if (entries + e > kFlatEntryCap) break;
        entries += e;
        g.flats.push_back({dim, dim + 1 + cfg.s, flat_incidence(*g.space, dim)});
        if (dim == cfg.k - 3) g.fat_track = static_cast<int>(g.flats.size()) - 1;
    }
    if (!g.flats.empty()) rules.push_back("flat capacity j+1+s for j-flats, j <= " + std::to_string(g.flats.back().dim));
    if (cfg.k == 3 || g.fat_track >= 0) rules.push_back("Lemma 'fat k-3 flat short code'");
    return g;
}

std::vector<Task> make_tasks(const Geometry& g, const SearchConfig& cfg) {
    std::vector<Task> tasks;
    const int N = g.n_points;
    auto second_level = [&](std::vector<Choice> prefix, int from, int mmax) {
        tasks.push_back({prefix, 0, 0, false});
        for (int p = from; p < N; ++p)
            for (int m = mmax; m >= 1; --m) {
                auto pre = prefix;
                pre.emplace_back(p, m);
                tasks.push_back({std::move(pre), p + 1, mmax, true});
            }
    };
    if (cfg.fix_points) {
        for (int m0 = g.cap; m0 >= 1; --m0)
            for (int m1 = m0; m1 >= 1; --m1) second_level({{0, m0}, {1, m1}}, 2, m1);
    } else {
        for (int p0 = 0; p0 < N; ++p0)
            for (int m0 = g.cap; m0 >= 1; --m0)
                for (int p1 = p0 + 1; p1 < N; ++p1)
                    for (int m1 = g.cap; m1 >= 1; --m1) second_level({{p0, m0}, {p1, m1}}, p1 + 1, g.cap);
    }
    return tasks;
}

}  // namespace

SearchCertificate max_length(const SearchConfig& cfg) {
    validate(BoundQuery{cfg.k, cfg.q, cfg.s, std::nullopt, std::nullopt});
    if (cfg.k < 2) throw Error(ErrorCode::Precondition, "search needs k >= 2");
    if (cfg.budget <= 0) throw Error(ErrorCode::Precondition, "budget must be positive");
    if (cfg.max_mult < 0) throw Error(ErrorCode::Precondition, "max_mult must be >= 0");
    if (theta(cfg.k - 1, cfg.q) > kSearchPointLimit)
        throw Error(ErrorCode::Unsupported, "PG(" + std::to_string(cfg.k - 1) + "," + std::to_string(cfg.q) +
                                                ") has more than " + std::to_string(kSearchPointLimit) + " points");
    SearchCertificate cert;
    cert.k = cfg.k;
    cert.q = cfg.q;
    cert.s = cfg.s;
    const Geometry g = build_geometry(cfg, cert.rules_used);
    if (cfg.fix_points) {
        cert.symmetry.push_back("point 0 carries the largest multiplicity (PGL transitive on points)");
        cert.symmetry.push_back("point 1 carries the next largest (PGL 2-transitive on points)");
    } else {
        cert.symmetry.push_back("lex_only");
    }
    const std::vector<Task> tasks = make_tasks(g, cfg);
    std::vector<TaskResult> results(tasks.size());
    Shared shared;
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        Worker w(g, cfg, shared);
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
            if (shared.budget_hit || static_cast<int>(i) > shared.stop_above.load()) continue;
            results[i] = w.run(static_cast<int>(i), tasks[i]);
        }
    };
    const int threads = std::min<int>(resolve_threads(cfg.threads), static_cast<int>(std::max<std::size_t>(1, tasks.size())));
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    std::size_t winner = tasks.size();
    for (std::size_t i = 0; i < tasks.size(); ++i)
        if (results[i].best > 0 && (winner == tasks.size() || results[i].best > results[winner].best)) winner = i;
    cert.nodes = shared.nodes.load();
    const bool stopped = shared.stop_above.load() != INT_MAX;
    cert.exhaustive = stopped || !shared.budget_hit.load();
    if (winner < tasks.size()) {
        std::map<int, int> mult;
        for (const auto& [p, m] : results[winner].witness) mult[p] += m;
        cert.witness = ProjectiveSystem(g.space, std::move(mult));
        cert.n_max = results[winner].best;
    }
    return cert;
}

KappaVerdict verify_kappa_entry(int s, int q, int k, long long budget) {
    KappaVerdict v;
    if (k < 2) throw Error(ErrorCode::Precondition, "k must be >= 2");
    const long long full = integrality_length(IntegralityMode::full_length, k, q, s);
    if (std::string why = kappa_exclusion(s, q, k); !why.empty()) {
        v.outcome = KappaOutcome::ruled_out;
        v.reason = why;
        return v;
    }
    for (const auto& lb : lower_bounds(BoundQuery{k, q, s, std::nullopt, std::nullopt})) {
        if (lb.value < full || lb.witness.empty()) continue;
        auto w = witness_system(lb.witness, k, q, s);
        if (w && w->n() == full) {
            v.outcome = KappaOutcome::exists;
            v.reason = "catalog: " + lb.witness;
            v.witness = std::move(w);
            return v;
        }
    }
    if (theta(k - 1, q) > kSearchPointLimit) {
        v.reason = "space too large to search";
        return v;
    }
    SearchConfig cfg;
    cfg.k = k;
    cfg.q = q;
    cfg.s = s;
    cfg.budget = budget;
    cfg.target = full;
    const SearchCertificate cert = max_length(cfg);
    v.nodes = cert.nodes;
    if (cert.n_max == full) {
        v.outcome = KappaOutcome::exists;
        v.reason = "search";
        v.witness = cert.witness;
    } else if (cert.exhaustive) {
        v.outcome = KappaOutcome::exhausted_no_code;
        v.reason = "search exhausted";
    } else {
        v.reason = "search budget exhausted";
    }
    return v;
}

int dual_defect_scan(const SearchCertificate& cert) {
    if (!cert.witness) throw Error(ErrorCode::Precondition, "certificate has no witness");
    const CodeParams p = params(*cert.witness);
    if (p.s >= 1 && p.k >= 2 && p.n > static_cast<long long>(p.s) * (cert.q + 1) + p.k - 1 && p.t > 1)
        throw Error(ErrorCode::ForcingViolated, "[" + std::to_string(p.n) + "," + std::to_string(p.k) + "," +
                                                    std::to_string(p.d) + "] witness has t = " + std::to_string(p.t));
    return p.t;
}

KappaEntry refine_kappa(KappaEntry e, long long budget, int k_limit) {
    e.searched = true;
    for (int k = e.lower + 1;; ++k) {
        if (e.upper ? k > *e.upper : k > k_limit) break;
        const KappaVerdict v = verify_kappa_entry(e.s, e.q, k, budget);
        if (v.outcome == KappaOutcome::exists) {
            e.lower = k;
            e.lower_rule = v.reason;
            e.lower_witness = v.reason == "search" ? "search" : v.reason.substr(v.reason.find(' ') + 1);
            continue;
        }
        if (v.outcome == KappaOutcome::ruled_out || v.outcome == KappaOutcome::exhausted_no_code) {
            e.upper = k - 1;
            e.upper_rule = v.outcome == KappaOutcome::ruled_out ? v.reason : "search.exhausted";
        } else {
            e.notes.push_back("k = " + std::to_string(k) + ": " + v.reason);
        }
        break;
    }
    return e;
}

}  // namespace projsys
