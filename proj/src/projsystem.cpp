#include "projsys/projsystem.hpp"

#include "projsys/error.hpp"

#include <algorithm>
#include <string>

namespace projsys {

ProjectiveSystem::ProjectiveSystem(SpacePtr space, std::map<int, int> mult, int zero_mult)
    : space_(std::move(space)), zero_mult_(zero_mult) {
    if (zero_mult < 0) throw Error(ErrorCode::Precondition, "negative zero_mult");
    std::vector<int> pts;
    for (const auto& [p, m] : mult) {
        if (p < 0 || p >= space_->num_points()) throw Error(ErrorCode::Precondition, "point index out of range");
        if (m < 0) throw Error(ErrorCode::Precondition, "negative multiplicity");
        if (m == 0) continue;
        mult_.emplace(p, m);
        pts.push_back(p);
        n_ += m;
    }
    n_ += zero_mult;
    const int r = rank(*space_, pts);
    if (r < space_->k())
        throw Error(ErrorCode::RankDeficient,
                    "support spans rank " + std::to_string(r) + " < k = " + std::to_string(space_->k()));
}

int ProjectiveSystem::multiplicity(int point) const noexcept {
    const auto it = mult_.find(point);
    return it == mult_.end() ? 0 : it->second;
}

int ProjectiveSystem::max_mult() const noexcept {
    int m = 0;
    for (const auto& [p, mu] : mult_) m = std::max(m, mu);
    return m;
}

std::vector<int> ProjectiveSystem::support() const {
    std::vector<int> out;
    out.reserve(mult_.size());
    for (const auto& [p, m] : mult_) out.push_back(p);
    return out;
}

bool ProjectiveSystem::is_projective() const noexcept { return zero_mult_ == 0 && max_mult() == 1; }

Matrix to_generator_matrix(const ProjectiveSystem& ps) {
    const int k = ps.k();
    Matrix g(k, ps.n());
    int col = 0;
    for (const auto& [p, m] : ps.mult()) {
        const auto c = ps.space()->coords(p);
        for (int rep = 0; rep < m; ++rep, ++col)
            for (int i = 0; i < k; ++i) g(i, col) = c[i];
    }
    return g;
}

ProjectiveSystem from_generator_matrix(const Field& field, const Matrix& rows) {
    const int k = rows.rows();
    if (k < 1) throw Error(ErrorCode::RankDeficient, "empty generator matrix");
    const int r = rank(field, rows);
    if (r < k) throw Error(ErrorCode::RankDeficient, "generator matrix has rank " + std::to_string(r) + " < " + std::to_string(k));
    SpacePtr space = ProjectiveSpace::get(k, field.q());
    if (!(space->field() == field)) throw Error(ErrorCode::Unsupported, "non-canonical field polynomial");
    std::map<int, int> mult;
    int zeros = 0;
    for (int c = 0; c < rows.cols(); ++c) {
        const int idx = space->index_of(rows.column(c));
        if (idx < 0)
            ++zeros;
        else
            ++mult[idx];
    }
    return ProjectiveSystem(space, std::move(mult), zeros);
}

std::vector<int> hyperplane_counts(const ProjectiveSystem& ps) {
    const ProjectiveSpace& space = *ps.space();
    std::vector<int> counts(space.num_points(), 0);
    if (space.incidence_available()) {
        const Incidence& inc = space.incidence();
        for (const auto& [p, m] : ps.mult())
            for (int h : inc.hyperplanes_of_point[p]) counts[h] += m;
        return counts;
    }
    for (int h = 0; h < space.num_points(); ++h)
        for (const auto& [p, m] : ps.mult())
            if (space.incident(p, h)) counts[h] += m;
    return counts;
}

MinDistance min_distance(const ProjectiveSystem& ps) {
    const std::vector<int> counts = hyperplane_counts(ps);
    const int best = *std::max_element(counts.begin(), counts.end());
    MinDistance out;
    out.d = ps.n() - ps.zero_mult() - best;
    for (int h = 0; h < static_cast<int>(counts.size()); ++h)
        if (counts[h] == best) out.secants.push_back(h);
    return out;
}

namespace {

// Looks for a dependent set of exactly `size` distinct support points: an independent
// (size-1)-prefix in increasing index order plus one later point inside its span.
class DependentSearch {
  public:
    DependentSearch(const ProjectiveSpace& space, std::vector<int> pts)
        : space_(space), f_(space.field()), pts_(std::move(pts)) {}

    bool exists(int size) {
        target_ = size - 1;
        basis_ = Matrix(0, space_.k());
        pivots_.clear();
        return extend(0);
    }

  private:
    // Reduces v against the current (not fully reduced) echelon rows.
    bool in_span(std::vector<Elem>& v) const {
        for (int i = 0; i < basis_.rows(); ++i) {
            const int c = pivots_[i];
            if (v[c] == 0) continue;
            const Elem factor = f_.neg(v[c]);
            for (int j = c; j < space_.k(); ++j) v[j] = f_.axpy(factor, basis_(i, j), v[j]);
        }
        return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
    }

    bool extend(std::size_t from) {
        const int depth = basis_.rows();
        std::vector<Elem> v(space_.k());
        if (depth == target_) {
            for (std::size_t i = from; i < pts_.size(); ++i) {
                const auto c = space_.coords(pts_[i]);
                v.assign(c.begin(), c.end());
                if (in_span(v)) return true;
            }
            return false;
        }
        for (std::size_t i = from; i + (target_ - depth) < pts_.size(); ++i) {
            const auto c = space_.coords(pts_[i]);
            v.assign(c.begin(), c.end());
            if (in_span(v)) continue;
            normalize(f_, v);
            int pivot = 0;
            while (v[pivot] == 0) ++pivot;
            basis_.append_row(v);
            pivots_.push_back(pivot);
            const bool found = extend(i + 1);
            pivots_.pop_back();
            basis_.pop_row();
            if (found) return true;
        }
        return false;
    }

    const ProjectiveSpace& space_;
    const Field& f_;
    std::vector<int> pts_;
    int target_ = 0;
    Matrix basis_;
    std::vector<int> pivots_;
};

}  // namespace

int dual_distance(const ProjectiveSystem& ps) {
    if (ps.zero_mult() > 0) return 1;
    if (ps.max_mult() >= 2) return 2;
    DependentSearch search(*ps.space(), ps.support());
    for (int m = 3; m <= ps.k(); ++m)
        if (search.exists(m)) return m;
    // Any k+1 vectors in GF(q)^k are dependent.
    return ps.k() + 1;
}

long long griesmer_length(int k, int d, int q) {
    long long total = 0;
    long long power = 1;
    for (int i = 0; i < k; ++i) {
        total += (d + power - 1) / power;
        if (power <= d) power *= q;
    }
    return total;
}

CodeParams params(const ProjectiveSystem& ps) {
    CodeParams c;
    c.n = ps.n();
    c.k = ps.k();
    c.d = min_distance(ps).d;
    c.d_perp = dual_distance(ps);
    c.s = c.n - c.k + 1 - c.d;
    c.t = c.k + 1 - c.d_perp;
    c.k_perp = c.n - c.k;
    c.projective = ps.is_projective();
    c.degenerate = ps.zero_mult() > 0;
    c.griesmer_met = griesmer_length(c.k, c.d, ps.q()) == c.n;
    return c;
}

std::map<int, long long> weight_distribution(const ProjectiveSystem& ps) {
    const std::vector<int> counts = hyperplane_counts(ps);
    std::map<int, long long> dist;
    dist[0] = 1;
    const int mass = ps.n() - ps.zero_mult();
    for (int c : counts) dist[mass - c] += ps.q() - 1;
    return dist;
}

Matrix dual_code(const ProjectiveSystem& ps) { return null_space(ps.field(), to_generator_matrix(ps)); }

ShortenResult quotient_shorten(const ProjectiveSystem& ps, const Flat& flat) {
    const QuotientMap qm = quotient_map(*ps.space(), flat);
    std::map<int, int> mult;
    int alpha = ps.zero_mult();
    for (const auto& [p, m] : ps.mult()) {
        if (qm.assign[p] < 0)
            alpha += m;
        else
            mult[qm.assign[p]] += m;
    }
    if (mult.empty()) throw Error(ErrorCode::EmptyQuotient, "all points lie on the flat");
    return {ProjectiveSystem(qm.quotient, std::move(mult), 0), alpha, flat.proj_dim()};
}

NsmdsReport check_nsmds_conditions(const ProjectiveSystem& ps) {
    const CodeParams c = params(ps);
    if (c.s <= 1 || c.d <= 1)
        throw Error(ErrorCode::Precondition, "needs s > 1 and d > 1, got s = " + std::to_string(c.s) +
                                                 ", d = " + std::to_string(c.d));
    NsmdsReport r;
    r.s = c.s;
    r.t = c.t;
    r.k_condition = c.k >= (c.s - 1) * (ps.q() + 1);
    r.affine_independent = c.d_perp >= c.k - c.s + 1;
    r.applies = r.k_condition && r.affine_independent;
    r.conclusion_holds = c.t == c.s;
    return r;
}

}  // namespace projsys
