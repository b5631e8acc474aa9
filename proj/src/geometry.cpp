#include "projsys/geometry.hpp"

#include "projsys/error.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

namespace projsys {

namespace {

// Entries (both directions together) above which the incidence table is refused.
constexpr long long kIncidenceCap = 40'000'000;
constexpr std::uint64_t kDenseIndexCap = 1u << 22;

std::uint64_t encode(std::span<const Elem> v, int q) {
    std::uint64_t code = 0;
    for (Elem x : v) code = code * static_cast<std::uint64_t>(q) + x;
    return code;
}

}  // namespace

long long theta(int dim, int q) noexcept {
    if (dim < 0) return 0;
    long long total = 0;
    long long power = 1;
    constexpr long long cap = std::numeric_limits<long long>::max() / 4;
    for (int i = 0; i <= dim; ++i) {
        total += power;
        if (total >= cap) return cap;  // saturate
        power = power > cap / q ? cap : power * q;
    }
    return total;
}

long long gaussian_binomial(int n, int m, int q) noexcept {
    if (m < 0 || m > n) return 0;
    // prod_{i=0}^{m-1} (q^(n-i) - 1) / (q^(i+1) - 1), evaluated exactly step by step.
    long double num = 1;
    long long result = 1;
    for (int i = 0; i < m; ++i) {
        long long a = 1, b = 1;
        for (int j = 0; j < n - i; ++j) a *= q;
        for (int j = 0; j < i + 1; ++j) b *= q;
        num = static_cast<long double>(result) * static_cast<long double>(a - 1) / static_cast<long double>(b - 1);
        result = static_cast<long long>(num + 0.5L);
    }
    return result;
}

ProjectiveSpace::ProjectiveSpace(int k, Field field, long long point_limit) : k_(k), field_(std::move(field)) {
    if (k < 1) throw Error(ErrorCode::Precondition, "k must be >= 1");
    const int q = field_.q();
    const long long count = theta(k - 1, q);
    if (count > point_limit)
        throw Error(ErrorCode::Overflow, "PG(" + std::to_string(k - 1) + "," + std::to_string(q) + ") has " +
                                             std::to_string(count) + " points, limit " + std::to_string(point_limit));
    num_points_ = static_cast<int>(count);
    coords_.reserve(static_cast<std::size_t>(count) * k);
    codes_.reserve(count);

    // Leading 1 at position `lead`, zeros before it, an arbitrary tail after it. Later lead
    // positions give lexicographically smaller tuples, so they come first.
    std::vector<Elem> v(k);
    for (int lead = k - 1; lead >= 0; --lead) {
        const int tail = k - 1 - lead;
        long long combos = 1;
        for (int i = 0; i < tail; ++i) combos *= q;
        for (long long c = 0; c < combos; ++c) {
            std::fill(v.begin(), v.end(), 0);
            v[lead] = 1;
            long long x = c;
            for (int i = k - 1; i > lead; --i) {
                v[i] = static_cast<Elem>(x % q);
                x /= q;
            }
            coords_.insert(coords_.end(), v.begin(), v.end());
            codes_.push_back(encode(v, q));
        }
    }

    std::uint64_t full = 1;
    for (int i = 0; i < k; ++i) full *= static_cast<std::uint64_t>(q);
    if (full <= kDenseIndexCap) {
        dense_index_.assign(full, -1);
        for (int i = 0; i < num_points_; ++i) dense_index_[codes_[i]] = i;
    }
}

SpacePtr ProjectiveSpace::get(int k, int q) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, SpacePtr> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find({k, q});
    if (it != cache.end()) return it->second;
    auto space = std::make_shared<const ProjectiveSpace>(k, Field(q));
    cache.emplace(std::make_pair(k, q), space);
    return space;
}

Point ProjectiveSpace::point(int index) const {
    const auto c = coords(index);
    return {std::vector<Elem>(c.begin(), c.end()), index};
}

Hyperplane ProjectiveSpace::hyperplane(int index) const {
    const auto c = coords(index);
    return {std::vector<Elem>(c.begin(), c.end()), index};
}

int ProjectiveSpace::index_of(std::span<const Elem> v) const {
    if (static_cast<int>(v.size()) != k_) throw Error(ErrorCode::MixedAmbient, "vector length differs from k");
    std::vector<Elem> w(v.begin(), v.end());
    if (!normalize(field_, w)) return -1;
    const std::uint64_t code = encode(w, field_.q());
    if (!dense_index_.empty()) return dense_index_[code];
    const auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
    return static_cast<int>(it - codes_.begin());
}

Elem ProjectiveSpace::dot(int point, int hyperplane) const noexcept {
    const Elem* a = coords_.data() + static_cast<std::size_t>(point) * k_;
    const Elem* b = coords_.data() + static_cast<std::size_t>(hyperplane) * k_;
    Elem s = 0;
    for (int i = 0; i < k_; ++i) s = field_.add(s, field_.mul(a[i], b[i]));
    return s;
}

bool ProjectiveSpace::incidence_available() const noexcept {
    return 2 * static_cast<long long>(num_points_) * theta(k_ - 2, field_.q()) <= kIncidenceCap;
}

const Incidence& ProjectiveSpace::incidence() const {
    if (!incidence_available())
        throw Error(ErrorCode::Overflow, "incidence table too large for PG(" + std::to_string(k_ - 1) + "," +
                                             std::to_string(field_.q()) + ")");
    std::call_once(incidence_once_, [this] {
        auto inc = std::make_unique<Incidence>();
        const auto n = static_cast<std::size_t>(num_points_);
        const auto per = static_cast<std::size_t>(theta(k_ - 2, field_.q()));
        // Every point lies on theta(k-2,q) hyperplanes and every hyperplane holds as many points.
        inc->points_of_hyperplane.offsets.resize(n + 1);
        inc->hyperplanes_of_point.offsets.resize(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            inc->points_of_hyperplane.offsets[i] = static_cast<std::int64_t>(i * per);
            inc->hyperplanes_of_point.offsets[i] = static_cast<std::int64_t>(i * per);
        }
        inc->points_of_hyperplane.values.resize(n * per);
        inc->hyperplanes_of_point.values.resize(n * per);
        std::vector<std::size_t> fill(n, 0);
        for (int h = 0; h < num_points_; ++h) {
            std::size_t at = static_cast<std::size_t>(h) * per;
            for (int p = 0; p < num_points_; ++p) {
                if (dot(p, h) != 0) continue;
                inc->points_of_hyperplane.values[at++] = p;
                inc->hyperplanes_of_point.values[static_cast<std::size_t>(p) * per + fill[p]++] = h;
            }
        }
        incidence_ = std::move(inc);
    });
    return *incidence_;
}

std::vector<Point> enumerate_points(int k, const Field& field, long long point_limit) {
    const ProjectiveSpace space(k, field, point_limit);
    std::vector<Point> out;
    out.reserve(space.num_points());
    for (int i = 0; i < space.num_points(); ++i) out.push_back(space.point(i));
    return out;
}

int rank(const Field& field, std::span<const Point> points) {
    if (points.empty()) return 0;
    Matrix m(0, static_cast<int>(points.front().coords.size()));
    for (const auto& p : points) {
        if (p.coords.size() != points.front().coords.size())
            throw Error(ErrorCode::MixedAmbient, "points from different dimensions");
        m.append_row(p.coords);
    }
    return rank(field, m);
}

int rank(const ProjectiveSpace& space, std::span<const int> point_indices) {
    Matrix m(0, space.k());
    for (int i : point_indices) m.append_row(space.coords(i));
    return rank(space.field(), m);
}

bool Flat::contains(const Field& f, std::span<const Elem> v) const {
    std::vector<Elem> w(v.begin(), v.end());
    return reduce_against(f, basis_, w);
}

Flat span_flat(const ProjectiveSpace& space, std::span<const int> point_indices) {
    if (point_indices.empty()) throw Error(ErrorCode::Precondition, "span of no points");
    Matrix m(0, space.k());
    for (int i : point_indices) m.append_row(space.coords(i));
    return Flat(space.k(), rref(space.field(), m));
}

Flat span_flat(const Field& field, std::span<const Point> points) {
    if (points.empty()) throw Error(ErrorCode::Precondition, "span of no points");
    Matrix m(0, static_cast<int>(points.front().coords.size()));
    for (const auto& p : points) {
        if (p.coords.size() != points.front().coords.size())
            throw Error(ErrorCode::MixedAmbient, "points from different dimensions");
        m.append_row(p.coords);
    }
    return Flat(m.cols(), rref(field, m));
}

std::vector<int> points_of(const ProjectiveSpace& space, const Flat& flat) {
    std::vector<int> out;
    for (int p = 0; p < space.num_points(); ++p)
        if (flat.contains(space.field(), space.coords(p))) out.push_back(p);
    return out;
}

std::vector<int> hyperplanes_through(const ProjectiveSpace& space, const Flat& flat) {
    const Field& f = space.field();
    const auto& rows = flat.basis().rows;
    std::vector<int> out;
    for (int h = 0; h < space.num_points(); ++h) {
        const auto dual = space.coords(h);
        bool all = true;
        for (int r = 0; r < rows.rows() && all; ++r) {
            Elem s = 0;
            for (int i = 0; i < space.k(); ++i) s = f.add(s, f.mul(rows(r, i), dual[i]));
            all = s == 0;
        }
        if (all) out.push_back(h);
    }
    return out;
}

std::vector<Flat> enumerate_flats(const ProjectiveSpace& space, int proj_dim) {
    const int k = space.k();
    const int m = proj_dim + 1;
    const int q = space.q();
    std::vector<Flat> out;
    if (m < 1 || m > k) return out;

    std::vector<int> pivots(m);
    for (int i = 0; i < m; ++i) pivots[i] = i;
    while (true) {
        // Free slots: row i, column c > pivots[i] with c not a pivot column.
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < m; ++i)
            for (int c = pivots[i] + 1; c < k; ++c)
                if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) slots.emplace_back(i, c);
        std::vector<int> digits(slots.size(), 0);
        while (true) {
            Matrix basis(m, k);
            for (int i = 0; i < m; ++i) basis(i, pivots[i]) = 1;
            for (std::size_t s = 0; s < slots.size(); ++s)
                basis(slots[s].first, slots[s].second) = static_cast<Elem>(digits[s]);
            out.emplace_back(k, Echelon{std::move(basis), pivots});
            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
            if (pos == digits.size()) break;
        }
        int i = m - 1;
        while (i >= 0 && pivots[i] == k - m + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < m; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    return out;
}

FlatIncidence flat_incidence(const ProjectiveSpace& space, int proj_dim) {
    const Field& f = space.field();
    const int q = space.q();
    const int m = proj_dim + 1;
    const std::vector<Flat> flats = enumerate_flats(space, proj_dim);
    FlatIncidence inc;
    inc.points_of_flat.offsets.push_back(0);
    std::vector<std::vector<int>> by_point(space.num_points());
    std::vector<Elem> coef(m), v(space.k());
    for (std::size_t fi = 0; fi < flats.size(); ++fi) {
        const auto& rows = flats[fi].basis().rows;
        // Normalized coefficient vectors enumerate each point of the flat once.
        for (int lead = m - 1; lead >= 0; --lead) {
            long long combos = 1;
            for (int i = lead + 1; i < m; ++i) combos *= q;
            for (long long c = 0; c < combos; ++c) {
                std::fill(coef.begin(), coef.end(), 0);
                coef[lead] = 1;
                long long x = c;
                for (int i = m - 1; i > lead; --i) {
                    coef[i] = static_cast<Elem>(x % q);
                    x /= q;
                }
                std::fill(v.begin(), v.end(), 0);
                for (int i = 0; i < m; ++i) {
                    if (coef[i] == 0) continue;
                    for (int j = 0; j < space.k(); ++j) v[j] = f.axpy(coef[i], rows(i, j), v[j]);
                }
                const int p = space.index_of(v);
                inc.points_of_flat.values.push_back(p);
                by_point[p].push_back(static_cast<int>(fi));
            }
        }
        inc.points_of_flat.offsets.push_back(static_cast<std::int64_t>(inc.points_of_flat.values.size()));
    }
    inc.flats_of_point.offsets.push_back(0);
    for (const auto& list : by_point) {
        inc.flats_of_point.values.insert(inc.flats_of_point.values.end(), list.begin(), list.end());
        inc.flats_of_point.offsets.push_back(static_cast<std::int64_t>(inc.flats_of_point.values.size()));
    }
    return inc;
}

QuotientMap quotient_map(const ProjectiveSpace& space, const Flat& flat) {
    const int r = flat.codim();
    if (r < 2) throw Error(ErrorCode::CodimTooSmall, "quotient needs codimension >= 2, got " + std::to_string(r));
    const Field& f = space.field();
    std::vector<bool> is_pivot(space.k(), false);
    for (int c : flat.basis().pivots) is_pivot[c] = true;

    QuotientMap qm;
    qm.r = r;
    qm.quotient = ProjectiveSpace::get(r, space.q());
    qm.assign.assign(space.num_points(), -1);
    std::vector<Elem> v(space.k()), image(r);
    for (int p = 0; p < space.num_points(); ++p) {
        const auto c = space.coords(p);
        std::copy(c.begin(), c.end(), v.begin());
        if (reduce_against(f, flat.basis(), v)) continue;
        int j = 0;
        for (int i = 0; i < space.k(); ++i)
            if (!is_pivot[i]) image[j++] = v[i];
        qm.assign[p] = qm.quotient->index_of(image);
    }
    return qm;
}

}  // namespace projsys
