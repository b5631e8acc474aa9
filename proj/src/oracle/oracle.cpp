#include "oracle/oracle.hpp"

#include "projsys/error.hpp"

#include <algorithm>
#include <functional>

namespace projsys::oracle {

namespace {

long long ipow(int b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Base-q digits of x, most significant first.
void digits(long long x, int q, std::vector<Elem>& out) {
    for (int i = static_cast<int>(out.size()) - 1; i >= 0; --i) {
        out[i] = static_cast<Elem>(x % q);
        x /= q;
    }
}

int weight_of_combination(const Field& f, const Matrix& rows, const std::vector<Elem>& coeff) {
    int w = 0;
    for (int c = 0; c < rows.cols(); ++c) {
        Elem v = 0;
        for (int r = 0; r < rows.rows(); ++r) v = f.axpy(coeff[r], rows(r, c), v);
        w += v != 0;
    }
    return w;
}

}  // namespace

std::map<int, long long> codeword_weights(const ProjectiveSystem& ps) {
    const Field& f = ps.field();
    const Matrix g = to_generator_matrix(ps);
    std::map<int, long long> out;
    std::vector<Elem> msg(g.rows());
    for (long long x = 0; x < ipow(f.q(), g.rows()); ++x) {
        digits(x, f.q(), msg);
        ++out[weight_of_combination(f, g, msg)];
    }
    return out;
}

int dual_min_weight(const ProjectiveSystem& ps) {
    const Field& f = ps.field();
    const Matrix h = null_space(f, to_generator_matrix(ps));
    if (h.rows() == 0) return ps.k() + 1;
    int best = h.cols() + 1;
    std::vector<Elem> coeff(h.rows());
    for (long long x = 1; x < ipow(f.q(), h.rows()); ++x) {
        digits(x, f.q(), coeff);
        best = std::min(best, weight_of_combination(f, h, coeff));
    }
    return best;
}

int max_multiarc_length(int k, int q, int s) {
    const Field f(q);
    // Normalized vectors: first nonzero coordinate equal to 1.
    std::vector<std::vector<Elem>> pts;
    std::vector<Elem> v(k);
    for (long long x = 1; x < ipow(q, k); ++x) {
        digits(x, q, v);
        const auto lead = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
        if (*lead == 1) pts.push_back(v);
    }
    const int N = static_cast<int>(pts.size());
    std::vector<std::vector<int>> on(N);  // hyperplanes (dual vectors) through each point
    for (int p = 0; p < N; ++p)
        for (int h = 0; h < N; ++h) {
            Elem dot = 0;
            for (int i = 0; i < k; ++i) dot = f.axpy(pts[p][i], pts[h][i], dot);
            if (dot == 0) on[p].push_back(h);
        }
    const int r = k + s - 1;
    std::vector<int> count(N, 0);
    std::vector<int> chosen;
    int best = 0;
    std::function<void(int, int)> rec = [&](int p, int n) {
        if (n > best) {
            Matrix m(0, k);
            for (int c : chosen) m.append_row(pts[c]);
            if (rank(f, m) == k) best = n;
        }
        if (p == N) return;
        rec(p + 1, n);
        int added = 0;
        for (int m = 1; m <= s + 1; ++m) {
            bool ok = true;
            for (int h : on[p]) ok = ok && count[h] + 1 <= r;
            if (!ok) break;
            for (int h : on[p]) ++count[h];
            ++added;
            chosen.push_back(p);
            rec(p + 1, n + m);
        }
        for (int i = 0; i < added; ++i) {
            chosen.pop_back();
            for (int h : on[p]) --count[h];
        }
    };
    rec(0, 0);
    return best;
}

ProjectiveSystem random_system(int k, int q, int n, std::mt19937_64& rng, int zero_mult) {
    if (n < k) throw Error(ErrorCode::Precondition, "n < k cannot span");
    auto space = ProjectiveSpace::get(k, q);
    std::uniform_int_distribution<int> pick(0, space->num_points() - 1);
    for (;;) {
        std::map<int, int> mult;
        for (int i = 0; i < n; ++i) ++mult[pick(rng)];
        std::vector<int> support;
        for (const auto& [p, m] : mult) support.push_back(p);
        if (rank(*space, support) == k) return ProjectiveSystem(space, std::move(mult), zero_mult);
    }
}

}  // namespace projsys::oracle
