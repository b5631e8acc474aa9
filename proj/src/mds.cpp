#include "projsys/mds.hpp"

#include "projsys/error.hpp"
#include "projsys/gf.hpp"

namespace projsys {

namespace {

MdsValue exact(long long v, const char* id, const char* cite) { return {v, v, false, id, cite}; }

bool is_square(int x, int& root) {
    for (int r = 1; r * r <= x; ++r)
        if (r * r == x) {
            root = r;
            return true;
        }
    return false;
}

}  // namespace

MdsValue m_mds(int k, int q) {
    const auto [p, h] = prime_power_split(q);
    if (p == 0) throw Error(ErrorCode::NotPrimePower, "q = " + std::to_string(q));
    if (k < 1) throw Error(ErrorCode::Precondition, "k must be >= 1");
    if (k == 1) return {1, 0, true, "mds.k1", "Lemma 'trivial bounds' part 2"};
    if (k >= q) return exact(k + 1, "mds.bush", "Bush: k >= q gives m(k,q) = k+1");
    if (k == 2) return exact(q + 1, "mds.p1", "Lemma 'Bounds on MDS codes' part 1");
    if (k == 3) return exact(q % 2 == 0 ? q + 2 : q + 1, "mds.p2", "Lemma 'Bounds on MDS codes' part 2");
    if (k == 4 || k == 5) return exact(q + 1, "mds.p1", "Lemma 'Bounds on MDS codes' part 1");
    if (k <= p) return exact(q + 1, "mds.p4", "Lemma 'Bounds on MDS codes' part 4");
    if (h > 1 && k <= 2 * p - 2) return exact(q + 1, "mds.p5", "Lemma 'Bounds on MDS codes' part 5");
    int root = 0;
    // k <= sqrt(q) - sqrt(q)/p + 2, with q = p^(2h') so sqrt(q) is an integer divisible by p.
    if (h % 2 == 0 && is_square(q, root) && k <= root - root / p + 2)
        return exact(q + 1, "mds.p6", "Lemma 'Bounds on MDS codes' part 6");
    // Doubly extended Reed-Solomon codes reach q+1; for q even and k = q-1 the dual hyperoval code reaches q+2.
    const long long lo = (q % 2 == 0 && k == q - 1) ? q + 2 : q + 1;
    return {lo, static_cast<long long>(q) + k - 3, false, "mds.p3", "Lemma 'Bounds on MDS codes' part 3"};
}

}  // namespace projsys
