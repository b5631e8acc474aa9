#include "projsys/gf.hpp"

#include "projsys/error.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <tuple>

namespace projsys {

namespace {

struct PolyEntry {
    int q;
    int poly;
};

// Smallest primitive monic polynomial per non-prime q, base-p encoding of the
// non-leading coefficients. Prime fields use the degree-1 polynomial x (encoding 0).
constexpr std::array<PolyEntry, 9> kExtensionPolys{{
    {4, 3},    // x^2 + x + 1
    {8, 3},    // x^3 + x + 1
    {9, 5},    // x^2 + x + 2
    {16, 3},   // x^4 + x + 1
    {25, 7},   // x^2 + x + 2
    {27, 7},   // x^3 + 2x + 1
    {32, 5},   // x^5 + x^2 + 1
    {49, 10},  // x^2 + x + 3
    {64, 3},   // x^6 + x + 1
}};

using Digits = std::vector<int>;

Digits to_digits(int v, int p, int len) {
    Digits d(len);
    for (int i = 0; i < len; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

int from_digits(const Digits& d, int p) {
    int v = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
    return v;
}

// Remainder of a modulo the monic polynomial `m` (coefficients low to high, leading 1 included).
Digits poly_mod(Digits a, const Digits& m, int p) {
    const int dm = static_cast<int>(m.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
        const int c = a[i] % p;
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j) a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p) % p;
    }
    a.resize(std::max(dm, 0));
    return a;
}

int primitive_root(int p) {
    if (p == 2) return 1;
    for (int g = 2; g < p; ++g) {
        int x = 1;
        int order = 0;
        do {
            x = x * g % p;
            ++order;
        } while (x != 1);
        if (order == p - 1) return g;
    }
    return 1;
}

}  // namespace

bool is_prime(long long n) noexcept {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<int, int> prime_power_split(int q) noexcept {
    if (q < 2) return {0, 0};
    int p = 2;
    while (q % p != 0) ++p;
    int h = 0;
    int x = q;
    while (x % p == 0) {
        x /= p;
        ++h;
    }
    if (x != 1) return {0, 0};
    return {p, h};
}

int canonical_poly(int q) {
    if (q > 64) throw Error(ErrorCode::Unsupported, "q = " + std::to_string(q) + " exceeds 64");
    const auto [p, h] = prime_power_split(q);
    if (p == 0) throw Error(ErrorCode::NotPrimePower, "q = " + std::to_string(q));
    if (h == 1) return 0;
    for (const auto& e : kExtensionPolys)
        if (e.q == q) return e.poly;
    throw Error(ErrorCode::Unsupported, "no polynomial for q = " + std::to_string(q));
}

bool is_irreducible(int p, int h, int poly) {
    if (h == 1) return true;
    Digits f = to_digits(poly, p, h);
    f.push_back(1);
    if (h <= 3) {
        for (int x = 0; x < p; ++x) {
            int v = 0;
            for (int i = h; i >= 0; --i) v = (v * x + f[i]) % p;
            if (v == 0) return false;
        }
        return true;
    }
    for (int deg = 1; deg <= h / 2; ++deg) {
        int count = 1;
        for (int i = 0; i < deg; ++i) count *= p;
        for (int low = 0; low < count; ++low) {
            Digits g = to_digits(low, p, deg);
            g.push_back(1);
            const Digits r = poly_mod(f, g, p);
            bool zero = true;
            for (int c : r) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return true;
}

Field::Field(int q) {
    poly_ = canonical_poly(q);
    std::tie(p_, h_) = prime_power_split(q);
    q_ = q;
    if (!is_irreducible(p_, h_, poly_))
        throw Error(ErrorCode::Unsupported, "field polynomial is reducible for q = " + std::to_string(q));

    add_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(q_);
    for (int a = 0; a < q_; ++a) {
        const Digits da = to_digits(a, p_, h_);
        Digits dn(h_);
        for (int i = 0; i < h_; ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[a] = static_cast<Elem>(from_digits(dn, p_));
        for (int b = 0; b < q_; ++b) {
            const Digits db = to_digits(b, p_, h_);
            Digits ds(h_);
            for (int i = 0; i < h_; ++i) ds[i] = (da[i] + db[i]) % p_;
            add_[a * q_ + b] = static_cast<Elem>(from_digits(ds, p_));
        }
    }

    // Powers of the primitive element: x modulo the polynomial, or a primitive root mod p.
    Digits modulus = to_digits(poly_, p_, h_);
    modulus.push_back(1);
    Digits gen = h_ == 1 ? Digits{primitive_root(p_)} : to_digits(p_, p_, h_);
    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, -1);
    Digits cur = to_digits(1, p_, h_);
    for (int i = 0; i < q_ - 1; ++i) {
        const int v = from_digits(cur, p_);
        if (log_[v] != -1) throw Error(ErrorCode::Unsupported, "field polynomial is not primitive");
        exp_[i] = static_cast<Elem>(v);
        log_[v] = i;
        Digits prod(2 * h_, 0);
        for (int a = 0; a < h_; ++a)
            for (int b = 0; b < h_; ++b) prod[a + b] = (prod[a + b] + cur[a] * gen[b]) % p_;
        cur = poly_mod(prod, modulus, p_);
    }
    for (int i = q_ - 1; i < 2 * (q_ - 1); ++i) exp_[i] = exp_[i - (q_ - 1)];
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, long long e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const long long m = q_ - 1;
    long long r = (static_cast<long long>(log_[a]) * (e % m)) % m;
    if (r < 0) r += m;
    return exp_[r];
}

Elem arith(const Field& f, FieldOp op, std::span<const long long> operands) {
    const bool binary = op == FieldOp::add || op == FieldOp::sub || op == FieldOp::mul;
    const std::size_t need = binary || op == FieldOp::pow ? 2 : 1;
    if (operands.size() != need) throw Error(ErrorCode::Precondition, "wrong operand count");
    const std::size_t checked = op == FieldOp::pow ? 1 : need;
    for (std::size_t i = 0; i < checked; ++i)
        if (operands[i] < 0 || operands[i] >= f.q())
            throw Error(ErrorCode::Precondition, "operand " + std::to_string(operands[i]) + " outside [0,q)");
    const auto a = static_cast<Elem>(operands[0]);
    switch (op) {
        case FieldOp::add: return f.add(a, static_cast<Elem>(operands[1]));
        case FieldOp::sub: return f.sub(a, static_cast<Elem>(operands[1]));
        case FieldOp::mul: return f.mul(a, static_cast<Elem>(operands[1]));
        case FieldOp::inv: return f.inv(a);
        case FieldOp::neg: return f.neg(a);
        case FieldOp::pow:
            if (operands[1] < 0 && a == 0) throw Error(ErrorCode::DivisionByZero, "negative power of 0");
            return f.pow(a, operands[1]);
    }
    return 0;
}

}  // namespace projsys
