#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace projsys {

/// Field element value in [0, q): the coefficient vector of the polynomial basis
/// {1, a, a^2, ...} read as base-p digits, where a is a root of the field polynomial.
using Elem = std::uint8_t;

/**
 * GF(q) for prime powers q <= 64.
 *
 * Each q uses one fixed monic polynomial (the smallest primitive one in the base-p
 * integer encoding), so element values are stable across runs and file exchanges.
 * Multiplication goes through log/antilog tables; addition through a q x q table.
 * Immutable after construction.
 */
class Field {
  public:
    /// Throws NotPrimePower / Unsupported.
    explicit Field(int q);

    int p() const noexcept { return p_; }
    int h() const noexcept { return h_; }
    int q() const noexcept { return q_; }
    /// Non-leading coefficients of the field polynomial as sum c_i p^i (GF(4): x^2+x+1 -> 3).
    int poly() const noexcept { return poly_; }

    Elem add(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
    Elem sub(Elem a, Elem b) const noexcept { return add_[a * q_ + neg_[b]]; }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    /// Throws DivisionByZero on 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, long long e) const noexcept;

    /// a*x + y, the row-operation kernel.
    Elem axpy(Elem a, Elem x, Elem y) const noexcept { return add(mul(a, x), y); }

    /// Primitive element used for the log tables (the class of x modulo the polynomial).
    Elem generator() const noexcept { return exp_[1]; }

    bool operator==(const Field& other) const noexcept { return q_ == other.q_ && poly_ == other.poly_; }

  private:
    int p_ = 0;
    int h_ = 0;
    int q_ = 0;
    int poly_ = 0;
    std::vector<Elem> add_;
    std::vector<Elem> neg_;
    std::vector<int> log_;
    std::vector<Elem> exp_;  // length 2(q-1) so log sums need no reduction
};

/// Returns (p, h) with q = p^h, or (0, 0) if q is not a prime power.
std::pair<int, int> prime_power_split(int q) noexcept;
bool is_prime(long long n) noexcept;

/// Canonical polynomial encoding for GF(q); throws like Field(q).
int canonical_poly(int q);

/// Irreducibility of x^h + (poly digits) over GF(p): root test for h <= 3,
/// trial division by monic polynomials of degree <= h/2 otherwise.
bool is_irreducible(int p, int h, int poly);

/// Checked arithmetic entry point; operands must lie in [0, q).
enum class FieldOp { add, sub, mul, inv, neg, pow };
Elem arith(const Field& f, FieldOp op, std::span<const long long> operands);

}  // namespace projsys
