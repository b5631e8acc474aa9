#include "projsys/integrality.hpp"

#include "projsys/error.hpp"
#include "projsys/gf.hpp"

namespace projsys {

BigInt binomial(long long n, long long r) {
    if (r < 0 || n < 0 || r > n) return 0;
    r = std::min(r, n - r);
    BigInt out = 1;
    for (long long i = 1; i <= r; ++i) {
        out *= n - r + i;
        out /= i;
    }
    return out;
}

namespace {

Quantity make(std::string name, BigInt num, BigInt den) {
    Quantity q;
    q.name = std::move(name);
    q.raw_num = std::move(num);
    q.raw_den = std::move(den);
    if (q.raw_den == 0) throw Error(ErrorCode::DivisionByZero, q.name + " has a zero denominator");
    q.value = Rational(q.raw_num, q.raw_den);
    q.integer = boost::multiprecision::denominator(q.value) == 1;
    return q;
}

}  // namespace

std::string Quantity::raw_string() const { return raw_num.str() + "/" + raw_den.str(); }

std::string Quantity::reduced_string() const {
    const BigInt den = boost::multiprecision::denominator(value);
    const BigInt num = boost::multiprecision::numerator(value);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

bool IntegralityReport::all_integer() const {
    for (const auto& q : quantities)
        if (!q.integer) return false;
    return true;
}

std::string mode_name(IntegralityMode mode) {
    return mode == IntegralityMode::full_length ? "full_length" : "near_full_length";
}

long long integrality_length(IntegralityMode mode, int k, int q, int s) {
    const long long full = static_cast<long long>(s + 1) * (q + 1) + k - 2;
    return mode == IntegralityMode::full_length ? full : full - 1;
}

std::vector<IntegralityReport> integrality(long long n, int k, int q, int s, IntegralityMode mode) {
    if (k < 2 || s < 0 || q < 2) throw Error(ErrorCode::Precondition, "needs k >= 2, s >= 0, q >= 2");
    const long long want = integrality_length(mode, k, q, s);
    if (n != want)
        throw Error(ErrorCode::ModeMismatch, mode_name(mode) + " needs n = " + std::to_string(want) + ", got " +
                                                 std::to_string(n));
    std::vector<IntegralityReport> out;
    if (mode == IntegralityMode::full_length) {
        const long long d = n - k + 1 - s;
        for (int j = 0; j <= k - 2; ++j)
            out.push_back({j, {make("gamma", binomial(n - j, k - 1 - j), binomial(n - d - j, k - 1 - j))}});
        return out;
    }
    for (int j = 0; j <= k - 3; ++j) {
        Quantity a = make("alpha", binomial(n - j, k - 2 - j), binomial(k + s - 2 - j, k - 2 - j));
        Quantity b = make("beta", a.raw_num * (static_cast<long long>(q) * (s + 1)), a.raw_den * (k + s - 1 - j));
        out.push_back({j, {std::move(a), std::move(b)}});
    }
    return out;
}

std::optional<std::string> first_failure(const std::vector<IntegralityReport>& reports, IntegralityMode mode) {
    for (const auto& r : reports)
        for (const auto& q : r.quantities)
            if (!q.integer) return mode_name(mode) + "." + q.name + "_" + std::to_string(r.j);
    return std::nullopt;
}

Rational gamma_factorial_form(long long n, int k, int q, int s, int j) {
    (void)q;
    const long long d = n - k + 1 - s;
    BigInt num = binomial(n - j, d);
    for (int i = 2; i <= s; ++i) num *= i;
    BigInt den = 1;
    for (int i = 1; i <= s; ++i) den *= d + i;
    return Rational(num, den);
}

std::optional<int> prime_divisor_witness(int part, int k, int q, int s) {
    if (part < 1 || part > 3) throw Error(ErrorCode::Precondition, "part must be 1, 2 or 3");
    const long long d = static_cast<long long>(q) * (s + 1);
    const int lo = part == 3 ? s + 1 : s;
    const int hi = part == 1 ? k + s : k + s - 1;
    const int first = part == 3 ? 0 : 1;
    for (int p = lo + 1; p < hi; ++p) {
        if (!is_prime(p)) continue;
        if (part == 3 && q % p == 0) continue;
        for (int i = first; i <= s; ++i)
            if ((d + i) % p == 0) return p;
    }
    return std::nullopt;
}

}  // namespace projsys
