#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace projsys {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(long long n, long long r);

/// Exact quotient kept both as computed (raw) and reduced.
struct Quantity {
    std::string name;  // "gamma", "alpha" or "beta"
    BigInt raw_num;
    BigInt raw_den;
    Rational value;
    bool integer = false;

    std::string raw_string() const;      // "3654/10"
    std::string reduced_string() const;  // "1827/5", or "68"
};

struct IntegralityReport {
    int j = 0;
    std::vector<Quantity> quantities;

    bool all_integer() const;
};

enum class IntegralityMode { full_length, near_full_length };

std::string mode_name(IntegralityMode mode);

/// Length required by the mode: (s+1)(q+1)+k-2, or one less.
long long integrality_length(IntegralityMode mode, int k, int q, int s);

/// One report per j: gamma_j for full length (j in [0,k-2]); alpha_j and beta_j for
/// near-full length (j in [0,k-3]). Throws ModeMismatch when n is not the mode's length.
std::vector<IntegralityReport> integrality(long long n, int k, int q, int s, IntegralityMode mode);

/// The first non-integer quantity, as "<mode>.<name>_<j>".
std::optional<std::string> first_failure(const std::vector<IntegralityReport>& reports, IntegralityMode mode);

/// gamma_j via s! C(n-j, d) / ((d+1)...(d+s)).
Rational gamma_factorial_form(long long n, int k, int q, int s, int j);

/// Smallest prime in the window of the prime-divisor rule `part` (1, 2 or 3) that divides
/// the associated product, if any.
std::optional<int> prime_divisor_witness(int part, int k, int q, int s);

}  // namespace projsys
