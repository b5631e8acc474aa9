#include "projsys/error.hpp"
#include "projsys/gf.hpp"

#include <doctest.h>

#include <random>

using namespace projsys;

namespace {

const int kPrimePowers[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49, 53, 59, 61, 64};

// Polynomial product over GF(p) of the field polynomial's coefficient vectors, used to decide
// irreducibility by brute force: no product of two monic factors of positive degree equals it.
std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return c;
}

std::vector<int> monic(long long code, int deg, int p) {
    std::vector<int> v(deg + 1, 0);
    for (int i = 0; i < deg; ++i, code /= p) v[i] = static_cast<int>(code % p);
    v[deg] = 1;
    return v;
}

bool brute_irreducible(int p, int h, int poly) {
    const auto target = monic(poly, h, p);
    for (int d1 = 1; d1 < h; ++d1) {
        long long n1 = 1, n2 = 1;
        for (int i = 0; i < d1; ++i) n1 *= p;
        for (int i = 0; i < h - d1; ++i) n2 *= p;
        for (long long a = 0; a < n1; ++a)
            for (long long b = 0; b < n2; ++b)
                if (poly_mul(monic(a, d1, p), monic(b, h - d1, p), p) == target) return false;
    }
    return true;
}

void check_axioms(const Field& f, int a, int b, int c) {
    const Elem x = a, y = b, z = c;
    CHECK(f.add(x, y) == f.add(y, x));
    CHECK(f.mul(x, y) == f.mul(y, x));
    CHECK(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
    CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
    CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
}

}  // namespace

TEST_CASE("field_new examples") {
    const Field f2(2);
    CHECK(f2.p() == 2);
    CHECK(f2.h() == 1);
    const Field f4(4);
    CHECK(f4.p() == 2);
    CHECK(f4.h() == 2);
    CHECK(f4.poly() == 3);  // x^2 + x + 1
    CHECK_THROWS_AS(Field(6), Error);
    try {
        Field bad(6);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPrimePower);
    }
    try {
        Field big(128);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Unsupported);
    }
    try {
        Field one(1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPrimePower);
    }
}

TEST_CASE("arith examples") {
    const long long one_one[] = {1, 1};
    CHECK(arith(Field(2), FieldOp::add, one_one) == 0);
    const long long two[] = {2};
    CHECK(arith(Field(5), FieldOp::inv, two) == 3);
    const long long two_two[] = {2, 2};
    CHECK(arith(Field(4), FieldOp::mul, two_two) == 3);
    const long long zero[] = {0};
    try {
        arith(Field(7), FieldOp::inv, zero);
        FAIL("inv(0) did not throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DivisionByZero);
    }
    const long long out_of_range[] = {5, 1};
    CHECK_THROWS_AS(arith(Field(5), FieldOp::add, out_of_range), Error);
}

TEST_CASE("canonical polynomials are irreducible (brute-force factor search)") {
    for (int q : kPrimePowers) {
        const auto [p, h] = prime_power_split(q);
        if (h == 1) continue;
        const Field f(q);
        CAPTURE(q);
        CHECK(brute_irreducible(p, h, f.poly()));
        CHECK(is_irreducible(p, h, f.poly()));
    }
    CHECK_FALSE(is_irreducible(2, 2, 1));  // x^2 + 1 = (x+1)^2
    CHECK_FALSE(brute_irreducible(2, 2, 1));
}

TEST_CASE("field axioms exhaustive for q <= 16") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        const Field f(q);
        CAPTURE(q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.pow(static_cast<Elem>(a), q) == a);
            if (a != 0) {
                CHECK(f.mul(static_cast<Elem>(a), f.inv(static_cast<Elem>(a))) == 1);
                CHECK(f.inv(f.inv(static_cast<Elem>(a))) == a);
            }
            CHECK(f.add(static_cast<Elem>(a), f.neg(static_cast<Elem>(a))) == 0);
            for (int b = 0; b < q; ++b) {
                // Frobenius is additive.
                CHECK(f.pow(f.add(a, b), f.p()) == f.add(f.pow(a, f.p()), f.pow(b, f.p())));
                CHECK(f.sub(f.add(a, b), b) == a);
                for (int c = 0; c < q; ++c) check_axioms(f, a, b, c);
            }
        }
    }
}

TEST_CASE("field axioms on random triples for q > 16") {
    std::mt19937 rng(0);
    for (int q : {17, 25, 27, 32, 49, 64}) {
        const Field f(q);
        CAPTURE(q);
        std::uniform_int_distribution<int> pick(0, q - 1);
        for (int i = 0; i < 2000; ++i) check_axioms(f, pick(rng), pick(rng), pick(rng));
        for (int a = 0; a < q; ++a) {
            CHECK(f.pow(static_cast<Elem>(a), q) == a);
            if (a) CHECK(f.inv(f.inv(static_cast<Elem>(a))) == a);
        }
    }
}

TEST_CASE("generator has multiplicative order q-1") {
    for (int q : kPrimePowers) {
        const Field f(q);
        Elem x = 1;
        int order = 0;
        do {
            x = f.mul(x, f.generator());
            ++order;
        } while (x != 1);
        CHECK(order == q - 1);
    }
}

TEST_CASE("prime power split") {
    CHECK(prime_power_split(64) == std::pair<int, int>{2, 6});
    CHECK(prime_power_split(49) == std::pair<int, int>{7, 2});
    CHECK(prime_power_split(12) == std::pair<int, int>{0, 0});
    CHECK(is_prime(61));
    CHECK_FALSE(is_prime(1));
}
