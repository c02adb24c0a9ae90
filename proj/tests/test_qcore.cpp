#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcong/qcore.hpp"

using namespace qcong;

namespace {

IntPoly P(std::initializer_list<long> coeffs) {
    std::vector<mpz_class> c;
    for (long v : coeffs) c.emplace_back(v);
    return IntPoly(std::move(c));
}

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

TEST_CASE("q_number") {
    CHECK(q_number(0).is_zero());
    CHECK(q_number(1) == IntPoly::one());
    CHECK(q_number(3) == P({1, 1, 1}));
    CHECK(eval_int(q_number(5), 1) == 5);
}

TEST_CASE("q_factorial") {
    CHECK(q_factorial(0) == IntPoly::one());
    CHECK(q_factorial(1) == IntPoly::one());
    CHECK(q_factorial(2) == P({1, 1}));
    CHECK(q_factorial(3) == P({1, 2, 2, 1}));
}

TEST_CASE("q_binomial basics") {
    CHECK(q_binomial(7, 0) == IntPoly::one());
    CHECK(q_binomial(7, 7) == IntPoly::one());
    CHECK(q_binomial(4, 2) == P({1, 1, 2, 1, 1}));
    CHECK(q_binomial(5, 2) == P({1, 1, 2, 2, 2, 1, 1}));
    CHECK_THROWS_AS(q_binomial(3, 4), InvalidRange);

    SUBCASE("matches factorial quotient definition") {
        for (unsigned long n = 0; n <= 12; ++n) {
            for (unsigned long k = 0; k <= n; ++k) {
                CHECK(q_binomial(n, k) ==
                      exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k)));
            }
        }
    }
}

TEST_CASE("q_binomial_pascal oracle") {
    CHECK(q_binomial_pascal(4, 2) == P({1, 1, 2, 1, 1}));
    CHECK(q_binomial_pascal(9, 9) == IntPoly::one());
    CHECK(q_binomial_pascal(1, 0) == IntPoly::one());
    CHECK_THROWS_AS(q_binomial_pascal(2, 3), InvalidRange);

    SUBCASE("oracle equivalence up to n = 40") {
        for (unsigned long n = 0; n <= 40; ++n) {
            for (unsigned long k = 0; k <= n; ++k) {
                CHECK(q_binomial(n, k) == q_binomial_pascal(n, k));
            }
        }
    }
}

TEST_CASE("q_binomial structure") {
    for (unsigned long n = 1; n <= 25; ++n) {
        for (unsigned long k = 0; k <= n; ++k) {
            const IntPoly b = q_binomial(n, k);
            CHECK(b == q_binomial(n, n - k));                      // symmetry
            CHECK(*b.degree() == k * (n - k));                     // degree
            CHECK(eval_int(b, 1) == binom(n, k));                  // q = 1
            for (const auto& c : b.coefficients()) CHECK(c > 0);   // positivity
        }
    }
}

TEST_CASE("q_binomial_base") {
    CHECK(q_binomial_base(2, 1, 4) == P({1, 0, 0, 0, 1}));
    CHECK(q_binomial_base(9, 0, 3) == IntPoly::one());
    CHECK(q_binomial_base(3, 1, 2) == P({1, 0, 1, 0, 1}));
    CHECK_THROWS_AS(q_binomial_base(3, 1, 0), InvalidParameter);
}

TEST_CASE("q_shifted_factorial") {
    CHECK(q_shifted_factorial(4, 0) == IntPoly::one());
    CHECK(q_shifted_factorial(3, 1) == P({1, 0, 0, -1}));
    CHECK(q_shifted_factorial(1, 2) == P({1, -1, -1, 1}));

    SUBCASE("(q; q)_n = (1-q)^n [n]!_q") {
        for (unsigned long n = 0; n <= 15; ++n) {
            CHECK(q_shifted_factorial(1, n) == pow(P({1, -1}), n) * q_factorial(n));
        }
    }
    SUBCASE("(q^a; q)_n (q; q)_{a-1} = (q; q)_{a+n-1}") {
        for (unsigned long a = 1; a <= 8; ++a) {
            for (unsigned long n = 0; n <= 8; ++n) {
                CHECK(q_shifted_factorial(a, n) * q_shifted_factorial(1, a - 1) ==
                      q_shifted_factorial(1, a + n - 1));
            }
        }
    }
}

TEST_CASE("pivot identity [p]_q binom((m+1)p, p)_q = [(m+1)p]_q binom((m+1)p-1, p-1)_q") {
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul}) {
        for (unsigned long m = 1; m <= 3; ++m) {
            const unsigned long n = (m + 1) * p;
            CHECK(q_number(p) * q_binomial(n, p) == q_number(n) * q_binomial(n - 1, p - 1));
        }
    }
}
