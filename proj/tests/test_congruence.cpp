#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcong/congruence.hpp"
#include "qcong/primes.hpp"
#include "qcong/qcore.hpp"

using namespace qcong;

namespace {

IntPoly P(std::initializer_list<long> coeffs) {
    std::vector<mpz_class> c;
    for (long v : coeffs) c.emplace_back(v);
    return IntPoly(std::move(c));
}

IntPoly random_poly(std::mt19937_64& rng, std::size_t max_deg, long coeff_bound) {
    std::uniform_int_distribution<std::size_t> dlen(0, max_deg + 1);
    std::uniform_int_distribution<long> dc(-coeff_bound, coeff_bound);
    std::vector<mpz_class> c(dlen(rng));
    for (auto& v : c) v = dc(rng);
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("modulus construction") {
    CHECK(modulus(3, 1).poly == P({1, 1, 1}));
    CHECK(modulus(2, 3).poly == P({1, 3, 3, 1}));
    CHECK(modulus(5, 1).poly == P({1, 1, 1, 1, 1}));
    const QModulus M = modulus(7, 3);
    CHECK(*M.poly.degree() == 3 * 6);
    CHECK(M.poly.leading_coefficient() == 1);
    CHECK_THROWS_AS(modulus(1, 1), InvalidParameter);
    CHECK_THROWS_AS(modulus(5, 0), InvalidParameter);
}

TEST_CASE("reduce") {
    const QModulus M3 = modulus(3, 1);
    CHECK(reduce(IntPoly::monomial(1, 3), M3) == IntPoly::one());
    CHECK(reduce(M3.poly, M3).is_zero());
    CHECK(reduce(P({1, 1}), modulus(5, 1)) == P({1, 1}));
}

TEST_CASE("congruent") {
    const QModulus M3 = modulus(3, 1);
    const IntPoly f = P({2, -1, 3, 7});
    CHECK(congruent(f, f, M3));
    CHECK(congruent(IntPoly::monomial(1, 3), IntPoly::one(), M3));
    CHECK(!congruent(P({0, 1}), IntPoly::one(), M3));
}

TEST_CASE("reduce is idempotent") {
    std::mt19937_64 rng(10);
    const QModulus M = modulus(7, 2);
    for (int iter = 0; iter < 100; ++iter) {
        const IntPoly f = random_poly(rng, 100, 1000);
        CHECK(reduce(reduce(f, M), M) == reduce(f, M));
    }
}

TEST_CASE("congruence is a ring congruence") {
    std::mt19937_64 rng(11);
    const QModulus M = modulus(5, 2);
    for (int iter = 0; iter < 100; ++iter) {
        const IntPoly f1 = random_poly(rng, 40, 1000);
        const IntPoly f2 = random_poly(rng, 40, 1000);
        const IntPoly g1 = f1 + M.poly * random_poly(rng, 10, 1000);
        const IntPoly g2 = f2 + M.poly * random_poly(rng, 10, 1000);
        REQUIRE(congruent(f1, g1, M));
        REQUIRE(congruent(f2, g2, M));
        CHECK(congruent(f1 + f2, g1 + g2, M));
        CHECK(congruent(f1 * f2, g1 * g2, M));
    }
}

TEST_CASE("power compatibility") {
    std::mt19937_64 rng(12);
    for (int iter = 0; iter < 50; ++iter) {
        const IntPoly f = random_poly(rng, 30, 1000);
        const IntPoly g = f + modulus(5, 3).poly * random_poly(rng, 10, 1000);
        for (unsigned long j = 1; j <= 3; ++j) {
            CHECK(congruent(f, g, modulus(5, j)));
        }
    }
}

TEST_CASE("value divisibility is necessary") {
    // necessary, not sufficient: a cheap integer screen of poly congruence
    std::mt19937_64 rng(13);
    const QModulus M = modulus(7, 2);
    for (int iter = 0; iter < 50; ++iter) {
        const IntPoly f = random_poly(rng, 40, 1000);
        const IntPoly g = f + M.poly * random_poly(rng, 15, 1000);
        REQUIRE(congruent(f, g, M));
        for (long x : {2, 3, 10}) {
            const mpz_class mv = eval_int(M.poly, x);
            CHECK((eval_int(f, x) - eval_int(g, x)) % mv == 0);
        }
    }
}

TEST_CASE("reduce_oracle basics") {
    const QModulus M = modulus(5, 2);
    CHECK(reduce_oracle(IntPoly{}, M).is_zero());
    CHECK(reduce_oracle(M.poly, M).is_zero());
    std::mt19937_64 rng(14);
    SUBCASE("constructed round trip") {
        for (int iter = 0; iter < 100; ++iter) {
            const IntPoly h = random_poly(rng, 20, 1000);
            const IntPoly r = random_poly(rng, *M.poly.degree() - 1, 1000);
            CHECK(reduce_oracle(M.poly * h + r, M) == r);
        }
    }
}

TEST_CASE("reduce matches reduce_oracle on 1000 random instances") {
    std::mt19937_64 rng(15);
    std::uniform_int_distribution<int> dk(1, 3);
    const auto ps = primes_in_range(2, 13);
    std::uniform_int_distribution<std::size_t> dp(0, ps.size() - 1);
    for (int iter = 0; iter < 1000; ++iter) {
        const QModulus M = modulus(ps[dp(rng)], dk(rng));
        const IntPoly f = random_poly(rng, 200, 1000000);
        CHECK(reduce(f, M) == reduce_oracle(f, M));
    }
}

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(!is_prime(1));
    CHECK(!is_prime(0));
    CHECK(!is_prime(91));
    CHECK(is_prime(199));
    CHECK(!is_prime(561));          // Carmichael
    CHECK(is_prime(1000003));
    CHECK(primes_in_range(24, 28).empty());
    CHECK(primes_in_range(3, 13) == std::vector<std::uint64_t>{3, 5, 7, 11, 13});
}
