#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "qr_oracle.hpp"
#include "terai/arith.hpp"

using namespace terai;

TEST_CASE("jacobi matches the classic table entries") {
    CHECK(jacobi(2, 5) == -1);
    CHECK(jacobi(21, 29) == -1);
    CHECK(jacobi(1, 9) == 1);
    CHECK(jacobi(6, 3) == 0);
    CHECK(jacobi(0, 3) == 0);
    CHECK(jacobi(0, 1) == 1);
    CHECK(jacobi(-1, 5) == 1);
    CHECK(jacobi(-1, 7) == -1);
}

TEST_CASE("jacobi rejects even or nonpositive moduli") {
    CHECK_THROWS_AS(jacobi(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(jacobi(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(jacobi(3, -7), std::invalid_argument);
}

TEST_CASE("jacobi is fully multiplicative in the numerator") {
    for (long n = 1; n <= 201; n += 2) {
        std::vector<int> table(n);
        for (long a = 0; a < n; ++a) table[a] = jacobi(a, n);
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b) REQUIRE(table[a * b % n] == table[a] * table[b]);
    }
}

TEST_CASE("jacobi agrees with the quadratic-residue oracle") {
    for (long n = 1; n <= 201; n += 2)
        for (long a = -n; a < n; ++a)
            REQUIRE(jacobi(a, n) == testsupport::jacobi_oracle(a, n));
}

TEST_CASE("jacobi supplements") {
    for (long n = 1; n <= 201; n += 2) {
        CHECK(jacobi(2, n) == ((n % 8 == 3 || n % 8 == 5) ? -1 : 1));
        CHECK(jacobi(-1, n) == (n % 4 == 1 ? 1 : -1));
    }
}

TEST_CASE("isqrt on known values") {
    CHECK(isqrt(1369) == 37);
    CHECK(isqrt(2) == 1);
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(1) == 1);
    CHECK(isqrt(Natural("99999999999999999999")) == Natural("9999999999"));
}

TEST_CASE("isqrt brackets randomized inputs up to 10^100") {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(20240811UL);
    const Natural limit = Natural(10) * Natural("1" + std::string(99, '0'));
    for (int i = 0; i < 300; ++i) {
        Natural n = rng.get_z_range(limit);
        Natural r = isqrt(n);
        REQUIRE(r * r <= n);
        REQUIRE((r + 1) * (r + 1) > n);
    }
}

TEST_CASE("perfect-square detection") {
    CHECK(as_perfect_square(144) == Natural(12));
    CHECK(!as_perfect_square(148));
    CHECK(as_perfect_square(0) == Natural(0));
    for (unsigned long k = 0; k <= 10000; ++k) {
        REQUIRE(as_perfect_square(Natural(k) * k) == Natural(k));
    }
    CHECK(!as_perfect_square(Natural("99999999999999999998")));
}

TEST_CASE("primality on known values") {
    CHECK(is_prime(7));
    CHECK(!is_prime(85));
    CHECK(is_prime(239));
    CHECK(!is_prime(0));
    CHECK(!is_prime(1));
    CHECK(is_prime(2));
    CHECK(!is_prime(561));  // Carmichael
    CHECK(is_prime(Natural("170141183460469231731687303715884105727")));  // 2^127 - 1
    CHECK(!is_prime(Natural("170141183460469231731687303715884105725")));
}

TEST_CASE("primality agrees with trial division below 5000") {
    for (long n = 0; n < 5000; ++n) {
        bool by_trial = n >= 2;
        for (long d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                by_trial = false;
                break;
            }
        REQUIRE(is_prime(n) == by_trial);
    }
}

TEST_CASE("operations stay exact at 10^300 scale") {
    const Natural root = Natural("1" + std::string(150, '0')) + 12345;  // 10^150 + 12345
    CHECK(as_perfect_square(root * root) == root);
    CHECK(!as_perfect_square(root * root + 1));
    CHECK(isqrt(root * root + 1) == root);
    CHECK(isqrt(root * root - 1) == root - 1);

    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(3UL);
    const Natural scale = Natural("1" + std::string(300, '0'));
    for (int i = 0; i < 20; ++i) {
        Natural n = rng.get_z_range(scale);
        if (mpz_even_p(n.get_mpz_t())) ++n;
        Natural a = rng.get_z_range(n);
        Natural b = rng.get_z_range(n);
        REQUIRE(jacobi(a * b % n, n) == jacobi(a, n) * jacobi(b, n));
    }
}

TEST_CASE("pure-power exponent extraction") {
    CHECK(power_exponent_of(841, 29) == Natural(2));
    CHECK(!power_exponent_of(59189, 29));
    CHECK(power_exponent_of(1, 29) == Natural(0));
    CHECK(power_exponent_of(Natural("420707233300201"), 29) == Natural(10));
    CHECK(!power_exponent_of(0, 2));
    CHECK_THROWS_AS(power_exponent_of(8, 1), std::invalid_argument);
}
