#include "terai/arith.hpp"

#include <array>
#include <stdexcept>

namespace terai {

namespace {

unsigned long mod_ui(const Int& x, unsigned long m) {
    return mpz_fdiv_ui(x.get_mpz_t(), m);
}

}  // namespace

JacobiValue jacobi(const Int& a_in, const Int& n_in) {
    if (n_in < 1 || mpz_even_p(n_in.get_mpz_t()))
        throw std::invalid_argument("jacobi: modulus must be odd and positive");
    Int a = a_in;
    Int n = n_in;
    int sign = 1;
    if (a < 0) {
        a = -a;
        if (mod_ui(n, 4) == 3) sign = -sign;  // (-1/n)
    }
    a %= n;
    while (a != 0) {
        while (mpz_even_p(a.get_mpz_t())) {
            a /= 2;
            unsigned long n8 = mod_ui(n, 8);
            if (n8 == 3 || n8 == 5) sign = -sign;  // (2/n)
        }
        std::swap(a, n);
        if (mod_ui(a, 4) == 3 && mod_ui(n, 4) == 3) sign = -sign;  // reciprocity
        a %= n;
    }
    return n == 1 ? sign : 0;
}

Natural isqrt(const Natural& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative input");
    if (n < 2) return n;
    size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    Natural x = Natural(1) << static_cast<unsigned long>((bits + 1) / 2);
    // x >= sqrt(n) here; Newton iterates decrease strictly until the first
    // non-decrease, at which point x == floor(sqrt(n)).
    Natural y = (x + n / x) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

std::optional<Natural> as_perfect_square(const Natural& n) {
    if (n < 0) return std::nullopt;
    static const auto square_mod_64 = [] {
        std::array<bool, 64> t{};
        for (int i = 0; i < 32; ++i) t[static_cast<size_t>(i * i % 64)] = true;
        return t;
    }();
    if (!square_mod_64[mod_ui(n, 64)]) return std::nullopt;
    Natural r = isqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

const Natural& deterministic_primality_bound() {
    // Smallest composite passing strong tests to all of 2..41
    // (Sorenson-Webster); everything below is decided exactly.
    static const Natural bound("3317044064679887385961981");
    return bound;
}

namespace {

constexpr unsigned long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool strong_probable_prime(const Natural& n, const Natural& base, const Natural& odd_part,
                           unsigned long two_exp) {
    Natural x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), odd_part.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < two_exp; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

gmp_randclass& prng() {
    static thread_local gmp_randclass rng(gmp_randinit_mt);
    static thread_local bool seeded = (rng.seed(0x5eedUL), true);
    (void)seeded;
    return rng;
}

}  // namespace

bool is_prime(const Natural& n, int extra_rounds) {
    if (n < 2) return false;
    for (unsigned long p : kWitnesses) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    Natural odd_part = n - 1;
    unsigned long two_exp = mpz_scan1(odd_part.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(odd_part.get_mpz_t(), odd_part.get_mpz_t(), two_exp);
    for (unsigned long p : kWitnesses)
        if (!strong_probable_prime(n, Natural(p), odd_part, two_exp)) return false;
    if (n < deterministic_primality_bound()) return true;
    for (int i = 0; i < extra_rounds; ++i) {
        Natural base = prng().get_z_range(n - 3) + 2;
        if (!strong_probable_prime(n, base, odd_part, two_exp)) return false;
    }
    return true;
}

std::optional<Natural> power_exponent_of(const Natural& n, const Natural& base) {
    if (base < 2) throw std::invalid_argument("power_exponent_of: base must be >= 2");
    if (n < 1) return std::nullopt;
    Natural rest = n;
    Natural k = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), base.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), base.get_mpz_t());
        ++k;
    }
    if (rest == 1) return k;
    return std::nullopt;
}

}  // namespace terai
