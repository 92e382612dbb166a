#include "terai/gaussint.hpp"

#include <algorithm>
#include <stdexcept>

namespace terai {

GaussianInt gpow(GaussianInt z, Natural k) {
    if (k < 0) throw std::invalid_argument("gpow: negative exponent");
    GaussianInt acc{1, 0};
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = acc * z;
        k /= 2;
        if (k > 0) z = z * z;
    }
    return acc;
}

namespace {

const unsigned long kExhaustiveLimit = 1000000;

std::vector<TwoSquares> decompose_exhaustive(const Natural& n) {
    std::vector<TwoSquares> out;
    for (Natural h = 2; h * h < n; h += 2) {
        auto g = as_perfect_square(n - h * h);
        if (g && *g >= 1 && gcd(*g, h) == 1) out.push_back({*g, h, n});
    }
    return out;
}

gmp_randclass& prng() {
    static thread_local gmp_randclass rng(gmp_randinit_mt);
    static thread_local bool seeded = (rng.seed(0xc0c0aUL), true);
    (void)seeded;
    return rng;
}

// Euclidean descent from a root of -1 mod n; yields the primitive
// representation attached to that root, if the descent closes.
std::optional<TwoSquares> cornacchia_from_root(const Natural& n, Natural root) {
    if (2 * root > n) root = n - root;
    Natural a = n;
    Natural b = root;
    const Natural limit = isqrt(n);
    while (b > limit) {
        Natural t = a % b;
        a = b;
        b = t;
    }
    auto other = as_perfect_square(n - b * b);
    if (!other) return std::nullopt;
    Natural g = b;
    Natural h = *other;
    if (mpz_even_p(g.get_mpz_t())) std::swap(g, h);
    if (g < 1 || h < 1 || mpz_odd_p(h.get_mpz_t())) return std::nullopt;
    if (gcd(g, h) != 1) return std::nullopt;
    return TwoSquares{g, h, n};
}

// For prime n = 1 mod 4 a random base raises to a root of -1 with
// probability 1/2, and the lone root pair carries the unique primitive
// representation.
std::vector<TwoSquares> decompose_prime_cornacchia(const Natural& n) {
    const Natural exponent = (n - 1) / 4;
    for (int i = 0; i < 64; ++i) {
        Natural base = prng().get_z_range(n - 3) + 2;
        Natural t;
        mpz_powm(t.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), n.get_mpz_t());
        if (t * t % n != n - 1) continue;
        if (auto dec = cornacchia_from_root(n, std::min(Natural(t), Natural(n - t))))
            return {*dec};
        break;
    }
    throw std::logic_error("two_square_decompositions: root search failed on a prime modulus");
}

}  // namespace

std::vector<TwoSquares> two_square_decompositions(const Natural& n) {
    if (n < 2) throw std::invalid_argument("two_square_decompositions: n must be >= 2");
    if (n <= kExhaustiveLimit) return decompose_exhaustive(n);
    if (mpz_fdiv_ui(n.get_mpz_t(), 4) != 1) return {};  // odd g, even h needs n = 1 mod 4
    if (is_prime(n)) return decompose_prime_cornacchia(n);
    // A composite has one representation per root pair of -1 and those are
    // out of reach without factoring, so enumeration stays the only
    // complete route; past ~10^12 it stops being interactive.
    if (n <= Natural(kExhaustiveLimit) * kExhaustiveLimit) return decompose_exhaustive(n);
    throw std::invalid_argument(
        "two_square_decompositions: composite modulus exceeds the complete-enumeration range");
}

PqValues eval_pq_identities(const Natural& g, const Natural& h, const Natural& k) {
    if (k < 1 || mpz_even_p(k.get_mpz_t()))
        throw std::invalid_argument("eval_pq_identities: k must be odd and positive");
    const GaussianInt alpha_k = gpow(GaussianInt{g, h}, k);
    const GaussianInt beta_k = alpha_k.conj();
    const GaussianInt one_minus_i{1, -1};
    const GaussianInt one_plus_i{1, 1};
    const GaussianInt twice_p = alpha_k * one_minus_i + beta_k * one_plus_i;
    const GaussianInt twice_q = alpha_k * one_plus_i + beta_k * one_minus_i;
    if (twice_p.im != 0 || twice_q.im != 0)
        throw std::logic_error("eval_pq_identities: imaginary part did not cancel");
    return {twice_p.re / 2, twice_q.re / 2};
}

}  // namespace terai
