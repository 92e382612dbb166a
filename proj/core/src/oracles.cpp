#include "terai/oracles.hpp"

#include <stdexcept>

namespace terai {

std::vector<CohnHit> cohn_search(const Natural& k_max, const Natural& z_max,
                                 bool include_trivial) {
    if (k_max < 3) throw std::invalid_argument("cohn_search: k_max must be >= 3");
    if (z_max < 1) throw std::invalid_argument("cohn_search: z_max must be >= 1");
    std::vector<CohnHit> hits;
    for (Natural k = 3; k <= k_max; ++k) {
        for (Natural z = 1; z <= z_max; ++z) {
            Natural zk;
            mpz_pow_ui(zk.get_mpz_t(), z.get_mpz_t(), k.get_ui());
            auto y = as_perfect_square(2 * zk - 1);
            if (!y || *y < 1) continue;
            if (!include_trivial && *y == 1 && z == 1) continue;
            hits.push_back({*y, z, k});
        }
    }
    return hits;
}

std::optional<Natural> consecutive_square_root(const Natural& n) {
    if (n < 1) return std::nullopt;
    auto s = as_perfect_square(2 * n - 1);
    if (!s || mpz_even_p(s->get_mpz_t())) return std::nullopt;
    return Natural((*s - 1) / 2);
}

std::vector<CorollaryCHit> corollary_c_search(const Natural& y_max,
                                              const std::vector<Natural>& q_list) {
    for (const Natural& q : q_list)
        if (q < 3 || mpz_even_p(q.get_mpz_t()))
            throw std::invalid_argument("corollary_c_search: exponents must be odd and >= 3");
    std::vector<CorollaryCHit> hits;
    for (const Natural& q : q_list) {
        for (Natural y = 2; y <= y_max; ++y) {
            Natural yq;
            mpz_pow_ui(yq.get_mpz_t(), y.get_mpz_t(), q.get_ui());
            auto a = consecutive_square_root(yq);
            if (a && *a >= 1) hits.push_back({y, q, *a});
        }
    }
    return hits;
}

std::vector<LemmaL2Hit> lemma_l2_search(const Natural& p, const Natural& n,
                                        const Natural& m_max, const Natural& y_max) {
    if (!is_prime(p)) throw std::invalid_argument("lemma_l2_search: p must be prime");
    if (!is_prime(n)) throw std::invalid_argument("lemma_l2_search: n must be prime");
    if (n <= 3) throw std::invalid_argument("lemma_l2_search: n must exceed 3");
    if (m_max < 1 || y_max < 1)
        throw std::invalid_argument("lemma_l2_search: bounds must be >= 1");
    std::vector<LemmaL2Hit> hits;
    for (Natural m = 1; m <= m_max; ++m) {
        Natural p2m;
        mpz_pow_ui(p2m.get_mpz_t(), p.get_mpz_t(), Natural(2 * m).get_ui());
        for (Natural y = 1; y <= y_max; ++y) {
            Natural yn;
            mpz_pow_ui(yn.get_mpz_t(), y.get_mpz_t(), n.get_ui());
            Natural rhs = 2 * yn;
            if (rhs <= p2m) continue;
            auto x = as_perfect_square(rhs - p2m);
            if (!x || *x < 1 || gcd(*x, y) != 1) continue;
            auto a = consecutive_square_root(y);
            if (a && *a >= 1) continue;  // lemma hypothesis excludes such y
            hits.push_back({*x, y, m});
        }
    }
    return hits;
}

}  // namespace terai
