#pragma once

#include <optional>
#include <vector>

#include "terai/arith.hpp"

namespace terai {

/// Hit of 2 z^k = y^2 + 1.
struct CohnHit {
    Natural y, z, k;

    friend bool operator==(const CohnHit& a, const CohnHit& b) {
        return a.y == b.y && a.z == b.z && a.k == b.k;
    }
};

/// All (y, z, k) with 2 z^k = y^2 + 1, 3 <= k <= k_max, 1 <= z <= z_max,
/// y >= 1, ordered by (k, z). The catalogued solutions are the trivial
/// family y = z = 1 and (239, 13, 4); `include_trivial` drops the family
/// when false. Throws std::invalid_argument when k_max < 3 or z_max < 1.
std::vector<CohnHit> cohn_search(const Natural& k_max, const Natural& z_max,
                                 bool include_trivial = true);

/// a with n = a^2 + (a+1)^2, i.e. 2n-1 an odd square; a = 0 only for n = 1.
std::optional<Natural> consecutive_square_root(const Natural& n);

/// Hit of y^q = a^2 + (a+1)^2.
struct CorollaryCHit {
    Natural y, q, a;

    friend bool operator==(const CorollaryCHit& x, const CorollaryCHit& y_) {
        return x.y == y_.y && x.q == y_.q && x.a == y_.a;
    }
};

/// All hits with 2 <= y <= y_max, a >= 1, q drawn from q_list; expected
/// empty for odd q >= 3 (the even-exponent control 13^4 = 119^2 + 120^2
/// shows why the parity restriction matters). Throws std::invalid_argument
/// for any even q or q < 3.
std::vector<CorollaryCHit> corollary_c_search(const Natural& y_max,
                                              const std::vector<Natural>& q_list);

/// Hit of x^2 + p^(2m) = 2 y^n.
struct LemmaL2Hit {
    Natural x, y, m;

    friend bool operator==(const LemmaL2Hit& a, const LemmaL2Hit& b) {
        return a.x == b.x && a.y == b.y && a.m == b.m;
    }
};

/// All (x, y, m) with x^2 + p^(2m) = 2 y^n, gcd(x, y) = 1, y <= y_max,
/// m <= m_max, where y is not a sum of two consecutive positive squares;
/// expected empty. Throws std::invalid_argument when p or n is not prime
/// or n <= 3.
std::vector<LemmaL2Hit> lemma_l2_search(const Natural& p, const Natural& n,
                                        const Natural& m_max, const Natural& y_max);

}  // namespace terai
