#pragma once

// Brute-force Jacobi oracle, independent of terai::jacobi: factor the
// modulus by trial division and multiply Legendre symbols obtained by
// enumerating squares. Only meant for small moduli.

#include <map>
#include <set>
#include <vector>

namespace testsupport {

inline int legendre_by_enumeration(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    std::set<long> squares;
    for (long s = 1; s < p; ++s) squares.insert(s * s % p);
    return squares.count(a) ? 1 : -1;
}

inline std::vector<long> factor_by_trial_division(long n) {
    std::vector<long> factors;
    for (long d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            factors.push_back(d);
            n /= d;
        }
    if (n > 1) factors.push_back(n);
    return factors;
}

inline int jacobi_oracle(long a, long n) {
    int result = 1;
    for (long p : factor_by_trial_division(n)) result *= legendre_by_enumeration(a, p);
    return result;  // empty product for n = 1
}

}  // namespace testsupport
