#pragma once

#include <gmpxx.h>

#include <optional>

namespace terai {

/// Arbitrary-precision signed integer, the scalar carrier for everything.
using Int = mpz_class;

/// Same carrier, nonnegative by contract of the operations that use it.
using Natural = mpz_class;

/// Jacobi symbol value, one of {-1, 0, +1}.
using JacobiValue = int;

/// Jacobi symbol (a/n) for odd n >= 1, computed by binary reciprocity so n
/// never has to be factored. A negative a is normalized through the (-1/n)
/// rule. Throws std::invalid_argument when n is even or nonpositive.
JacobiValue jacobi(const Int& a, const Int& n);

/// floor(sqrt(n)) by integer Newton iteration. The iterate starts at
/// 2^ceil(bits/2) >= sqrt(n) and decreases strictly until the first
/// non-decrease, which is the floor root; no floating point is involved.
Natural isqrt(const Natural& n);

/// r with r*r == n when n is a perfect square, empty otherwise.
std::optional<Natural> as_perfect_square(const Natural& n);

/// Largest bound below which the fixed Miller-Rabin witness set
/// {2,...,41} is a proven primality certificate (3.3e24).
const Natural& deterministic_primality_bound();

/// Miller-Rabin primality. Deterministic below
/// deterministic_primality_bound(); above it the fixed witnesses are
/// followed by `extra_rounds` random ones.
bool is_prime(const Natural& n, int extra_rounds = 24);

/// k with base^k == n when n is a pure power of base (k = 0 for n = 1).
/// Throws std::invalid_argument when base < 2.
std::optional<Natural> power_exponent_of(const Natural& n, const Natural& base);

}  // namespace terai
