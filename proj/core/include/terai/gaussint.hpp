#pragma once

#include <utility>
#include <vector>

#include "terai/arith.hpp"

namespace terai {

/// Exact complex integer with multiplicative norm re^2 + im^2.
struct GaussianInt {
    Int re{0};
    Int im{0};

    GaussianInt() = default;
    GaussianInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

    GaussianInt conj() const { return {re, -im}; }
    Natural norm() const { return re * re + im * im; }

    friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianInt operator-(const GaussianInt& a) { return {-a.re, -a.im}; }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianInt& a, const GaussianInt& b) = default;
};

/// z^k by binary powering, exact.
GaussianInt gpow(GaussianInt z, Natural k);

/// Primitive representation n = g^2 + h^2 with even h (g is then odd).
struct TwoSquares {
    Natural g;  // odd part
    Natural h;  // even part
    Natural n;  // g*g + h*h

    friend bool operator==(const TwoSquares& a, const TwoSquares& b) {
        return a.g == b.g && a.h == b.h && a.n == b.n;
    }
};

/// All primitive two-square representations of n with even second
/// component, ordered by ascending even part. Exhaustive up to 10^6;
/// above that, prime n goes through Cornacchia with a randomized root of
/// -1 and composite n stays exhaustive up to 10^12. Throws
/// std::invalid_argument when n < 2 or when a composite n is too large to
/// enumerate completely.
std::vector<TwoSquares> two_square_decompositions(const Natural& n);

/// The two halved combinations of (g+hi)^k against the units (1 -+ i).
/// For the decomposition matching a descent instance these are the signed
/// candidates for p^r and q^r; the sign ambiguity is the caller's to
/// resolve by absolute value.
struct PqValues {
    Int p_val;
    Int q_val;
};

/// Evaluates both combinations exactly and checks that the imaginary parts
/// cancel. Throws std::invalid_argument for even k and std::logic_error if
/// a residual imaginary part survives.
PqValues eval_pq_identities(const Natural& g, const Natural& h, const Natural& k);

}  // namespace terai
