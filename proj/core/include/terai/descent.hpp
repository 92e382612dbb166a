#pragma once

#include <optional>
#include <string>
#include <vector>

#include "terai/gaussint.hpp"
#include "terai/triples.hpp"

namespace terai {

/// Legs of the primitive triple (x, b^r, c^k): x = 2uv, b^r = u^2 - v^2,
/// c^k = u^2 + v^2.
struct Legs {
    Natural u;
    Natural v;
};

/// Recovers (u, v) from a solution of x^2 + b^(2r) = c^(2k):
/// u = sqrt((c^k + b^r)/2), v = sqrt((c^k - b^r)/2).
/// Throws std::invalid_argument when (x, r, k) is not a solution and
/// std::domain_error when either half fails to be a perfect square (no
/// primitive-triple structure).
Legs legs_from_solution(const Instance& inst, const Natural& x, const Natural& r,
                        const Natural& k);

/// Case A is the factorization branch u-v = 1, u+v = (pq)^r, equivalent to
/// 2c^k = (pq)^(2r) + 1. Case B is u+v = p^r, u-v = q^r, equivalent to
/// p^(2r) + q^(2r) = 2c^k.
bool case_a_check(const Instance& inst, const Natural& r, const Natural& k);
bool case_b_check(const Instance& inst, const Natural& r, const Natural& k);

struct CaseScanRow {
    Natural r;
    Natural k;
    bool case_a_holds = false;
    bool case_b_holds = false;
};

/// Both case checks over the odd (r, k) grid, sorted lexicographically.
/// The theorem predicts case A never holds and case B only at (1, 1).
std::vector<CaseScanRow> scan_cases(const Instance& inst, const Natural& r_max,
                                    const Natural& k_max);

/// Divisibility match of one decomposition of c against the instance.
struct FilterMatch {
    int epsilon;  // +1 when k = 1 mod 4, -1 when k = 3 mod 4
    Natural t1;   // |g + epsilon*h| = p^t1
    Natural t2;   // |g - epsilon*h| = q^t2
};

/// Keeps a decomposition only when |g + eps*h| and |g - eps*h| are pure
/// powers of p and q, with eps oriented by k mod 4. Spurious decompositions
/// of a composite c fail this and come back empty.
std::optional<FilterMatch> divisibility_filter(const Instance& inst, const TwoSquares& dec,
                                               const Natural& r, const Natural& k);

/// The alternating power sum A = sum_{j=0}^{k-1} (alpha^2)^(k-1-j) (-beta^2)^j
/// reduced mod b, against k * 2^(k-1) * (mn)^(k-1) mod b. The two agree up to
/// an overall sign of i^(k-1), so the match is recorded sign-insensitively
/// and the observed sign is kept.
struct ASumCheck {
    Int a_sum;            // exact value of A (rational integer)
    Natural a_mod_b;      // A reduced into [0, b)
    Natural rhs_mod_b;    // k * 2^(k-1) * (mn)^(k-1) reduced into [0, b)
    bool match_up_to_sign = false;
    int sign = 0;         // +1: A = +rhs, -1: A = -rhs (mod b), 0: no match
};

/// Throws std::invalid_argument for even k and std::logic_error if A picks
/// up an imaginary part.
ASumCheck a_sum_congruence(const Instance& inst, const TwoSquares& dec, const Natural& k);

/// Endgame classification of an odd (r, k) cell.
struct KDivisibilityVerdict {
    enum class Branch { BaseCase, Contradiction, OracleBranch };
    Branch branch;
    std::optional<Natural> a_prime;  // k / (pq), oracle branch only
    std::string description;
};

/// r = 1 or k = 1 ends in the base case; otherwise b | k is forced, and a
/// surviving k = pq * a' hands the equation 2 (c^(q a'))^p = p^(2r) + q^(2r)
/// to the oracles for refutation.
KDivisibilityVerdict k_divisibility_conclusion(const Instance& inst, const Natural& r,
                                               const Natural& k);

struct IdentityCheck {
    std::string name;
    bool passed = false;
};

enum class CaseTag { A, B, None };

/// Full replay of the descent for one concrete solution.
struct DescentTrace {
    Instance instance;
    Natural x, y, z;
    Natural r, k;
    Legs legs;
    CaseTag case_tag = CaseTag::None;
    std::optional<TwoSquares> decomposition;  // unique filter survivor, if any
    std::size_t surviving_decompositions = 0;
    int epsilon = 0;
    Natural t1, t2;
    std::vector<IdentityCheck> identity_checks;
    std::string verdict;  // "theorem-consistent" or "inconsistent: <step>"

    bool theorem_consistent() const { return verdict == "theorem-consistent"; }
};

/// Runs legs -> case split -> decomposition filter -> unit identities ->
/// g*h = mn in order, recording every check. Throws std::invalid_argument
/// when (x, y, z) is not an even-exponent solution for the instance.
DescentTrace descent_trace(const Instance& inst, const Natural& x, const Natural& y,
                           const Natural& z);

}  // namespace terai
