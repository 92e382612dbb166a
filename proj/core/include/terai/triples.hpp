#pragma once

#include <vector>

#include "terai/arith.hpp"

namespace terai {

/// Parametrized primitive triple a = 2mn, b = m^2-n^2, c = m^2+n^2 together
/// with the two odd legs p = m+n and q = m-n of b = pq.
struct Instance {
    Natural m, n;
    Natural a, b, c;
    Natural p, q;
};

/// One flag per theorem hypothesis; `qualifies` is their conjunction.
struct HypothesisReport {
    bool coprime = false;
    bool opposite_parity = false;
    bool c_mod8_is_5 = false;
    bool p_prime = false;
    bool q_prime = false;
    bool qualifies = false;
};

/// Builds the instance from coprime m > n >= 1 of opposite parity.
/// Throws std::invalid_argument naming the violated precondition.
Instance make_instance(const Natural& m, const Natural& n);

/// Checks every hypothesis independently. q = 1 counts as not prime, which
/// drops the degenerate m = n+1 cases unless m-n is a genuine prime.
HypothesisReport check_hypotheses(const Instance& inst);

/// All qualifying instances with m <= m_max, ordered by (m, n). Only
/// opposite-parity n are visited; the unit tests cross-check this against a
/// plain double loop.
std::vector<Instance> scan_instances(const Natural& m_max);

}  // namespace terai
