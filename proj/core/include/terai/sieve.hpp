#pragma once

#include <string>
#include <vector>

#include "terai/triples.hpp"

namespace terai {

/// The five Jacobi symbols of the exponent-parity argument, plus the
/// conclusions they force for any solution of x^2 + b^y = c^z:
///
///   (-1/c) = +1 and (b/c) = -1  force  y = 2r even   (x^2 = -b^y mod c)
///   (c/b) = -1                  forces z = 2k even   (x^2 = c^z  mod b)
///   (2/c) = -1                  forces r odd         (2u^2 = b^r mod c)
///   (2/b) = -1                  forces k odd         (2v^2 = c^k mod b)
///
/// The r/k conclusions presuppose the leg equations 2u^2 = b^r + c^k and
/// 2v^2 = c^k - b^r of the descent.
struct ParityCertificate {
    JacobiValue j_minus1_c = 0;
    JacobiValue j_b_c = 0;
    JacobiValue j_c_b = 0;
    JacobiValue j_2_c = 0;
    JacobiValue j_2_b = 0;
    bool valid = false;                    // all five match (+1, -1, -1, -1, -1)
    std::vector<std::string> deviations;   // names of symbols breaking the pattern
};

/// Evaluates the five symbols numerically. For a qualifying instance the
/// certificate is always valid; an invalid one identifies which symbol
/// deviated and therefore which hypothesis the instance misses.
ParityCertificate parity_certificate(const Instance& inst);

}  // namespace terai
