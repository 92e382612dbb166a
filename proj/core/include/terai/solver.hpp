#pragma once

#include <string>
#include <utility>
#include <vector>

#include "terai/descent.hpp"
#include "terai/sieve.hpp"
#include "terai/triples.hpp"

namespace terai {

/// One solution of x^2 + b^y = c^z.
struct SolutionRecord {
    Natural x, y, z;

    friend bool operator==(const SolutionRecord& a, const SolutionRecord& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

/// Exhaustive grid search: every (x, y, z) with 1 <= y <= y_max,
/// 1 <= z <= z_max and x >= 1, ordered by (z, y). Powers advance
/// incrementally, and each z row stops as soon as b^y >= c^z. The search is
/// hypothesis-agnostic: any coprime b, c >= 2 are accepted.
/// Throws std::invalid_argument on gcd(b, c) > 1 or bounds < 1.
std::vector<SolutionRecord> find_solutions(const Natural& b, const Natural& c,
                                           const Natural& y_max, const Natural& z_max);

/// Search bounds for one verification run. The defaults keep an instance in
/// the seconds range while leaving the magnitudes near c^40.
struct Bounds {
    Natural y_max{40};
    Natural z_max{40};
    Natural r_max{15};
    Natural k_max{15};

    bool below_defaults() const {
        return y_max < 40 || z_max < 40 || r_max < 15 || k_max < 15;
    }
};

/// Record of one oracle consultation made while closing a verdict.
struct OracleConsultation {
    std::string name;
    std::vector<std::pair<std::string, std::string>> window;  // label -> decimal value
    std::vector<std::string> hits;
    bool as_expected = true;
};

/// Aggregate outcome of the full pipeline on one instance.
struct VerificationReport {
    Instance instance;
    HypothesisReport hypotheses;
    ParityCertificate parity;
    std::vector<CaseScanRow> case_scan;
    std::vector<SolutionRecord> solutions;
    std::vector<std::string> trace_verdicts;  // one per solution
    std::vector<OracleConsultation> oracles;
    Bounds bounds;
    std::string verdict;  // "theorem-consistent" | "VIOLATION: ..." | "inconclusive"
    long long elapsed_ms = 0;

    bool theorem_consistent() const { return verdict == "theorem-consistent"; }
};

/// Pipeline: hypotheses -> parity certificate -> case scan -> solution
/// search -> descent replay of each solution, with oracle consultations for
/// any anomalous case rows. Any failed step becomes a VIOLATION verdict;
/// bounds below the defaults demote a clean run to "inconclusive".
/// Throws std::invalid_argument when the instance does not qualify.
VerificationReport verify_instance(const Instance& inst, const Bounds& bounds = {});

/// verify_instance over scan_instances(m_max), in deterministic (m, n)
/// order. `jobs` > 1 fans instances out across threads; the merged order is
/// unchanged.
std::vector<VerificationReport> verify_range(const Natural& m_max, const Bounds& bounds = {},
                                             unsigned jobs = 1);

}  // namespace terai
