#include "terai/solver.hpp"

#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "terai/oracles.hpp"

namespace terai {

std::vector<SolutionRecord> find_solutions(const Natural& b, const Natural& c,
                                           const Natural& y_max, const Natural& z_max) {
    if (b < 2 || c < 2) throw std::invalid_argument("find_solutions: b and c must be >= 2");
    if (gcd(b, c) != 1) throw std::invalid_argument("find_solutions: b and c must be coprime");
    if (y_max < 1 || z_max < 1)
        throw std::invalid_argument("find_solutions: bounds must be >= 1");
    std::vector<SolutionRecord> out;
    Natural c_pow = 1;
    for (Natural z = 1; z <= z_max; ++z) {
        c_pow *= c;
        Natural b_pow = 1;
        for (Natural y = 1; y <= y_max; ++y) {
            b_pow *= b;
            if (b_pow >= c_pow) break;
            auto x = as_perfect_square(c_pow - b_pow);
            if (x && *x >= 1) out.push_back({*x, y, z});
        }
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Natural pow_nat(const Natural& base, const Natural& exp) {
    Natural out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
    return out;
}

// A case-A row with k > 1 would be a nontrivial entry of the 2 z^k = y^2 + 1
// catalogue (only (239, 13, 4), which has even k); record the consultation
// and whether the row is consistent with it.
OracleConsultation consult_cohn_catalogue(const Instance& inst, const CaseScanRow& row) {
    OracleConsultation c;
    c.name = "cohn-catalogue";
    c.window = {{"k", row.k.get_str()}};
    c.hits = {"(y, z, k) = (" + pow_nat(inst.b, row.r).get_str() + ", " + inst.c.get_str() +
              ", " + row.k.get_str() + ")"};
    c.as_expected = false;  // odd k > 1 has no catalogued solution
    return c;
}

// An oracle-branch row is refuted through the consecutive-squares check on
// c^(q a'): absence is the expected outcome.
OracleConsultation consult_consecutive_squares(const Instance& inst, const Natural& a_prime) {
    OracleConsultation c;
    c.name = "consecutive-square-root";
    const Natural value = pow_nat(inst.c, inst.q * a_prime);
    c.window = {{"value", value.get_str()}};
    if (auto a = consecutive_square_root(value); a && *a >= 1) {
        c.hits.push_back(a->get_str());
        c.as_expected = false;
    }
    return c;
}

}  // namespace

VerificationReport verify_instance(const Instance& inst, const Bounds& bounds) {
    const auto start = Clock::now();
    VerificationReport report;
    report.instance = inst;
    report.bounds = bounds;
    report.hypotheses = check_hypotheses(inst);
    if (!report.hypotheses.qualifies)
        throw std::invalid_argument("verify_instance: instance does not satisfy the hypotheses");

    std::string failure;
    auto fail = [&failure](const std::string& step) {
        if (failure.empty()) failure = step;
    };

    report.parity = parity_certificate(inst);
    if (!report.parity.valid) fail("parity certificate invalid");

    report.case_scan = scan_cases(inst, bounds.r_max, bounds.k_max);
    for (const CaseScanRow& row : report.case_scan) {
        const bool at_origin = row.r == 1 && row.k == 1;
        if (row.case_a_holds) {
            fail("case A held at (" + row.r.get_str() + ", " + row.k.get_str() + ")");
            if (row.k > 1) report.oracles.push_back(consult_cohn_catalogue(inst, row));
        }
        if (at_origin && !row.case_b_holds) fail("case B missing at (1, 1)");
        if (!at_origin && row.case_b_holds) {
            fail("case B held at (" + row.r.get_str() + ", " + row.k.get_str() + ")");
            auto verdict = k_divisibility_conclusion(inst, row.r, row.k);
            if (verdict.branch == KDivisibilityVerdict::Branch::OracleBranch)
                report.oracles.push_back(consult_consecutive_squares(inst, *verdict.a_prime));
        }
    }

    report.solutions = find_solutions(inst.b, inst.c, bounds.y_max, bounds.z_max);
    const SolutionRecord expected{inst.a, 2, 2};
    if (report.solutions.size() != 1 || !(report.solutions.front() == expected))
        fail("solution set differs from {(2mn, 2, 2)}");
    for (const SolutionRecord& sol : report.solutions) {
        if (mpz_odd_p(sol.y.get_mpz_t()) || mpz_odd_p(sol.z.get_mpz_t())) {
            report.trace_verdicts.push_back("inconsistent: odd exponent");
            fail("solution with odd exponent despite parity certificate");
            continue;
        }
        try {
            DescentTrace trace = descent_trace(inst, sol.x, sol.y, sol.z);
            report.trace_verdicts.push_back(trace.verdict);
            if (!trace.theorem_consistent()) fail("descent trace: " + trace.verdict);
        } catch (const std::exception& e) {
            report.trace_verdicts.push_back(std::string("error: ") + e.what());
            fail(std::string("descent trace raised: ") + e.what());
        }
    }

    for (const OracleConsultation& c : report.oracles)
        if (!c.as_expected) fail("oracle consultation " + c.name + " off catalogue");

    if (!failure.empty())
        report.verdict = "VIOLATION: " + failure;
    else if (bounds.below_defaults())
        report.verdict = "inconclusive";
    else
        report.verdict = "theorem-consistent";
    report.elapsed_ms = ms_since(start);
    return report;
}

std::vector<VerificationReport> verify_range(const Natural& m_max, const Bounds& bounds,
                                             unsigned jobs) {
    const std::vector<Instance> instances = scan_instances(m_max);
    std::vector<VerificationReport> reports(instances.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < instances.size(); ++i)
            reports[i] = verify_instance(instances[i], bounds);
        return reports;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> workers;
    const unsigned worker_count = std::min<std::size_t>(jobs, instances.size());
    for (unsigned w = 0; w < worker_count; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < instances.size(); i += worker_count)
                    reports[i] = verify_instance(instances[i], bounds);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    if (error) std::rethrow_exception(error);
    return reports;
}

}  // namespace terai
