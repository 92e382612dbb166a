#include "terai/json_report.hpp"

namespace terai::cli {

Json instance_json(const Instance& inst) {
    Json j;
    j["m"] = dec(inst.m);
    j["n"] = dec(inst.n);
    j["a"] = dec(inst.a);
    j["b"] = dec(inst.b);
    j["c"] = dec(inst.c);
    j["p"] = dec(inst.p);
    j["q"] = dec(inst.q);
    return j;
}

Json hypotheses_json(const HypothesisReport& report) {
    Json j;
    j["coprime"] = report.coprime;
    j["opposite_parity"] = report.opposite_parity;
    j["c_mod8_is_5"] = report.c_mod8_is_5;
    j["p_prime"] = report.p_prime;
    j["q_prime"] = report.q_prime;
    j["qualifies"] = report.qualifies;
    return j;
}

Json parity_json(const ParityCertificate& cert) {
    Json symbols;
    symbols["(-1/c)"] = dec(cert.j_minus1_c);
    symbols["(b/c)"] = dec(cert.j_b_c);
    symbols["(c/b)"] = dec(cert.j_c_b);
    symbols["(2/c)"] = dec(cert.j_2_c);
    symbols["(2/b)"] = dec(cert.j_2_b);

    Json j;
    j["symbols"] = std::move(symbols);
    j["valid"] = cert.valid;
    if (cert.valid) {
        Json conclusions;
        conclusions["y"] = "even";
        conclusions["z"] = "even";
        conclusions["r"] = "odd";
        conclusions["k"] = "odd";
        conclusions["note"] =
            "r/k parities are conditional on the leg equations "
            "2u^2 = b^r + c^k and 2v^2 = c^k - b^r";
        j["conclusions"] = std::move(conclusions);
    } else {
        j["deviations"] = cert.deviations;
    }
    return j;
}

Json case_scan_json(const std::vector<CaseScanRow>& rows) {
    Json j = Json::array();
    for (const CaseScanRow& row : rows)
        j.push_back(Json::array({dec(row.r), dec(row.k), row.case_a_holds, row.case_b_holds}));
    return j;
}

Json solutions_json(const std::vector<SolutionRecord>& solutions) {
    Json j = Json::array();
    for (const SolutionRecord& sol : solutions)
        j.push_back(Json::array({dec(sol.x), dec(sol.y), dec(sol.z)}));
    return j;
}

Json oracles_json(const std::vector<OracleConsultation>& consultations) {
    Json j = Json::array();
    for (const OracleConsultation& c : consultations) {
        Json entry;
        entry["name"] = c.name;
        Json window;
        for (const auto& [label, value] : c.window) window[label] = value;
        entry["window"] = std::move(window);
        entry["hits"] = c.hits;
        entry["as_expected"] = c.as_expected;
        j.push_back(std::move(entry));
    }
    return j;
}

Json trace_json(const DescentTrace& trace) {
    Json j;
    j["x"] = dec(trace.x);
    j["y"] = dec(trace.y);
    j["z"] = dec(trace.z);
    j["r"] = dec(trace.r);
    j["k"] = dec(trace.k);
    j["legs"] = Json{{"u", dec(trace.legs.u)}, {"v", dec(trace.legs.v)}};
    switch (trace.case_tag) {
        case CaseTag::A: j["case"] = "A"; break;
        case CaseTag::B: j["case"] = "B"; break;
        case CaseTag::None: j["case"] = "none"; break;
    }
    if (trace.decomposition) {
        j["decomposition"] =
            Json{{"g", dec(trace.decomposition->g)}, {"h", dec(trace.decomposition->h)}};
        j["epsilon"] = dec(trace.epsilon);
        j["t1"] = dec(trace.t1);
        j["t2"] = dec(trace.t2);
    }
    j["surviving_decompositions"] = dec(static_cast<long long>(trace.surviving_decompositions));
    Json checks = Json::array();
    for (const IdentityCheck& check : trace.identity_checks)
        checks.push_back(Json{{"name", check.name}, {"passed", check.passed}});
    j["identity_checks"] = std::move(checks);
    j["verdict"] = trace.verdict;
    return j;
}

Json verification_json(const VerificationReport& report) {
    Json j;
    j["instance"] = instance_json(report.instance);
    j["hypotheses"] = hypotheses_json(report.hypotheses);
    j["parity"] = parity_json(report.parity);
    j["case_scan"] = case_scan_json(report.case_scan);
    j["solutions"] = solutions_json(report.solutions);
    j["trace_verdicts"] = report.trace_verdicts;
    j["oracles"] = oracles_json(report.oracles);
    j["verdict"] = report.verdict;
    j["elapsed_ms"] = dec(report.elapsed_ms);
    return j;
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace terai::cli
