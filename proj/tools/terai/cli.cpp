#include "terai/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "terai/json_report.hpp"
#include "terai/version.hpp"

namespace terai::cli {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Natural parse_nat(const std::string& text, const std::string& flag) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument(flag + ": expected a nonnegative decimal integer, got '" +
                                    text + "'");
    return Natural(text);
}

struct RunConfig {
    std::string subcommand;
    std::vector<std::pair<std::string, std::string>> params;
    std::string format = "json";
    std::string out_path;
    unsigned jobs = 1;
};

Json config_json(const RunConfig& cfg) {
    Json j;
    j["subcommand"] = cfg.subcommand;
    for (const auto& [key, value] : cfg.params) j[key] = value;
    j["format"] = cfg.format;
    j["jobs"] = std::to_string(cfg.jobs);
    if (!cfg.out_path.empty()) j["out"] = cfg.out_path;
    return j;
}

Json envelope(const RunConfig& cfg) {
    Json j;
    j["version"] = kVersion;
    j["config"] = config_json(cfg);
    return j;
}

// --out is resolved against TERAI_OUT_DIR when relative; empty goes to
// the attached stream.
void emit(const std::string& text, const RunConfig& cfg, std::ostream& out) {
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::string path = cfg.out_path;
    if (path.front() != '/') {
        if (const char* dir = std::getenv("TERAI_OUT_DIR"); dir && *dir)
            path = std::string(dir) + "/" + path;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output path: " + path);
    file << text;
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i];
    }
    return line + "\n";
}

std::string render_instance_text(const Instance& inst) {
    std::ostringstream os;
    os << "instance (m, n) = (" << inst.m << ", " << inst.n << "): a = " << inst.a
       << ", b = " << inst.b << ", c = " << inst.c << ", p = " << inst.p << ", q = " << inst.q;
    return os.str();
}

std::string render_parity_text(const ParityCertificate& cert) {
    std::ostringstream os;
    os << "parity certificate: " << (cert.valid ? "valid" : "INVALID") << "; symbols (-1/c)="
       << cert.j_minus1_c << " (b/c)=" << cert.j_b_c << " (c/b)=" << cert.j_c_b
       << " (2/c)=" << cert.j_2_c << " (2/b)=" << cert.j_2_b;
    if (cert.valid)
        os << "; y even, z even, r odd, k odd";
    else
        for (const std::string& name : cert.deviations) os << "; deviated: " << name;
    return os.str();
}

std::string render_verification_text(const VerificationReport& report) {
    std::ostringstream os;
    os << render_instance_text(report.instance) << "\n";
    os << "hypotheses: " << (report.hypotheses.qualifies ? "qualifies" : "does not qualify")
       << "\n";
    os << render_parity_text(report.parity) << "\n";
    std::size_t case_a = 0, case_b_off_origin = 0;
    for (const CaseScanRow& row : report.case_scan) {
        if (row.case_a_holds) ++case_a;
        if (row.case_b_holds && !(row.r == 1 && row.k == 1)) ++case_b_off_origin;
    }
    os << "case scan: " << report.case_scan.size() << " odd cells, case A " << case_a
       << " hits, case B off-origin " << case_b_off_origin << " hits\n";
    os << "solutions:";
    for (const SolutionRecord& sol : report.solutions)
        os << " (" << sol.x << ", " << sol.y << ", " << sol.z << ")";
    os << "\n";
    for (const std::string& verdict : report.trace_verdicts) os << "descent: " << verdict << "\n";
    os << "verdict: " << report.verdict << " [" << report.elapsed_ms << " ms]\n";
    return os.str();
}

int finish(const RunConfig& cfg, const Json& report, const std::string& text_form,
           const std::string& csv_form, std::ostream& out, std::ostream& err, int code) {
    if (cfg.format == "json") {
        emit(dump_report(report), cfg, out);
    } else if (cfg.format == "text") {
        emit(text_form, cfg, out);
    } else {
        if (csv_form.empty()) {
            err << "error: csv output is only available for flat tables (scan, solve, oracle)\n";
            return 2;
        }
        emit(csv_form, cfg, out);
    }
    return code;
}

// ----- subcommand drivers ----------------------------------------------

int run_scan(const RunConfig& cfg, const Natural& m_max, std::ostream& out, std::ostream& err) {
    const auto start = Clock::now();
    auto instances = scan_instances(m_max);

    Json report = envelope(cfg);
    Json list = Json::array();
    for (const Instance& inst : instances) list.push_back(instance_json(inst));
    report["instances"] = std::move(list);
    report["count"] = dec(static_cast<long long>(instances.size()));
    report["elapsed_ms"] = dec(ms_since(start));

    std::string csv = csv_line({"m", "n", "a", "b", "c", "p", "q"});
    std::string text;
    for (const Instance& inst : instances) {
        csv += csv_line({inst.m.get_str(), inst.n.get_str(), inst.a.get_str(), inst.b.get_str(),
                         inst.c.get_str(), inst.p.get_str(), inst.q.get_str()});
        text += render_instance_text(inst) + "\n";
    }
    text += std::to_string(instances.size()) + " qualifying instances with m <= " +
            m_max.get_str() + "\n";
    return finish(cfg, report, text, csv, out, err, 0);
}

int run_verify(const RunConfig& cfg, const Instance& inst, const Bounds& bounds,
               std::ostream& out, std::ostream& err) {
    const VerificationReport result = verify_instance(inst, bounds);
    Json report = envelope(cfg);
    report.update(verification_json(result));
    const int code = result.theorem_consistent() || result.verdict == "inconclusive" ? 0 : 1;
    return finish(cfg, report, render_verification_text(result), "", out, err, code);
}

int run_verify_range(const RunConfig& cfg, const Natural& m_max, const Bounds& bounds,
                     std::ostream& out, std::ostream& err) {
    const auto start = Clock::now();
    auto results = verify_range(m_max, bounds, cfg.jobs);

    std::size_t consistent = 0, violations = 0;
    std::string text;
    Json reports = Json::array();
    for (const VerificationReport& result : results) {
        reports.push_back(verification_json(result));
        text += render_verification_text(result) + "\n";
        if (result.theorem_consistent()) ++consistent;
        if (result.verdict.rfind("VIOLATION", 0) == 0) ++violations;
    }
    std::string verdict = "theorem-consistent";
    if (violations > 0)
        verdict = "VIOLATION: " + std::to_string(violations) + " instance(s) failed";
    else if (consistent != results.size())
        verdict = "inconclusive";

    Json report = envelope(cfg);
    report["reports"] = std::move(reports);
    Json summary;
    summary["instances"] = dec(static_cast<long long>(results.size()));
    summary["theorem_consistent"] = dec(static_cast<long long>(consistent));
    summary["violations"] = dec(static_cast<long long>(violations));
    report["summary"] = std::move(summary);
    report["verdict"] = verdict;
    report["elapsed_ms"] = dec(ms_since(start));

    text += "range verdict: " + verdict + "\n";
    return finish(cfg, report, text, "", out, err, violations > 0 ? 1 : 0);
}

int run_solve(const RunConfig& cfg, const Natural& b, const Natural& c, const Natural& y_max,
              const Natural& z_max, std::ostream& out, std::ostream& err) {
    const auto start = Clock::now();
    auto solutions = find_solutions(b, c, y_max, z_max);

    Json report = envelope(cfg);
    report["solutions"] = solutions_json(solutions);
    report["elapsed_ms"] = dec(ms_since(start));

    std::string csv = csv_line({"x", "y", "z"});
    std::string text = "solutions of x^2 + " + b.get_str() + "^y = " + c.get_str() + "^z:\n";
    for (const SolutionRecord& sol : solutions) {
        csv += csv_line({sol.x.get_str(), sol.y.get_str(), sol.z.get_str()});
        text += "  (" + sol.x.get_str() + ", " + sol.y.get_str() + ", " + sol.z.get_str() + ")\n";
    }
    if (solutions.empty()) text += "  none within the window\n";
    return finish(cfg, report, text, csv, out, err, 0);
}

int run_sieve(const RunConfig& cfg, const Instance& inst, std::ostream& out, std::ostream& err) {
    const auto start = Clock::now();
    const HypothesisReport hypotheses = check_hypotheses(inst);
    const ParityCertificate cert = parity_certificate(inst);

    Json report = envelope(cfg);
    report["instance"] = instance_json(inst);
    report["hypotheses"] = hypotheses_json(hypotheses);
    report["parity"] = parity_json(cert);
    report["elapsed_ms"] = dec(ms_since(start));

    std::string text = render_instance_text(inst) + "\n" + render_parity_text(cert) + "\n";
    // an invalid certificate means the instance misses a hypothesis
    const int code = cert.valid ? 0 : 2;
    if (!cert.valid)
        err << "error: instance does not satisfy the hypotheses; certificate invalid\n";
    return finish(cfg, report, text, "", out, err, code);
}

int run_trace(const RunConfig& cfg, const Instance& inst, const Natural& x, const Natural& y,
              const Natural& z, std::ostream& out, std::ostream& err) {
    const auto start = Clock::now();
    const DescentTrace trace = descent_trace(inst, x, y, z);

    Json report = envelope(cfg);
    report["instance"] = instance_json(inst);
    report["trace"] = trace_json(trace);
    report["verdict"] = trace.verdict;
    report["elapsed_ms"] = dec(ms_since(start));

    std::string text = render_instance_text(inst) + "\n";
    text += "solution (" + x.get_str() + ", " + y.get_str() + ", " + z.get_str() + "), legs (" +
            trace.legs.u.get_str() + ", " + trace.legs.v.get_str() + ")\n";
    for (const IdentityCheck& check : trace.identity_checks)
        text += std::string(check.passed ? "  [ok]   " : "  [FAIL] ") + check.name + "\n";
    text += "verdict: " + trace.verdict + "\n";
    return finish(cfg, report, text, "", out, err, trace.theorem_consistent() ? 0 : 1);
}

Json oracle_entry(const std::string& name,
                  std::vector<std::pair<std::string, std::string>> window, Json hits) {
    Json entry;
    entry["name"] = name;
    Json w;
    for (auto& [label, value] : window) w[label] = value;
    entry["window"] = std::move(w);
    entry["hits"] = std::move(hits);
    return entry;
}

int finish_oracle(const RunConfig& cfg, Json entry, bool as_expected, const std::string& text,
                  const std::string& csv, std::ostream& out, std::ostream& err, long long ms) {
    entry["as_expected"] = as_expected;
    Json report = envelope(cfg);
    report["oracles"] = Json::array({std::move(entry)});
    report["elapsed_ms"] = dec(ms);
    return finish(cfg, report, text, csv, out, err, as_expected ? 0 : 1);
}

int run_oracle_cohn(const RunConfig& cfg, const Natural& k_max, const Natural& z_max,
                    bool include_trivial, std::ostream& out, std::ostream& err) {
    const auto start = Clock::now();
    auto hits = cohn_search(k_max, z_max, include_trivial);

    bool as_expected = true;
    Json hits_json = Json::array();
    std::string csv = csv_line({"y", "z", "k"});
    std::string text = "hits of 2 z^k = y^2 + 1, 3 <= k <= " + k_max.get_str() +
                       ", z <= " + z_max.get_str() + ":\n";
    for (const CohnHit& hit : hits) {
        hits_json.push_back(Json::array({dec(hit.y), dec(hit.z), dec(hit.k)}));
        csv += csv_line({hit.y.get_str(), hit.z.get_str(), hit.k.get_str()});
        text += "  (y, z, k) = (" + hit.y.get_str() + ", " + hit.z.get_str() + ", " +
                hit.k.get_str() + ")\n";
        const bool trivial = hit.y == 1 && hit.z == 1;
        const bool sporadic = hit.y == 239 && hit.z == 13 && hit.k == 4;
        if (!trivial && !sporadic) as_expected = false;
    }
    text += as_expected ? "window matches the catalogue\n" : "UNEXPECTED hit off catalogue\n";
    Json entry = oracle_entry("cohn",
                              {{"k_max", k_max.get_str()},
                               {"z_max", z_max.get_str()},
                               {"include_trivial", include_trivial ? "true" : "false"}},
                              std::move(hits_json));
    return finish_oracle(cfg, std::move(entry), as_expected, text, csv, out, err,
                         ms_since(start));
}

int run_oracle_corollary_c(const RunConfig& cfg, const Natural& y_max,
                           const std::vector<Natural>& q_list, std::ostream& out,
                           std::ostream& err) {
    const auto start = Clock::now();
    auto hits = corollary_c_search(y_max, q_list);

    Json hits_json = Json::array();
    std::string csv = csv_line({"y", "q", "a"});
    std::string q_text;
    for (const Natural& q : q_list) q_text += (q_text.empty() ? "" : ",") + q.get_str();
    std::string text =
        "hits of y^q = a^2 + (a+1)^2, y <= " + y_max.get_str() + ", q in {" + q_text + "}:\n";
    for (const CorollaryCHit& hit : hits) {
        hits_json.push_back(Json::array({dec(hit.y), dec(hit.q), dec(hit.a)}));
        csv += csv_line({hit.y.get_str(), hit.q.get_str(), hit.a.get_str()});
        text += "  (y, q, a) = (" + hit.y.get_str() + ", " + hit.q.get_str() + ", " +
                hit.a.get_str() + ")\n";
    }
    const bool as_expected = hits.empty();
    text += as_expected ? "window is empty, as expected\n" : "UNEXPECTED hit\n";
    Json entry = oracle_entry("corollary-c", {{"y_max", y_max.get_str()}, {"q_list", q_text}},
                              std::move(hits_json));
    return finish_oracle(cfg, std::move(entry), as_expected, text, csv, out, err,
                         ms_since(start));
}

int run_oracle_lemma_l2(const RunConfig& cfg, const Natural& p, const Natural& n,
                        const Natural& m_max, const Natural& y_max, std::ostream& out,
                        std::ostream& err) {
    const auto start = Clock::now();
    auto hits = lemma_l2_search(p, n, m_max, y_max);

    Json hits_json = Json::array();
    std::string csv = csv_line({"x", "y", "m"});
    std::string text = "hits of x^2 + " + p.get_str() + "^2m = 2 y^" + n.get_str() +
                       ", m <= " + m_max.get_str() + ", y <= " + y_max.get_str() + ":\n";
    for (const LemmaL2Hit& hit : hits) {
        hits_json.push_back(Json::array({dec(hit.x), dec(hit.y), dec(hit.m)}));
        csv += csv_line({hit.x.get_str(), hit.y.get_str(), hit.m.get_str()});
        text += "  (x, y, m) = (" + hit.x.get_str() + ", " + hit.y.get_str() + ", " +
                hit.m.get_str() + ")\n";
    }
    const bool as_expected = hits.empty();
    text += as_expected ? "window is empty, as expected\n" : "UNEXPECTED hit\n";
    Json entry = oracle_entry("lemma-l2",
                              {{"p", p.get_str()},
                               {"n", n.get_str()},
                               {"m_max", m_max.get_str()},
                               {"y_max", y_max.get_str()}},
                              std::move(hits_json));
    return finish_oracle(cfg, std::move(entry), as_expected, text, csv, out, err,
                         ms_since(start));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"verification and search toolkit for x^2 + b^y = c^z over parametrized "
                 "Pythagorean triples"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    RunConfig cfg;
    std::string m_str, n_str, b_str, c_str, x_str, y_str, z_str, m_max_str;
    std::string y_max_str = "40", z_max_str = "40", r_max_str = "15", k_max_str = "15";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
        sub->add_option("--out", cfg.out_path,
                        "output path (relative paths resolve against TERAI_OUT_DIR)");
    };
    auto add_grid_bounds = [&](CLI::App* sub) {
        sub->add_option("--y-max", y_max_str, "exponent bound for y")->capture_default_str();
        sub->add_option("--z-max", z_max_str, "exponent bound for z")->capture_default_str();
    };
    auto add_case_bounds = [&](CLI::App* sub) {
        sub->add_option("--r-max", r_max_str, "odd case-grid bound for r")->capture_default_str();
        sub->add_option("--k-max", k_max_str, "odd case-grid bound for k")->capture_default_str();
    };

    CLI::App* scan = app.add_subcommand("scan", "list qualifying instances with m <= m-max");
    scan->add_option("--m-max", m_max_str, "upper bound on m")->required();
    add_common(scan);

    CLI::App* verify = app.add_subcommand("verify", "run the full pipeline on one instance");
    verify->add_option("--m", m_str)->required();
    verify->add_option("--n", n_str)->required();
    add_grid_bounds(verify);
    add_case_bounds(verify);
    add_common(verify);

    CLI::App* verify_range_cmd =
        app.add_subcommand("verify-range", "verify every qualifying instance with m <= m-max");
    verify_range_cmd->add_option("--m-max", m_max_str)->required();
    verify_range_cmd->add_option("--jobs", cfg.jobs, "worker threads")
        ->check(CLI::Range(1u, 1024u))
        ->capture_default_str();
    add_grid_bounds(verify_range_cmd);
    add_case_bounds(verify_range_cmd);
    add_common(verify_range_cmd);

    CLI::App* solve = app.add_subcommand("solve", "brute-force x^2 + b^y = c^z for coprime b, c");
    solve->add_option("--b", b_str)->required();
    solve->add_option("--c", c_str)->required();
    add_grid_bounds(solve);
    add_common(solve);

    CLI::App* sieve = app.add_subcommand("sieve", "emit the parity certificate of one instance");
    sieve->add_option("--m", m_str)->required();
    sieve->add_option("--n", n_str)->required();
    add_common(sieve);

    CLI::App* trace = app.add_subcommand("trace", "replay the descent for one solution");
    trace->add_option("--m", m_str)->required();
    trace->add_option("--n", n_str)->required();
    trace->add_option("--x", x_str)->required();
    trace->add_option("--y", y_str)->required();
    trace->add_option("--z", z_str)->required();
    add_common(trace);

    CLI::App* oracle = app.add_subcommand("oracle", "bounded searches for the cited results");
    oracle->require_subcommand(1);
    std::string cohn_k_max = "10", cohn_z_max = "1000";
    bool skip_trivial = false;
    CLI::App* cohn = oracle->add_subcommand("cohn", "catalogue 2 z^k = y^2 + 1");
    cohn->add_option("--k-max", cohn_k_max)->capture_default_str();
    cohn->add_option("--z-max", cohn_z_max)->capture_default_str();
    cohn->add_flag("--skip-trivial", skip_trivial, "drop the y = z = 1 family");
    add_common(cohn);

    std::string corc_y_max = "500";
    std::vector<std::string> corc_q = {"3", "5", "7", "9", "11"};
    CLI::App* corc = oracle->add_subcommand("corollary-c", "search y^q = a^2 + (a+1)^2");
    corc->add_option("--y-max", corc_y_max)->capture_default_str();
    corc->add_option("--q", corc_q, "odd exponents >= 3")->delimiter(',');
    add_common(corc);

    std::string l2_p = "7", l2_n = "5", l2_m_max = "4", l2_y_max = "200";
    CLI::App* l2 = oracle->add_subcommand("lemma-l2", "search x^2 + p^2m = 2 y^n");
    l2->add_option("--p", l2_p)->capture_default_str();
    l2->add_option("--n", l2_n)->capture_default_str();
    l2->add_option("--m-max", l2_m_max)->capture_default_str();
    l2->add_option("--y-max", l2_y_max)->capture_default_str();
    add_common(l2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (scan->parsed()) {
            cfg.subcommand = "scan";
            cfg.params = {{"m_max", m_max_str}};
            return run_scan(cfg, parse_nat(m_max_str, "--m-max"), out, err);
        }
        if (verify->parsed()) {
            cfg.subcommand = "verify";
            cfg.params = {{"m", m_str},         {"n", n_str},         {"y_max", y_max_str},
                          {"z_max", z_max_str}, {"r_max", r_max_str}, {"k_max", k_max_str}};
            Instance inst = make_instance(parse_nat(m_str, "--m"), parse_nat(n_str, "--n"));
            Bounds bounds{parse_nat(y_max_str, "--y-max"), parse_nat(z_max_str, "--z-max"),
                          parse_nat(r_max_str, "--r-max"), parse_nat(k_max_str, "--k-max")};
            return run_verify(cfg, inst, bounds, out, err);
        }
        if (verify_range_cmd->parsed()) {
            cfg.subcommand = "verify-range";
            cfg.params = {{"m_max", m_max_str},  {"y_max", y_max_str}, {"z_max", z_max_str},
                          {"r_max", r_max_str},  {"k_max", k_max_str}};
            Bounds bounds{parse_nat(y_max_str, "--y-max"), parse_nat(z_max_str, "--z-max"),
                          parse_nat(r_max_str, "--r-max"), parse_nat(k_max_str, "--k-max")};
            return run_verify_range(cfg, parse_nat(m_max_str, "--m-max"), bounds, out, err);
        }
        if (solve->parsed()) {
            cfg.subcommand = "solve";
            cfg.params = {{"b", b_str}, {"c", c_str}, {"y_max", y_max_str}, {"z_max", z_max_str}};
            return run_solve(cfg, parse_nat(b_str, "--b"), parse_nat(c_str, "--c"),
                             parse_nat(y_max_str, "--y-max"), parse_nat(z_max_str, "--z-max"),
                             out, err);
        }
        if (sieve->parsed()) {
            cfg.subcommand = "sieve";
            cfg.params = {{"m", m_str}, {"n", n_str}};
            Instance inst = make_instance(parse_nat(m_str, "--m"), parse_nat(n_str, "--n"));
            return run_sieve(cfg, inst, out, err);
        }
        if (trace->parsed()) {
            cfg.subcommand = "trace";
            cfg.params = {{"m", m_str}, {"n", n_str}, {"x", x_str}, {"y", y_str}, {"z", z_str}};
            Instance inst = make_instance(parse_nat(m_str, "--m"), parse_nat(n_str, "--n"));
            return run_trace(cfg, inst, parse_nat(x_str, "--x"), parse_nat(y_str, "--y"),
                             parse_nat(z_str, "--z"), out, err);
        }
        if (cohn->parsed()) {
            cfg.subcommand = "oracle cohn";
            cfg.params = {{"k_max", cohn_k_max},
                          {"z_max", cohn_z_max},
                          {"include_trivial", skip_trivial ? "false" : "true"}};
            return run_oracle_cohn(cfg, parse_nat(cohn_k_max, "--k-max"),
                                   parse_nat(cohn_z_max, "--z-max"), !skip_trivial, out, err);
        }
        if (corc->parsed()) {
            std::string joined;
            std::vector<Natural> q_list;
            for (const std::string& q : corc_q) {
                q_list.push_back(parse_nat(q, "--q"));
                joined += (joined.empty() ? "" : ",") + q;
            }
            cfg.subcommand = "oracle corollary-c";
            cfg.params = {{"y_max", corc_y_max}, {"q_list", joined}};
            return run_oracle_corollary_c(cfg, parse_nat(corc_y_max, "--y-max"), q_list, out,
                                          err);
        }
        if (l2->parsed()) {
            cfg.subcommand = "oracle lemma-l2";
            cfg.params = {{"p", l2_p}, {"n", l2_n}, {"m_max", l2_m_max}, {"y_max", l2_y_max}};
            return run_oracle_lemma_l2(cfg, parse_nat(l2_p, "--p"), parse_nat(l2_n, "--n"),
                                       parse_nat(l2_m_max, "--m-max"),
                                       parse_nat(l2_y_max, "--y-max"), out, err);
        }
        err << "error: no subcommand selected\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace terai::cli
