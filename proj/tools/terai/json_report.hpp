#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "terai/descent.hpp"
#include "terai/oracles.hpp"
#include "terai/sieve.hpp"
#include "terai/solver.hpp"
#include "terai/triples.hpp"

namespace terai::cli {

// Reports use insertion-ordered JSON with every integer rendered as a
// decimal string, so emitted files re-serialize byte-identically and never
// lose precision past 64 bits.
using Json = nlohmann::ordered_json;

inline Json dec(const Int& value) { return value.get_str(); }
inline Json dec(long long value) { return std::to_string(value); }

Json instance_json(const Instance& inst);
Json hypotheses_json(const HypothesisReport& report);
Json parity_json(const ParityCertificate& cert);
Json case_scan_json(const std::vector<CaseScanRow>& rows);
Json solutions_json(const std::vector<SolutionRecord>& solutions);
Json oracles_json(const std::vector<OracleConsultation>& consultations);
Json trace_json(const DescentTrace& trace);

/// Verification payload in schema order (instance .. elapsed_ms), without
/// the version/config envelope.
Json verification_json(const VerificationReport& report);

/// Canonical serialization: 2-space indent plus trailing newline.
std::string dump_report(const Json& report);

}  // namespace terai::cli
