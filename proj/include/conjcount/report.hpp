#pragma once

#include <json.hpp>

#include "conjcount/counting.hpp"
#include "conjcount/oracle.hpp"

namespace conjcount {

// Outcome of the numeric cross-check; errors are captured, not thrown, so
// reports can carry a partial result.
struct OracleRun {
  bool ok = false;
  bool unknown = false;  // gray-zone single classification or solver failure
  std::string error;
  std::vector<NumericSolution> solutions;
  OracleCount counts;
};

OracleRun run_oracle(const std::vector<GenPoly>& generators,
                     const GroebnerBasis& G, const OracleTolerances& tol = {});

// JSON pieces. Exact values are always serialized as strings ("p/q+r/si");
// floats appear only under "oracle" and "timings".
nlohmann::json matrix_to_json(const GMatrix& m);
nlohmann::json monomials_to_json(const std::vector<Monomial>& ms, VarStyle style);
nlohmann::json signature_to_json(const Signature& s);
nlohmann::json oracle_to_json(const OracleRun& run);

struct Timings {
  double groebner_ms = 0.0;
  double form_ms = 0.0;
  double signature_ms = 0.0;
  double oracle_ms = 0.0;
  double total_ms = 0.0;
};

// The full `count` report document. All keys are present and stable; count
// is a number or the strings "infinite" / "unknown".
nlohmann::json count_report_to_json(const RootCountReport& report,
                                    const std::vector<std::string>& system,
                                    std::size_t num_vars,
                                    const OracleRun* oracle,
                                    const Timings& timings);

}  // namespace conjcount
