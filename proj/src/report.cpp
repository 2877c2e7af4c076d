#include "conjcount/report.hpp"

namespace conjcount {

using nlohmann::json;

OracleRun run_oracle(const std::vector<GenPoly>& generators,
                     const GroebnerBasis& G, const OracleTolerances& tol) {
  OracleRun run;
  try {
    run.solutions = solve_numeric(generators, G, tol);
    run.counts = oracle_count(run.solutions, tol);
    run.ok = true;
    run.unknown = run.counts.any_uncertain;
  } catch (const std::exception& e) {
    run.error = e.what();
    run.unknown = true;
  }
  return run;
}

json matrix_to_json(const GMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json monomials_to_json(const std::vector<Monomial>& ms, VarStyle style) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(monomial_to_string(m, style));
  return out;
}

json signature_to_json(const Signature& s) {
  return json{{"pos", s.n_pos}, {"neg", s.n_neg}, {"zero", s.n_zero}};
}

namespace {

json complex_to_json(const std::complex<double>& c) {
  return json::array({c.real(), c.imag()});
}

}  // namespace

json oracle_to_json(const OracleRun& run) {
  json out;
  if (!run.ok) {
    out["count"] = "unknown";
    out["error"] = run.error;
    return out;
  }
  out["count"] = run.unknown ? json("unknown") : json(run.counts.singles);
  out["pairs"] = run.counts.pairs;
  out["total_distinct"] = run.counts.total_distinct;
  json sols = json::array();
  for (const auto& s : run.solutions) {
    json zs = json::array(), ws = json::array();
    for (const auto& v : s.z) zs.push_back(complex_to_json(v));
    for (const auto& v : s.w) ws.push_back(complex_to_json(v));
    sols.push_back(json{{"z", std::move(zs)},
                        {"w", std::move(ws)},
                        {"residual", s.residual},
                        {"is_single", s.is_single}});
  }
  out["solutions"] = std::move(sols);
  return out;
}

json count_report_to_json(const RootCountReport& report,
                          const std::vector<std::string>& system,
                          std::size_t num_vars, const OracleRun* oracle,
                          const Timings& timings) {
  json out;
  out["system"] = system;
  out["num_vars"] = num_vars;
  out["flags"] = report.flags;

  switch (report.kind) {
    case CountKind::Finite: out["count"] = report.count; break;
    case CountKind::Infinite: out["count"] = "infinite"; break;
    case CountKind::Unknown: out["count"] = "unknown"; break;
  }

  out["quotient_dim"] = report.quotient_dim;
  out["rank"] = report.rank;
  out["signature"] = signature_to_json(report.signature);
  if (report.form) {
    out["basis"] = monomials_to_json(report.form->basis_labels, VarStyle::ZW);
    out["form_matrix"] = matrix_to_json(report.form->entries);
  } else {
    out["basis"] = json::array();
    out["form_matrix"] = json::array();
  }
  if (report.bound) out["bound"] = *report.bound;
  if (report.minors) {
    json ms = json::array();
    for (const auto& m : *report.minors) ms.push_back(m.str());
    out["minors"] = std::move(ms);
  }

  if (oracle) {
    json o = oracle_to_json(*oracle);
    if (report.kind == CountKind::Finite && oracle->ok && !oracle->unknown) {
      o["agree"] = (oracle->counts.singles ==
                    static_cast<std::size_t>(std::max(0L, report.count))) &&
                   (oracle->counts.total_distinct == report.rank);
    } else {
      o["agree"] = false;
    }
    out["oracle"] = std::move(o);
  }

  out["timings"] = json{{"groebner_ms", timings.groebner_ms},
                        {"form_ms", timings.form_ms},
                        {"signature_ms", timings.signature_ms},
                        {"oracle_ms", timings.oracle_ms},
                        {"total_ms", timings.total_ms}};
  return out;
}

}  // namespace conjcount
