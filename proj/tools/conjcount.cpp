// Command-line front end: parses polynomial systems with conjugated
// variables, counts their solutions through the exact Hermitian trace-form
// pipeline, and emits JSON reports. See README.md for usage.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "conjcount/parser.hpp"
#include "conjcount/report.hpp"

using nlohmann::json;
using namespace conjcount;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfiniteOrUnknown = 2;

double now_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

OracleTolerances tolerances_from_env() {
  OracleTolerances tol;
  if (const char* s = std::getenv("CONJCOUNT_TOL_SCALE")) {
    try {
      double v = std::stod(s);
      if (v > 0) tol.scale = v;
    } catch (...) {
      // ignore malformed values, keep the default
    }
  }
  return tol;
}

std::string read_input(const std::string& file, std::vector<std::string>& exprs) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open file: " + file);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  std::string joined;
  for (const auto& e : exprs) {
    if (!joined.empty()) joined += ";";
    joined += e;
  }
  return joined;
}

void emit_error(const std::string& kind, const std::string& message) {
  json err{{"error", {{"kind", kind}, {"message", message}}}};
  std::cout << err.dump(2) << "\n";
}

std::string pretty_matrix(const GMatrix& m, const std::vector<Monomial>& labels,
                          VarStyle style) {
  std::vector<std::vector<std::string>> cells(m.dim());
  std::vector<std::size_t> widths(m.dim() + 1, 0);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    names.push_back(i < labels.size() ? monomial_to_string(labels[i], style) : "");
    widths[0] = std::max(widths[0], names.back().size());
  }
  for (std::size_t i = 0; i < m.dim(); ++i) {
    cells[i].resize(m.dim());
    for (std::size_t j = 0; j < m.dim(); ++j) {
      cells[i][j] = m.at(i, j).str();
      widths[j + 1] = std::max(widths[j + 1], cells[i][j].size());
    }
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << "  " << names[i] << std::string(widths[0] - names[i].size(), ' ')
       << " |";
    for (std::size_t j = 0; j < m.dim(); ++j)
      os << " " << std::string(widths[j + 1] - cells[i][j].size(), ' ')
         << cells[i][j];
    os << "\n";
  }
  return os.str();
}

std::vector<std::string> system_strings(const ConjSystem& sys) {
  std::vector<std::string> out;
  for (const auto& p : sys.polys) out.push_back(to_input_string(p));
  return out;
}

int cmd_count(const std::string& text, const std::string& xi_text,
              bool with_oracle, bool with_minors, bool pretty) {
  auto t_start = std::chrono::steady_clock::now();
  ConjSystem sys = parse_system(text);

  GenPoly xi = GenPoly::constant(sys.num_vars, 1);
  bool has_xi = !xi_text.empty();
  if (has_xi) {
    GenPoly parsed = parse_poly(xi_text);
    if (parsed.num_vars() != sys.num_vars)
      throw ArityError("xi uses a different number of variables than the system");
    xi = parsed;
  }

  StageTimes stage;
  CountOptions options;
  options.with_minors = with_minors;
  options.times = &stage;
  RootCountReport report = count_roots(sys, has_xi ? &xi : nullptr, options);

  Timings timings;
  timings.groebner_ms = stage.groebner_ms;
  timings.form_ms = stage.form_ms;
  timings.signature_ms = stage.signature_ms;

  OracleRun oracle;
  bool oracle_ran = false;
  if (with_oracle && report.kind == CountKind::Finite && report.groebner) {
    auto t0 = std::chrono::steady_clock::now();
    oracle = run_oracle(report.ideal_generators, *report.groebner,
                        tolerances_from_env());
    timings.oracle_ms = now_ms(t0);
    oracle_ran = true;
  }
  timings.total_ms = now_ms(t_start);

  json doc = count_report_to_json(report, system_strings(sys), sys.num_vars,
                                  oracle_ran ? &oracle : nullptr, timings);
  if (pretty) {
    std::cout << "count: " << doc["count"] << "  signature: (+"
              << report.signature.n_pos << ", -" << report.signature.n_neg
              << ", 0:" << report.signature.n_zero << ")  rank: " << report.rank
              << "\n";
    if (report.form) {
      std::cout << "K_C^xi in basis {";
      for (std::size_t i = 0; i < report.form->basis_labels.size(); ++i)
        std::cout << (i ? ", " : "")
                  << monomial_to_string(report.form->basis_labels[i], VarStyle::ZW);
      std::cout << "}:\n"
                << pretty_matrix(report.form->entries, report.form->basis_labels,
                                 VarStyle::ZW);
    }
    if (oracle_ran)
      std::cout << "oracle: " << doc["oracle"]["count"]
                << " singles, agree=" << doc["oracle"]["agree"] << "\n";
  } else {
    std::cout << doc.dump(2) << "\n";
  }

  if (report.kind != CountKind::Finite) return kExitInfiniteOrUnknown;
  if (oracle_ran && (!oracle.ok || oracle.unknown)) return kExitInfiniteOrUnknown;
  return kExitOk;
}

int cmd_form(const std::string& text, bool real, bool pretty) {
  ConjSystem sys = parse_system(text);
  json doc;
  doc["system"] = system_strings(sys);
  if (real) {
    std::vector<GenPoly> real_gens;
    for (const auto& p : sys.polys) {
      RealPolyPair pair = p.to_real_coords();
      if (!pair.re_part.is_zero()) real_gens.push_back(pair.re_part);
      if (!pair.im_part.is_zero()) real_gens.push_back(pair.im_part);
    }
    SymmetricMatrix form =
        real_killing_form(real_gens, GenPoly::constant(sys.num_vars, 1));
    doc["kind"] = "K_R";
    doc["basis"] = monomials_to_json(form.basis_labels, VarStyle::XY);
    doc["form_matrix"] = matrix_to_json(form.entries);
    if (pretty) {
      std::cout << pretty_matrix(form.entries, form.basis_labels, VarStyle::XY);
      return kExitOk;
    }
  } else {
    auto gens = build_conjugate_ideal(sys);
    GroebnerBasis G = buchberger(gens);
    QuotientBasis basis = standard_monomials(G);
    HermitianMatrix form =
        hermitian_killing_form(G, basis, GenPoly::constant(sys.num_vars, 1));
    doc["kind"] = "K_C";
    doc["basis"] = monomials_to_json(form.basis_labels, VarStyle::ZW);
    doc["form_matrix"] = matrix_to_json(form.entries);
    if (pretty) {
      std::cout << pretty_matrix(form.entries, form.basis_labels, VarStyle::ZW);
      return kExitOk;
    }
  }
  std::cout << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_groebner(const std::string& text, bool pretty) {
  ConjSystem sys = parse_system(text);
  auto gens = build_conjugate_ideal(sys);
  GroebnerBasis G = buchberger(gens);
  json doc;
  doc["system"] = system_strings(sys);
  json basis = json::array();
  for (const auto& g : G.generators()) basis.push_back(g.str(VarStyle::ZW));
  doc["groebner_basis"] = std::move(basis);
  try {
    QuotientBasis q = standard_monomials(G);
    doc["standard_monomials"] = monomials_to_json(q.monomials, VarStyle::ZW);
    doc["quotient_dim"] = q.dimension();
  } catch (const NotZeroDimensional& e) {
    doc["standard_monomials"] = "infinite";
    doc["quotient_dim"] = "infinite";
  }
  if (pretty) {
    for (const auto& g : G.generators())
      std::cout << g.str(VarStyle::ZW) << "\n";
    return kExitOk;
  }
  std::cout << doc.dump(2) << "\n";
  return doc["quotient_dim"].is_string() ? kExitInfiniteOrUnknown : kExitOk;
}

int cmd_bound(const std::string& text) {
  GenPoly p = parse_poly(text);
  auto inst = detect_harmonic(p);
  if (!inst)
    throw UnsupportedShape("input is not a harmonic equation q(z) + p(conj z)");
  HarmonicBound hb = harmonic_bound(*inst);  // throws UnsupportedShape if m > n-2
  json doc{{"n", inst->n},
           {"m", inst->m()},
           {"degenerate", hb.degenerate},
           {"bound", hb.bound}};
  std::cout << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_family(unsigned n, const std::string& a_text, const std::string& b_text,
               bool check_conjecture) {
  GaussianRational a = parse_gaussian(a_text);
  GaussianRational b = parse_gaussian(b_text);
  FamilyCount fc = family_count(n, a, b);
  json doc{{"n", n}, {"a", a.str()}, {"b", b.str()}};
  doc["count"] = fc.kind == CountKind::Infinite ? json("infinite") : json(fc.count);
  if (check_conjecture) {
    if (a.norm() == 1 || n < 2) {
      doc["conjecture"] = "not applicable";
    } else {
      ConjectureResult cr = conjecture_check(n, a, b);
      doc["conjecture"] = json{{"match", cr.match},
                               {"exact_product_match", cr.exact_product_match},
                               {"sign_branch", cr.sign_branch},
                               {"float_rel_err", cr.float_rel_err}};
    }
  }
  std::cout << doc.dump(2) << "\n";
  return fc.kind == CountKind::Infinite ? kExitInfiniteOrUnknown : kExitOk;
}

int cmd_oracle(const std::string& text) {
  ConjSystem sys = parse_system(text);
  auto gens = build_conjugate_ideal(sys);
  GroebnerBasis G = buchberger(gens);
  try {
    (void)standard_monomials(G);
  } catch (const NotZeroDimensional&) {
    json doc{{"count", "infinite"}};
    std::cout << doc.dump(2) << "\n";
    return kExitInfiniteOrUnknown;
  }
  OracleRun run = run_oracle(gens, G, tolerances_from_env());
  json doc = oracle_to_json(run);
  std::cout << doc.dump(2) << "\n";
  return (run.ok && !run.unknown) ? kExitOk : kExitInfiniteOrUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solution counting for polynomial equations with "
               "conjugated variables"};
  app.require_subcommand(1);

  std::string file, xi_text, a_text = "0", b_text = "0";
  std::vector<std::string> exprs;
  bool with_oracle = false, with_minors = false, pretty = false, real = false;
  bool check_conjecture = false;
  unsigned family_n = 1;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("expr", exprs, "polynomial expression(s)");
    cmd->add_option("--file", file, "read the system from a file");
    cmd->add_flag("--pretty", pretty, "human-readable output");
  };

  CLI::App* count = app.add_subcommand("count", "count solutions exactly");
  add_input(count);
  count->add_option("--xi", xi_text, "weight polynomial xi (must be star-symmetric)");
  count->add_flag("--oracle", with_oracle, "cross-check with the numeric solver");
  count->add_flag("--minors", with_minors, "include leading principal minors");

  CLI::App* form = app.add_subcommand("form", "emit the Killing form matrix");
  add_input(form);
  form->add_flag("--real", real, "emit K_R over the real coordinates");

  CLI::App* groebner_cmd =
      app.add_subcommand("groebner", "emit the LEX Groebner basis");
  add_input(groebner_cmd);

  CLI::App* bound_cmd =
      app.add_subcommand("bound", "solution bound for a harmonic equation");
  add_input(bound_cmd);

  CLI::App* family = app.add_subcommand(
      "family", "classify z^n + a*conj(z)^n + b = 0");
  family->add_option("--n", family_n, "exponent n")->required();
  family->add_option("--a", a_text, "coefficient a")->required();
  family->add_option("--b", b_text, "coefficient b")->required();
  family->add_flag("--conjecture", check_conjecture,
                   "compare the exact characteristic polynomial against the "
                   "conjectured factorization");

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "numeric solve only");
  add_input(oracle_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (count->parsed())
      return cmd_count(read_input(file, exprs), xi_text, with_oracle,
                       with_minors, pretty);
    if (form->parsed()) return cmd_form(read_input(file, exprs), real, pretty);
    if (groebner_cmd->parsed())
      return cmd_groebner(read_input(file, exprs), pretty);
    if (bound_cmd->parsed()) return cmd_bound(read_input(file, exprs));
    if (family->parsed())
      return cmd_family(family_n, a_text, b_text, check_conjecture);
    if (oracle_cmd->parsed()) return cmd_oracle(read_input(file, exprs));
  } catch (const SyntaxError& e) {
    emit_error("syntax", e.what());
    return kExitError;
  } catch (const ArityError& e) {
    emit_error("arity", e.what());
    return kExitError;
  } catch (const NotStarSymmetric& e) {
    emit_error("not_star_symmetric", e.what());
    return kExitError;
  } catch (const UnsupportedShape& e) {
    emit_error("unsupported_shape", e.what());
    return kExitError;
  } catch (const NotZeroDimensional& e) {
    emit_error("not_zero_dimensional", e.what());
    return kExitInfiniteOrUnknown;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return kExitError;
  }
  return kExitError;
}
