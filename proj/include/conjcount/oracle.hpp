#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "conjcount/groebner.hpp"

namespace conjcount {

struct MaxIterations : std::runtime_error {
  explicit MaxIterations(const std::string& what) : std::runtime_error(what) {}
};

struct NoEliminant : std::runtime_error {
  explicit NoEliminant(const std::string& what) : std::runtime_error(what) {}
};

struct InconsistentPairing : std::runtime_error {
  explicit InconsistentPairing(const std::string& what)
      : std::runtime_error(what) {}
};

// All tolerances scale with the instance via `scale` (the CLI multiplies it
// by CONJCOUNT_TOL_SCALE).
struct OracleTolerances {
  double aberth_step = 1e-12;
  double aberth_residual = 1e-10;
  double residual = 1e-8;
  double cluster = 1e-6;
  double single = 1e-6;
  double single_gray = 1e-4;
  int max_iterations = 1000;
  double scale = 1.0;
};

// All complex roots of the polynomial given by ascending coefficients, via
// Ehrlich-Aberth simultaneous iteration. Leading coefficient must be
// nonzero and the degree at least 1; throws MaxIterations when the
// iteration fails to converge.
std::vector<std::complex<double>> aberth_roots(
    std::vector<std::complex<double>> coeffs,
    const OracleTolerances& tol = {});

struct NumericSolution {
  std::vector<std::complex<double>> z;  // r entries
  std::vector<std::complex<double>> w;  // r entries
  double residual = 0.0;
  bool is_single = false;       // w ~ conj(z)
  bool single_uncertain = false;  // distance fell in the gray zone
};

// All points of the variety to float accuracy: roots of the univariate
// eliminant in the last w variable, back-substitution up the LEX basis,
// Newton refinement on the full conjugate-closed system, cluster merging.
// Throws NoEliminant when the LEX basis lacks the univariate polynomial.
std::vector<NumericSolution> solve_numeric(const std::vector<GenPoly>& generators,
                                           const GroebnerBasis& G,
                                           const OracleTolerances& tol = {});

struct OracleCount {
  std::size_t singles = 0;
  std::size_t pairs = 0;
  std::size_t total_distinct = 0;
  bool any_uncertain = false;
};

// Counts conjugated singles and associated pairs. Non-single solutions must
// close up under (z, w) -> (conj w, conj z); otherwise InconsistentPairing.
OracleCount oracle_count(const std::vector<NumericSolution>& solutions,
                         const OracleTolerances& tol = {});

// Convenience form running solve_numeric first.
OracleCount oracle_count(const std::vector<GenPoly>& generators,
                         const GroebnerBasis& G,
                         const OracleTolerances& tol = {});

}  // namespace conjcount
