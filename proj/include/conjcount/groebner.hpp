#pragma once

#include <stdexcept>
#include <vector>

#include "conjcount/genpoly.hpp"

namespace conjcount {

// Raised when the leading-term ideal lacks a pure power in some variable,
// i.e. the quotient is infinite dimensional and the system has infinitely
// many solutions.
struct NotZeroDimensional : std::runtime_error {
  explicit NotZeroDimensional(const std::string& what)
      : std::runtime_error(what) {}
};

// Reduced LEX Groebner basis: monic generators, no term of any generator
// divisible by the leading term of another, sorted by leading term.
class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<GenPoly> gens, std::size_t num_vars);

  const std::vector<GenPoly>& generators() const { return gens_; }
  const std::vector<Monomial>& leading_terms() const { return lts_; }
  std::size_t num_vars() const { return r_; }
  std::size_t slots() const { return 2 * r_; }

  // True when some generator is a nonzero constant (the ideal is the whole
  // ring and the variety is empty).
  bool is_unit_ideal() const;

 private:
  std::vector<GenPoly> gens_;
  std::vector<Monomial> lts_;
  std::size_t r_;
};

// Buchberger's algorithm under LEX with the fixed variable order
// z_1 > ... > z_r > w_1 > ... > w_r, normal pair-selection strategy and the
// coprimality and chain criteria, followed by inter-reduction. Requires at
// least one nonzero generator.
GroebnerBasis buchberger(const std::vector<GenPoly>& generators);

// Remainder of multivariate division by G: no term of the result is
// divisible by any leading term of G, and p - result lies in the ideal.
GenPoly normal_form(const GenPoly& p, const GroebnerBasis& G);

// Standard monomials (monomials outside LT(I)), ascending in the monomial
// order. Their classes form a vector-space basis of the quotient.
struct QuotientBasis {
  std::vector<Monomial> monomials;
  std::size_t dimension() const { return monomials.size(); }
  // Index of a monomial in the basis, or npos.
  std::size_t index_of(const Monomial& m) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

// Throws NotZeroDimensional when the quotient is infinite dimensional.
QuotientBasis standard_monomials(const GroebnerBasis& G);

}  // namespace conjcount
