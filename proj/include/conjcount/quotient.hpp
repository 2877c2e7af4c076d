#pragma once

#include <memory>

#include "conjcount/groebner.hpp"
#include "conjcount/matrix.hpp"

namespace conjcount {

// Matrix of the multiplication-by-f endomorphism of the quotient algebra in
// the standard-monomial basis: column j holds the coordinates of
// normal_form(f * basis[j]).
struct MultMatrix {
  GMatrix entries;
  std::vector<Monomial> basis_labels;
  GenPoly multiplier;
};

MultMatrix mult_matrix(const GenPoly& f, const QuotientBasis& basis,
                       const GroebnerBasis& G);

// Tr(M_f) without materializing the matrix: reduces f * b_j and reads the
// coefficient of b_j for each basis monomial.
GaussianRational trace_of(const GenPoly& f, const QuotientBasis& basis,
                          const GroebnerBasis& G);

// Quotient-algebra engine: precomputes the multiplication matrix M_gamma of
// every standard monomial (built bottom-up from the per-variable matrices,
// using M_{x_s gamma} = M_{x_s} M_gamma), the trace functional
// tau_gamma = Tr(M_gamma), and the coordinates of the mirrored monomials
// star(gamma). A single Tr(M_f) then costs one normal form; a form-matrix
// entry costs two small matrix-vector products instead of the reduction of
// a high-degree triple product.
class TraceTable {
 public:
  TraceTable(const GroebnerBasis& G, const QuotientBasis& basis);
  ~TraceTable();
  TraceTable(TraceTable&&) noexcept;
  TraceTable& operator=(TraceTable&&) noexcept;

  const GroebnerBasis& groebner() const { return *G_; }
  const QuotientBasis& basis() const { return *basis_; }

  GaussianRational trace(const GenPoly& f) const;

  // Coordinates of [f] in the standard-monomial basis, via normal form.
  std::vector<GaussianRational> coords(const GenPoly& f) const;

  // Coordinates of [m] computed by variable-matrix actions on [1] over a
  // common-denominator integer representation; never reduces a high-degree
  // polynomial, which keeps mirrored monomials cheap even when the LEX
  // staircase is lopsided.
  std::vector<GaussianRational> monomial_coords(const Monomial& m) const;

  // coords() through monomial_coords, term by term.
  std::vector<GaussianRational> coords_via_matrices(const GenPoly& f) const;

  const GMatrix& monomial_matrix(std::size_t idx) const { return mats_[idx]; }
  const std::vector<GaussianRational>& trace_functional() const { return table_; }

  // Cached coordinates of [star(basis[idx])].
  const std::vector<GaussianRational>& star_coords(std::size_t idx) const {
    return star_coords_[idx];
  }

  // M_f as the coordinate combination of the precomputed matrices.
  GMatrix combine(const std::vector<GaussianRational>& coordinates) const;

 private:
  struct Impl;
  const GroebnerBasis* G_;
  const QuotientBasis* basis_;
  std::vector<GMatrix> mats_;            // M_gamma per standard monomial
  std::vector<GaussianRational> table_;  // tau_gamma = Tr(M_gamma)
  std::vector<std::vector<GaussianRational>> star_coords_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace conjcount
