#pragma once

#include <optional>
#include <stdexcept>

#include "conjcount/quotient.hpp"

namespace conjcount {

struct NotStarSymmetric : std::runtime_error {
  explicit NotStarSymmetric(const std::string& what) : std::runtime_error(what) {}
};

struct NotHermitian : std::runtime_error {
  explicit NotHermitian(const std::string& what) : std::runtime_error(what) {}
};

// Matrix of the Hermitian Killing form K^xi(f, g) = Tr(M_xi M_f M_{g*}) in
// the labelled basis. Entries satisfy a[i][j] = conj(a[j][i]).
struct HermitianMatrix {
  GMatrix entries;
  std::vector<Monomial> basis_labels;
};

// Matrix of the real Killing form K^xi(f, g) = Tr(M_xi M_f M_g); labels are
// monomials in the x/y slots.
struct SymmetricMatrix {
  GMatrix entries;
  std::vector<Monomial> basis_labels;
};

struct Signature {
  std::size_t n_pos = 0;
  std::size_t n_neg = 0;
  std::size_t n_zero = 0;
  std::size_t rank() const { return n_pos + n_neg; }
  long difference() const {
    return static_cast<long>(n_pos) - static_cast<long>(n_neg);
  }
};

enum class FillMode { Auto, Serial, Parallel };

// Gram matrix of trace products: entry (i, j) is
//   Tr(M_{xi * e_i * star(e_j)})   when hermitian_star,
//   Tr(M_{xi * e_i * e_j})         otherwise.
// Works for arbitrary quotient elements, which is how the worked 3x3 and
// 4x4 matrices in tests pick their own basis order. Entries go through the
// precomputed multiplication matrices: tau^T (M_xi M_{e_i}) coords(f_j).
// The serial and OpenMP kernels must produce identical matrices.
GMatrix gram_matrix(const TraceTable& traces, const std::vector<GenPoly>& elems,
                    const GenPoly& xi, bool hermitian_star,
                    FillMode mode = FillMode::Auto);

// Reference fill kept for testing: reduces xi * e_i * f_j symbolically and
// takes one trace per entry. Obviously correct and much slower on large
// staircases; the kernels above are checked against it on small instances.
GMatrix gram_matrix_reference(const TraceTable& traces,
                              const std::vector<GenPoly>& elems,
                              const GenPoly& xi, bool hermitian_star);

// K_C^xi over the standard-monomial basis. Requires star(xi) == xi, else
// throws NotStarSymmetric.
HermitianMatrix hermitian_killing_form(const GroebnerBasis& G,
                                       const QuotientBasis& basis,
                                       const GenPoly& xi,
                                       FillMode mode = FillMode::Auto);

// K_R^xi of an ideal given by real-coefficient generators in the x/y slots.
// Runs the Groebner pipeline internally; throws NotZeroDimensional.
SymmetricMatrix real_killing_form(const std::vector<GenPoly>& real_generators,
                                  const GenPoly& xi_real,
                                  FillMode mode = FillMode::Auto);

// Exact inertia of a Hermitian matrix: all eigenvalues are real, so after
// stripping the zero root the Descartes count on the characteristic
// polynomial is exact. Throws NotHermitian.
Signature signature_of(const GMatrix& h);

}  // namespace conjcount
