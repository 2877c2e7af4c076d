#pragma once

#include <optional>

#include "conjcount/forms.hpp"

namespace conjcount {

struct UnsupportedShape : std::runtime_error {
  explicit UnsupportedShape(const std::string& what) : std::runtime_error(what) {}
};

// A system of generalized polynomial equations p_k(z, conj z) = 0. The
// conjugate-closed generating set is {p_k} together with {star(p_k)}.
struct ConjSystem {
  std::vector<GenPoly> polys;
  std::size_t num_vars = 1;
};

// Generator list of length 2c: each p_k followed by star(p_k).
std::vector<GenPoly> build_conjugate_ideal(const ConjSystem& sys);

enum class CountKind { Finite, Infinite, Unknown };

struct StageTimes {
  double groebner_ms = 0.0;
  double form_ms = 0.0;
  double signature_ms = 0.0;
};

struct CountOptions {
  bool with_minors = false;
  FillMode fill_mode = FillMode::Auto;
  StageTimes* times = nullptr;  // filled when non-null
};

struct RootCountReport {
  CountKind kind = CountKind::Finite;
  long count = 0;  // n_pos - n_neg; valid when kind == Finite
  Signature signature;
  std::size_t rank = 0;
  std::size_t quotient_dim = 0;
  std::optional<long> bound;  // harmonic fast-path bound when applicable
  std::optional<HermitianMatrix> form;
  std::optional<std::vector<GaussianRational>> minors;
  std::vector<GenPoly> ideal_generators;
  std::optional<GroebnerBasis> groebner;
  std::vector<std::string> flags;
};

// Full pipeline: conjugate-closed ideal, LEX Groebner basis, standard
// monomials, K_C^xi, exact signature. The solution count of the original
// system is n_pos - n_neg. xi defaults to 1; a non-constant xi must satisfy
// star(xi) == xi (NotStarSymmetric propagates).
RootCountReport count_roots(const ConjSystem& sys, const GenPoly* xi = nullptr,
                            const CountOptions& options = {});

// Univariate harmonic equation h(z, conj z) = q(z) + p(conj z) with p monic
// of degree n and deg q = m <= n. Stored as the coefficient arrays
// a[s] = coefficient of conj(z)^s (s < n) and b[j-1] = coefficient of z^j
// (1 <= j <= m); trailing zero b coefficients are trimmed so m is honest.
struct HarmonicInstance {
  unsigned n = 0;
  std::vector<GaussianRational> a;  // size n
  std::vector<GaussianRational> b;  // size m

  unsigned m() const { return static_cast<unsigned>(b.size()); }
  void trim();
  GenPoly to_poly() const;  // h(z, w) with w for conj(z)
  ConjSystem to_system() const { return {{to_poly()}, 1}; }
};

// Recognizes a single r = 1 generalized polynomial as a harmonic equation,
// star-flipping when the z-degree dominates (same solution set).
std::optional<HarmonicInstance> detect_harmonic(const GenPoly& p);

// Closed-form traces, no Groebner computation. Requires n >= 2 and
// n - 1 >= m (UnsupportedShape otherwise). tr_zw switches branch at
// m == n - 1.
struct HarmonicTraces {
  GaussianRational tr_w;
  GaussianRational tr_w2;
  GaussianRational tr_zw;
};
HarmonicTraces harmonic_traces(const HarmonicInstance& inst);

// Solution bound for n - 2 >= m: n^2 - 1 when
// (n-1) a_{n-1}^2 - 2 n a_{n-2} = 0, else n^2 - 2.
struct HarmonicBound {
  long bound = 0;
  bool degenerate = false;
};
HarmonicBound harmonic_bound(const HarmonicInstance& inst);

// The 3x3 matrix of the Hermitian Killing form restricted to span {1, z, w},
// assembled from the closed-form traces. For n - 2 >= m its determinant is
// -n^2 |(n-1) a_{n-1}^2 - 2 n a_{n-2}|^2.
GMatrix restricted_form_3x3(const HarmonicInstance& inst);

// Classification of z^n + a conj(z)^n + b = 0:
//   |a| != 1, b != 0  -> n solutions
//   |a| != 1, b  = 0  -> 1 solution (z = 0)
//   |a|  = 1          -> infinite when b/sqrt(a) is real, else 0.
// The |a| = 1 reality test is exact: u = b^2 conj(a) must be real with
// re(u) >= 0.
struct FamilyCount {
  CountKind kind = CountKind::Finite;
  long count = 0;
};
FamilyCount family_count(unsigned n, const GaussianRational& a,
                         const GaussianRational& b);

// Compares the exact characteristic polynomial of K_C^1 for the family
// against the conjectured factorization. The "+-" factor is tested three
// ways: each single sign branch over a float embedding (1e-8 relative,
// dimension-scaled) and the sign-completed product exactly (it is rational).
// Requires n >= 2 and |a| != 1.
struct ConjectureResult {
  bool match = false;
  int sign_branch = 0;             // +1, -1, or 0 when no single branch fits
  bool exact_product_match = false;
  double float_rel_err = 0.0;      // completed product vs char poly, floats
};
ConjectureResult conjecture_check(unsigned n, const GaussianRational& a,
                                  const GaussianRational& b);

}  // namespace conjcount
