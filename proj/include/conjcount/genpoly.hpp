#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "conjcount/gaussian.hpp"
#include "conjcount/monomial.hpp"

namespace conjcount {

struct RealPolyPair;

// Sparse generalized polynomial p(z, w) over the Gaussian rationals, where
// w_k stands for the conjugated variable. Terms are kept in descending LEX
// order, so begin() is the leading term; zero coefficients are never stored.
class GenPoly {
 public:
  using TermMap = std::map<Monomial, GaussianRational, LexGreater>;

  explicit GenPoly(std::size_t num_vars) : r_(num_vars) {}

  static GenPoly zero(std::size_t r) { return GenPoly(r); }
  static GenPoly constant(std::size_t r, GaussianRational c);
  static GenPoly variable_z(std::size_t r, std::size_t k, std::uint32_t e = 1);
  static GenPoly variable_w(std::size_t r, std::size_t k, std::uint32_t e = 1);
  static GenPoly term(std::size_t r, Monomial m, GaussianRational c);

  std::size_t num_vars() const { return r_; }
  std::size_t slots() const { return 2 * r_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const GaussianRational& leading_coeff() const { return terms_.begin()->second; }

  GaussianRational coeff(const Monomial& m) const;
  std::uint32_t total_degree() const;

  void add_term(const Monomial& m, const GaussianRational& c);

  GenPoly operator-() const;
  GenPoly& operator+=(const GenPoly& o);
  GenPoly& operator-=(const GenPoly& o);
  friend GenPoly operator+(GenPoly a, const GenPoly& b) { return a += b; }
  friend GenPoly operator-(GenPoly a, const GenPoly& b) { return a -= b; }
  friend GenPoly operator*(const GenPoly& a, const GenPoly& b);
  friend GenPoly operator*(const GaussianRational& c, const GenPoly& p);
  GenPoly pow(std::uint32_t e) const;

  friend bool operator==(const GenPoly& a, const GenPoly& b) {
    return a.r_ == b.r_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const GenPoly& a, const GenPoly& b) { return !(a == b); }

  // Anti-linear ring involution: conjugates every coefficient and swaps the
  // z and w exponent blocks.
  GenPoly star() const;

  // Substitutes z_k = x_k + i y_k, w_k = x_k - i y_k and splits the result
  // into real and imaginary parts (polynomials with real coefficients in the
  // x/y slots).
  RealPolyPair to_real_coords() const;

  // Numeric value at a point (z_1..z_r, w_1..w_r); coefficients go to double.
  std::complex<double> evaluate(std::span<const std::complex<double>> point) const;

  // Formal partial derivative with respect to the given slot.
  GenPoly derivative(std::size_t slot) const;

  std::string str(VarStyle style = VarStyle::ZW) const;

 private:
  std::size_t r_;
  TermMap terms_;
};

// Real and imaginary part of a generalized polynomial in the coordinates
// z = x + iy, w = x - iy. Both parts have zero imaginary coefficients.
struct RealPolyPair {
  GenPoly re_part;
  GenPoly im_part;
};

std::ostream& operator<<(std::ostream& os, const GenPoly& p);

}  // namespace conjcount
