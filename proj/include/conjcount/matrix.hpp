#pragma once

#include <cstddef>
#include <vector>

#include "conjcount/gaussian.hpp"

namespace conjcount {

// Dense square matrix over the Gaussian rationals.
class GMatrix {
 public:
  GMatrix() : n_(0) {}
  explicit GMatrix(std::size_t n) : n_(n), a_(n * n) {}

  static GMatrix identity(std::size_t n) {
    GMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t dim() const { return n_; }

  GaussianRational& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const GaussianRational& at(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }

  GMatrix operator*(const GMatrix& o) const;
  GMatrix operator+(const GMatrix& o) const;
  GMatrix operator-(const GMatrix& o) const;
  friend bool operator==(const GMatrix& a, const GMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }
  friend bool operator!=(const GMatrix& a, const GMatrix& b) { return !(a == b); }

  GaussianRational trace() const;
  GMatrix conj_transpose() const;

  bool is_hermitian() const;

  // Exact determinant by Gaussian elimination with first-nonzero pivoting.
  GaussianRational determinant() const;

  // det of the top-left k x k block for k = 1..n.
  std::vector<GaussianRational> leading_principal_minors() const;

 private:
  std::size_t n_;
  std::vector<GaussianRational> a_;
};

// Coefficients of det(lambda I - M), ascending, size dim+1, monic. Computed
// with the Faddeev-LeVerrier recurrence (exact over the field).
std::vector<GaussianRational> char_poly(const GMatrix& m);

}  // namespace conjcount
