#include "conjcount/matrix.hpp"

#include <stdexcept>

#include "scaled_int.hpp"

namespace conjcount {

GMatrix GMatrix::operator*(const GMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix dim mismatch");
  GMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const GaussianRational& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        const GaussianRational& bkj = o.at(k, j);
        if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

GMatrix GMatrix::operator+(const GMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix dim mismatch");
  GMatrix out(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

GMatrix GMatrix::operator-(const GMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix dim mismatch");
  GMatrix out(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
  return out;
}

GaussianRational GMatrix::trace() const {
  GaussianRational t;
  for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

GMatrix GMatrix::conj_transpose() const {
  GMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out.at(j, i) = at(i, j).conj();
  return out;
}

bool GMatrix::is_hermitian() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      if (at(i, j) != at(j, i).conj()) return false;
  return true;
}

GaussianRational GMatrix::determinant() const {
  if (n_ == 0) return 1;
  GMatrix m(*this);
  GaussianRational det(1);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n_) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n_; ++j)
        std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    GaussianRational inv = GaussianRational(1) / m.at(col, col);
    for (std::size_t i = col + 1; i < n_; ++i) {
      if (m.at(i, col).is_zero()) continue;
      GaussianRational f = m.at(i, col) * inv;
      for (std::size_t j = col; j < n_; ++j)
        m.at(i, j) -= f * m.at(col, j);
    }
  }
  return det;
}

std::vector<GaussianRational> GMatrix::leading_principal_minors() const {
  std::vector<GaussianRational> out;
  out.reserve(n_);
  for (std::size_t k = 1; k <= n_; ++k) {
    GMatrix sub(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = at(i, j);
    out.push_back(sub.determinant());
  }
  return out;
}

std::vector<GaussianRational> char_poly(const GMatrix& m) {
  const std::size_t d = m.dim();
  std::vector<GaussianRational> c(d + 1);
  c[d] = 1;
  if (d == 0) return c;
  // Faddeev-LeVerrier: B_1 = A, c_k = -tr(B_k)/k, B_{k+1} = A (B_k + c_k I),
  // run over the common-denominator integer representation so the repeated
  // matrix products stay gcd-free inside the inner loops.
  using detail::ScaledMatrix;
  ScaledMatrix a = ScaledMatrix::from(m);
  ScaledMatrix b = a;
  for (std::size_t k = 1; k <= d; ++k) {
    mpz_class tr_re = 0, tr_im = 0;
    for (std::size_t i = 0; i < d; ++i) {
      tr_re += b.re[i * d + i];
      tr_im += b.im[i * d + i];
    }
    Rational cr(-tr_re, b.den * static_cast<long>(k));
    Rational ci(-tr_im, b.den * static_cast<long>(k));
    cr.canonicalize();
    ci.canonicalize();
    c[d - k] = GaussianRational(cr, ci);
    if (k == d) break;
    // B + c_k I over a shared denominator, then one integer product.
    mpz_class cden;
    mpz_lcm(cden.get_mpz_t(), c[d - k].re().get_den().get_mpz_t(),
            c[d - k].im().get_den().get_mpz_t());
    mpz_class newden;
    mpz_lcm(newden.get_mpz_t(), b.den.get_mpz_t(), cden.get_mpz_t());
    mpz_class scale_b = newden / b.den;
    if (scale_b != 1) {
      for (auto& v : b.re) v *= scale_b;
      for (auto& v : b.im) v *= scale_b;
      b.den = newden;
    }
    mpz_class add_re = c[d - k].re().get_num() * (newden / c[d - k].re().get_den());
    mpz_class add_im = c[d - k].im().get_num() * (newden / c[d - k].im().get_den());
    for (std::size_t i = 0; i < d; ++i) {
      b.re[i * d + i] += add_re;
      b.im[i * d + i] += add_im;
    }
    b.reduce_content();
    b = detail::mul(a, b);
  }
  return c;
}

}  // namespace conjcount
