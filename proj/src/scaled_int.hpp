#pragma once

// Internal common-denominator representation for hot matrix kernels. mpq
// arithmetic canonicalizes after every operation, which makes long dot
// products of entries with unrelated denominators pay repeated lcm/gcd on
// huge intermediates; pulling one denominator out turns those inner loops
// into plain mpz multiply-adds.

#include <gmpxx.h>

#include <vector>

#include "conjcount/matrix.hpp"

namespace conjcount::detail {

struct ScaledVector {
  std::vector<mpz_class> re, im;
  mpz_class den = 1;

  std::size_t size() const { return re.size(); }

  void canonicalize() {
    mpz_class g = den;
    for (std::size_t i = 0; i < re.size() && g != 1; ++i) {
      if (re[i] != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), re[i].get_mpz_t());
      if (im[i] != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), im[i].get_mpz_t());
    }
    if (g == 1 || g == 0) return;
    den /= g;
    for (std::size_t i = 0; i < re.size(); ++i) {
      re[i] /= g;
      im[i] /= g;
    }
  }

  std::vector<GaussianRational> to_gaussian() const {
    std::vector<GaussianRational> out(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      Rational r(re[i], den), m(im[i], den);
      r.canonicalize();
      m.canonicalize();
      out[i] = GaussianRational(std::move(r), std::move(m));
    }
    return out;
  }
};

struct ScaledMatrix {
  std::size_t n = 0;
  std::vector<mpz_class> re, im;  // row-major
  mpz_class den = 1;

  static ScaledMatrix from(const GMatrix& m) {
    ScaledMatrix out;
    out.n = m.dim();
    out.re.resize(out.n * out.n);
    out.im.resize(out.n * out.n);
    for (std::size_t i = 0; i < out.n; ++i)
      for (std::size_t j = 0; j < out.n; ++j) {
        const GaussianRational& g = m.at(i, j);
        mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(),
                g.re().get_den().get_mpz_t());
        mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(),
                g.im().get_den().get_mpz_t());
      }
    for (std::size_t i = 0; i < out.n; ++i)
      for (std::size_t j = 0; j < out.n; ++j) {
        const GaussianRational& g = m.at(i, j);
        out.re[i * out.n + j] =
            g.re().get_num() * (out.den / g.re().get_den());
        out.im[i * out.n + j] =
            g.im().get_num() * (out.den / g.im().get_den());
      }
    return out;
  }

  GMatrix to_gmatrix() const {
    GMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational r(re[i * n + j], den), m(im[i * n + j], den);
        r.canonicalize();
        m.canonicalize();
        out.at(i, j) = GaussianRational(std::move(r), std::move(m));
      }
    return out;
  }

  // Divide out the content so chained products keep near-minimal sizes.
  void reduce_content() {
    mpz_class g = den;
    for (std::size_t k = 0; k < re.size() && g != 1; ++k) {
      if (re[k] != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), re[k].get_mpz_t());
      if (im[k] != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), im[k].get_mpz_t());
    }
    if (g == 1 || g == 0) return;
    den /= g;
    for (std::size_t k = 0; k < re.size(); ++k) {
      re[k] /= g;
      im[k] /= g;
    }
  }
};

inline ScaledMatrix mul(const ScaledMatrix& a, const ScaledMatrix& b) {
  ScaledMatrix out;
  out.n = a.n;
  out.re.assign(a.n * a.n, 0);
  out.im.assign(a.n * a.n, 0);
  out.den = a.den * b.den;
  mpz_class tr, ti;
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t k = 0; k < a.n; ++k) {
      const mpz_class& ar = a.re[i * a.n + k];
      const mpz_class& ai = a.im[i * a.n + k];
      if (ar == 0 && ai == 0) continue;
      for (std::size_t j = 0; j < a.n; ++j) {
        const mpz_class& br = b.re[k * a.n + j];
        const mpz_class& bi = b.im[k * a.n + j];
        if (br == 0 && bi == 0) continue;
        // (ar + i ai)(br + i bi)
        out.re[i * a.n + j] += ar * br - ai * bi;
        out.im[i * a.n + j] += ar * bi + ai * br;
      }
    }
  out.reduce_content();
  return out;
}

inline ScaledVector apply(const ScaledMatrix& m, const ScaledVector& v) {
  ScaledVector out;
  out.re.assign(m.n, 0);
  out.im.assign(m.n, 0);
  out.den = m.den * v.den;
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) {
      const mpz_class& ar = m.re[i * m.n + j];
      const mpz_class& ai = m.im[i * m.n + j];
      if (ar == 0 && ai == 0) continue;
      out.re[i] += ar * v.re[j] - ai * v.im[j];
      out.im[i] += ar * v.im[j] + ai * v.re[j];
    }
  out.canonicalize();
  return out;
}

}  // namespace conjcount::detail
