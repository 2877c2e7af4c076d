#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include "conjcount/rational.hpp"

namespace conjcount {

// Exact complex number with rational real and imaginary parts. This is the
// coefficient field of the whole symbolic pipeline; floats never enter it.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
  GaussianRational(Rational re) : re_(std::move(re)), im_(0) {}
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }

  // |a|^2 = a * conj(a); always a non-negative rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
    return a *= b;
  }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) {
    return a /= b;
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  // "p/q+r/si" exact rendering, e.g. "3/2-1/3i", "2", "i", "-i", "0".
  std::string str() const;

 private:
  Rational re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& g);

}  // namespace conjcount
