#include "conjcount/gaussian.hpp"

#include <ostream>

namespace conjcount {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.norm();
  if (sgn(n) == 0) throw std::domain_error("division by zero GaussianRational");
  // a/b = a * conj(b) / |b|^2
  Rational r = (re_ * o.re_ + im_ * o.im_) / n;
  Rational i = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::string GaussianRational::str() const {
  if (sgn(im_) == 0) return to_string(re_);
  std::string im_str;
  if (im_ == 1)
    im_str = "i";
  else if (im_ == -1)
    im_str = "-i";
  else
    im_str = to_string(im_) + "i";
  if (sgn(re_) == 0) return im_str;
  if (sgn(im_) > 0) return to_string(re_) + "+" + im_str;
  return to_string(re_) + im_str;  // im_str already carries the minus
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) {
  return os << g.str();
}

}  // namespace conjcount
