#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace conjcount {

// A power product in the paired variables z_1..z_r, w_1..w_r. Exponent slots
// 0..r-1 hold the z block, slots r..2r-1 the w block. The same container is
// reused for real coordinates (x block, y block) after the substitution
// z = x + iy, w = x - iy.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t slots) : exp_(slots, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exp_(std::move(exps)) {}

  static Monomial unit(std::size_t slots, std::size_t slot, std::uint32_t e = 1) {
    Monomial m(slots);
    m.exp_[slot] = e;
    return m;
  }

  std::size_t slots() const { return exp_.size(); }
  std::uint32_t exp(std::size_t i) const { return exp_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exp_; }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (auto e : exp_) d += e;
    return d;
  }

  bool is_one() const {
    for (auto e : exp_)
      if (e != 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial m(*this);
    for (std::size_t i = 0; i < exp_.size(); ++i) m.exp_[i] += o.exp_[i];
    return m;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exp_.size(); ++i)
      if (exp_[i] > o.exp_[i]) return false;
    return true;
  }

  // Quotient o / *this; caller guarantees divisibility.
  Monomial quotient_of(const Monomial& o) const {
    Monomial m(o);
    for (std::size_t i = 0; i < exp_.size(); ++i) m.exp_[i] -= exp_[i];
    return m;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a);
    for (std::size_t i = 0; i < m.exp_.size(); ++i)
      if (b.exp_[i] > m.exp_[i]) m.exp_[i] = b.exp_[i];
    return m;
  }

  // Swaps the z and w exponent blocks (the monomial part of the star map).
  Monomial star() const {
    Monomial m(*this);
    const std::size_t r = exp_.size() / 2;
    for (std::size_t k = 0; k < r; ++k) std::swap(m.exp_[k], m.exp_[r + k]);
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exp_ == b.exp_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

 private:
  std::vector<std::uint32_t> exp_;
};

// LEX with z_1 > ... > z_r > w_1 > ... > w_r: slot 0 is most significant.
// Returns <0, 0, >0 like strcmp, with a > b meaning a comes first in LEX.
inline int lex_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.slots(); ++i) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
  }
  return 0;
}

struct LexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return lex_compare(a, b) < 0;
  }
};

struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return lex_compare(a, b) > 0;
  }
};

// Variable-name styles for rendering monomials.
enum class VarStyle {
  ZW,        // z, w (z1.., w1.. when r > 1)
  ZConj,     // z, conj(z) -- parseable input syntax
  XY,        // x, y (real coordinates)
};

std::string monomial_to_string(const Monomial& m, VarStyle style);

}  // namespace conjcount
