#include "conjcount/genpoly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace conjcount {

std::string monomial_to_string(const Monomial& m, VarStyle style) {
  const std::size_t r = m.slots() / 2;
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string& name, std::uint32_t e) {
    if (e == 0) return;
    if (!first) os << "*";
    first = false;
    os << name;
    if (e > 1) os << "^" << e;
  };
  for (std::size_t i = 0; i < m.slots(); ++i) {
    const bool zblock = i < r;
    const std::size_t k = zblock ? i : i - r;
    std::string name;
    switch (style) {
      case VarStyle::ZW:
        name = zblock ? "z" : "w";
        if (r > 1) name += std::to_string(k + 1);
        break;
      case VarStyle::ZConj: {
        std::string base = "z";
        if (r > 1) base += std::to_string(k + 1);
        name = zblock ? base : "conj(" + base + ")";
        break;
      }
      case VarStyle::XY:
        name = zblock ? "x" : "y";
        if (r > 1) name += std::to_string(k + 1);
        break;
    }
    emit(name, m.exp(i));
  }
  if (first) return "1";
  return os.str();
}

GenPoly GenPoly::constant(std::size_t r, GaussianRational c) {
  GenPoly p(r);
  if (!c.is_zero()) p.terms_.emplace(Monomial(2 * r), std::move(c));
  return p;
}

GenPoly GenPoly::variable_z(std::size_t r, std::size_t k, std::uint32_t e) {
  GenPoly p(r);
  if (e == 0) return constant(r, 1);
  p.terms_.emplace(Monomial::unit(2 * r, k, e), GaussianRational(1));
  return p;
}

GenPoly GenPoly::variable_w(std::size_t r, std::size_t k, std::uint32_t e) {
  GenPoly p(r);
  if (e == 0) return constant(r, 1);
  p.terms_.emplace(Monomial::unit(2 * r, r + k, e), GaussianRational(1));
  return p;
}

GenPoly GenPoly::term(std::size_t r, Monomial m, GaussianRational c) {
  GenPoly p(r);
  if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

GaussianRational GenPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

std::uint32_t GenPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

void GenPoly::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GenPoly GenPoly::operator-() const {
  GenPoly p(r_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

GenPoly& GenPoly::operator+=(const GenPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GenPoly& GenPoly::operator-=(const GenPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GenPoly operator*(const GenPoly& a, const GenPoly& b) {
  GenPoly p(a.r_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

GenPoly operator*(const GaussianRational& c, const GenPoly& p) {
  GenPoly q(p.num_vars());
  if (c.is_zero()) return q;
  for (const auto& [m, pc] : p.terms()) q.add_term(m, c * pc);
  return q;
}

GenPoly GenPoly::pow(std::uint32_t e) const {
  GenPoly acc = constant(r_, 1);
  for (std::uint32_t i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

GenPoly GenPoly::star() const {
  GenPoly p(r_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m.star(), c.conj());
  return p;
}

RealPolyPair GenPoly::to_real_coords() const {
  // z_k = x_k + i y_k, w_k = x_k - i y_k, expanded term by term. The x block
  // reuses the z slots and the y block the w slots.
  const std::size_t r = r_;
  GenPoly acc(r);
  for (const auto& [m, c] : terms_) {
    GenPoly t = GenPoly::constant(r, c);
    for (std::size_t k = 0; k < r; ++k) {
      if (m.exp(k) > 0) {
        GenPoly zk = GenPoly::variable_z(r, k) +
                     GaussianRational::i() * GenPoly::variable_w(r, k);
        t = t * zk.pow(m.exp(k));
      }
      if (m.exp(r + k) > 0) {
        GenPoly wk = GenPoly::variable_z(r, k) -
                     GaussianRational::i() * GenPoly::variable_w(r, k);
        t = t * wk.pow(m.exp(r + k));
      }
    }
    acc += t;
  }
  RealPolyPair out{GenPoly(r), GenPoly(r)};
  for (const auto& [m, c] : acc.terms()) {
    if (sgn(c.re()) != 0) out.re_part.add_term(m, GaussianRational(c.re()));
    if (sgn(c.im()) != 0) out.im_part.add_term(m, GaussianRational(c.im()));
  }
  return out;
}

std::complex<double> GenPoly::evaluate(
    std::span<const std::complex<double>> point) const {
  if (point.size() != slots())
    throw std::invalid_argument("evaluate: point has wrong dimension");
  std::complex<double> acc = 0.0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (std::size_t i = 0; i < slots(); ++i)
      for (std::uint32_t e = 0; e < m.exp(i); ++e) t *= point[i];
    acc += t;
  }
  return acc;
}

GenPoly GenPoly::derivative(std::size_t slot) const {
  GenPoly p(r_);
  for (const auto& [m, c] : terms_) {
    const std::uint32_t e = m.exp(slot);
    if (e == 0) continue;
    Monomial dm = Monomial::unit(slots(), slot, 1).quotient_of(m);
    p.add_term(dm, GaussianRational(Rational(e)) * c);
  }
  return p;
}

std::string GenPoly::str(VarStyle style) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    // Pull the sign out front when the leading component is negative, so
    // -1-2i renders as "- (1+2i)".
    const bool strippable =
        sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    GaussianRational shown = strippable ? -c : c;
    std::string cs = shown.str();
    if (first) {
      if (strippable) os << "-";
    } else {
      os << (strippable ? " - " : " + ");
    }
    first = false;
    const bool mixed = sgn(shown.re()) != 0 && sgn(shown.im()) != 0;
    if (m.is_one()) {
      os << (mixed ? "(" + cs + ")" : cs);
    } else {
      if (shown.is_one()) {
        // unit coefficient: monomial alone
      } else if (mixed) {
        os << "(" << cs << ")*";
      } else {
        os << cs << "*";
      }
      os << monomial_to_string(m, style);
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GenPoly& p) {
  return os << p.str();
}

}  // namespace conjcount
