#include "conjcount/groebner.hpp"

#include <algorithm>
#include <list>
#include <set>

namespace conjcount {

GroebnerBasis::GroebnerBasis(std::vector<GenPoly> gens, std::size_t num_vars)
    : gens_(std::move(gens)), r_(num_vars) {
  lts_.reserve(gens_.size());
  for (const auto& g : gens_) lts_.push_back(g.leading_monomial());
}

bool GroebnerBasis::is_unit_ideal() const {
  for (const auto& g : gens_)
    if (g.is_constant() && !g.is_zero()) return true;
  return false;
}

namespace {

// Divides p by the list of polynomials, fully reducing every term.
GenPoly reduce(const GenPoly& p, const std::vector<GenPoly>& divisors) {
  GenPoly h = p;
  GenPoly result(p.num_vars());
  while (!h.is_zero()) {
    const Monomial& lm = h.leading_monomial();
    const GaussianRational lc = h.leading_coeff();
    bool reduced = false;
    for (const auto& g : divisors) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(lm)) {
        Monomial q = g.leading_monomial().quotient_of(lm);
        GaussianRational factor = lc / g.leading_coeff();
        h -= factor * (GenPoly::term(p.num_vars(), q, 1) * g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      result.add_term(lm, lc);
      h.add_term(lm, -lc);
    }
  }
  return result;
}

GenPoly s_polynomial(const GenPoly& f, const GenPoly& g) {
  const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  GenPoly uf = GenPoly::term(f.num_vars(),
                             f.leading_monomial().quotient_of(l),
                             GaussianRational(1) / f.leading_coeff());
  GenPoly ug = GenPoly::term(g.num_vars(),
                             g.leading_monomial().quotient_of(l),
                             GaussianRational(1) / g.leading_coeff());
  return uf * f - ug * g;
}

GenPoly make_monic(const GenPoly& p) {
  if (p.is_zero()) return p;
  return (GaussianRational(1) / p.leading_coeff()) * p;
}

}  // namespace

namespace {
GroebnerBasis buchberger_impl(const std::vector<GenPoly>& generators,
                              bool use_criteria);
}

GroebnerBasis buchberger(const std::vector<GenPoly>& generators) {
  return buchberger_impl(generators, true);
}

namespace {

GroebnerBasis buchberger_impl(const std::vector<GenPoly>& generators,
                              bool use_criteria) {
  std::vector<GenPoly> basis;
  std::size_t r = 0;
  for (const auto& g : generators) {
    r = g.num_vars();
    if (!g.is_zero()) basis.push_back(make_monic(g));
  }
  if (basis.empty())
    throw std::invalid_argument("buchberger: needs a nonzero generator");

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  auto pair_less = [](const Pair& a, const Pair& b) {
    int c = lex_compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;  // smallest lcm first (normal strategy)
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };

  std::vector<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> handled;
  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      queue.push_back({i, j,
                       Monomial::lcm(basis[i].leading_monomial(),
                                     basis[j].leading_monomial())});
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), pair_less);
    Pair pr = *it;
    queue.erase(it);
    handled.insert({pr.i, pr.j});

    if (use_criteria) {
      const Monomial& li = basis[pr.i].leading_monomial();
      const Monomial& lj = basis[pr.j].leading_monomial();
      // Buchberger's first criterion: coprime leading terms.
      if (pr.lcm == li * lj) continue;
      // Chain criterion: some k with LT(k) | lcm(i,j) and both of (i,k),
      // (j,k) already handled.
      bool skip = false;
      for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
        if (k == pr.i || k == pr.j) continue;
        if (!basis[k].leading_monomial().divides(pr.lcm)) continue;
        auto key = [&](std::size_t a, std::size_t b) {
          return std::make_pair(std::min(a, b), std::max(a, b));
        };
        if (handled.count(key(pr.i, k)) && handled.count(key(pr.j, k)))
          skip = true;
      }
      if (skip) continue;
    }

    GenPoly s = reduce(s_polynomial(basis[pr.i], basis[pr.j]), basis);
    if (s.is_zero()) continue;
    basis.push_back(make_monic(s));
    push_pairs_for(basis.size() - 1);
  }

  // Minimize: sort by leading term (a divisor is never LEX-larger than its
  // multiple) and keep only elements whose leading term no kept leading term
  // divides.
  std::sort(basis.begin(), basis.end(), [](const GenPoly& a, const GenPoly& b) {
    return lex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<GenPoly> minimal;
  for (const auto& g : basis) {
    bool redundant = false;
    for (const auto& kept : minimal)
      if (kept.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }

  // Inter-reduce tails to get the canonical reduced basis.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<GenPoly> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      GenPoly red = make_monic(reduce(minimal[i], others));
      if (red != minimal[i]) {
        changed = true;
        if (red.is_zero()) {
          minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(i));
          --i;
        } else {
          minimal[i] = red;
        }
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(), [](const GenPoly& a, const GenPoly& b) {
    return lex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });

  // Safety net for the pair criteria: the reduced basis must pass the
  // Buchberger test. On failure rerun without criteria (plain Buchberger).
  if (use_criteria) {
    for (std::size_t i = 0; i < minimal.size(); ++i)
      for (std::size_t j = i + 1; j < minimal.size(); ++j)
        if (!reduce(s_polynomial(minimal[i], minimal[j]), minimal).is_zero())
          return buchberger_impl(minimal, false);
  }

  return GroebnerBasis(std::move(minimal), r);
}

}  // namespace

GenPoly normal_form(const GenPoly& p, const GroebnerBasis& G) {
  return reduce(p, G.generators());
}

std::size_t QuotientBasis::index_of(const Monomial& m) const {
  auto it = std::lower_bound(monomials.begin(), monomials.end(), m, LexLess{});
  if (it != monomials.end() && *it == m)
    return static_cast<std::size_t>(it - monomials.begin());
  return npos;
}

QuotientBasis standard_monomials(const GroebnerBasis& G) {
  QuotientBasis out;
  if (G.is_unit_ideal()) return out;  // empty variety, dimension 0

  const std::size_t slots = G.slots();
  // Zero dimensionality: every variable needs a pure power among the
  // leading terms.
  std::vector<std::uint32_t> box(slots, 0);
  for (std::size_t s = 0; s < slots; ++s) {
    for (const auto& lt : G.leading_terms()) {
      bool pure = lt.exp(s) > 0;
      for (std::size_t t = 0; t < slots && pure; ++t)
        if (t != s && lt.exp(t) > 0) pure = false;
      if (pure) {
        if (box[s] == 0 || lt.exp(s) < box[s]) box[s] = lt.exp(s);
      }
    }
    if (box[s] == 0)
      throw NotZeroDimensional(
          "no pure power of variable slot " + std::to_string(s) +
          " among leading terms: infinitely many solutions");
  }

  // Enumerate the box and keep monomials not divisible by any leading term.
  std::vector<std::uint32_t> e(slots, 0);
  std::vector<Monomial> found;
  while (true) {
    Monomial m{std::vector<std::uint32_t>(e)};
    bool standard = true;
    for (const auto& lt : G.leading_terms())
      if (lt.divides(m)) {
        standard = false;
        break;
      }
    if (standard) found.push_back(std::move(m));
    std::size_t s = slots;
    while (s > 0) {
      --s;
      if (++e[s] < box[s]) break;
      e[s] = 0;
      if (s == 0) {
        std::sort(found.begin(), found.end(), LexLess{});
        out.monomials = std::move(found);
        return out;
      }
    }
  }
}

}  // namespace conjcount
