#include "conjcount/quotient.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "scaled_int.hpp"

namespace conjcount {

MultMatrix mult_matrix(const GenPoly& f, const QuotientBasis& basis,
                       const GroebnerBasis& G) {
  const std::size_t d = basis.dimension();
  MultMatrix out{GMatrix(d), basis.monomials, f};
  for (std::size_t j = 0; j < d; ++j) {
    GenPoly col = normal_form(
        f * GenPoly::term(G.num_vars(), basis.monomials[j], 1), G);
    for (const auto& [m, c] : col.terms()) {
      std::size_t i = basis.index_of(m);
      if (i == QuotientBasis::npos)
        throw std::logic_error("mult_matrix: normal form left the basis span");
      out.entries.at(i, j) = c;
    }
  }
  return out;
}

GaussianRational trace_of(const GenPoly& f, const QuotientBasis& basis,
                          const GroebnerBasis& G) {
  GaussianRational t;
  for (const auto& b : basis.monomials) {
    GenPoly prod = normal_form(f * GenPoly::term(G.num_vars(), b, 1), G);
    t += prod.coeff(b);
  }
  return t;
}

struct TraceTable::Impl {
  std::vector<detail::ScaledMatrix> scaled_vars;

  detail::ScaledVector walk(const Monomial& m, std::size_t one_idx,
                            std::size_t dim) const {
    detail::ScaledVector v;
    v.re.assign(dim, 0);
    v.im.assign(dim, 0);
    v.re[one_idx] = 1;
    for (std::size_t s = 0; s < m.slots(); ++s)
      for (std::uint32_t e = 0; e < m.exp(s); ++e)
        v = detail::apply(scaled_vars[s], v);
    return v;
  }
};

TraceTable::~TraceTable() = default;
TraceTable::TraceTable(TraceTable&&) noexcept = default;
TraceTable& TraceTable::operator=(TraceTable&&) noexcept = default;

TraceTable::TraceTable(const GroebnerBasis& G, const QuotientBasis& basis)
    : G_(&G), basis_(&basis), impl_(std::make_unique<Impl>()) {
  const std::size_t d = basis.dimension();
  mats_.resize(d);
  if (d == 0) return;

  // Per-variable matrices first (each column is one low-degree reduction).
  const std::size_t slots = G.slots();
  std::vector<GMatrix> var_mats(slots);
  for (std::size_t s = 0; s < slots; ++s) {
    var_mats[s] =
        mult_matrix(GenPoly::term(G.num_vars(), Monomial::unit(slots, s, 1), 1),
                    basis, G)
            .entries;
    impl_->scaled_vars.push_back(detail::ScaledMatrix::from(var_mats[s]));
  }

  // The staircase is closed under division, and dividing drops the LEX
  // order, so ascending order builds every M_gamma from an earlier one.
  std::vector<detail::ScaledMatrix> scaled_mats(d);
  for (std::size_t idx = 0; idx < d; ++idx) {
    const Monomial& gamma = basis.monomials[idx];
    if (gamma.is_one()) {
      mats_[idx] = GMatrix::identity(d);
      scaled_mats[idx] = detail::ScaledMatrix::from(mats_[idx]);
      continue;
    }
    std::size_t s = 0;
    while (gamma.exp(s) == 0) ++s;
    Monomial parent = Monomial::unit(slots, s, 1).quotient_of(gamma);
    std::size_t pidx = basis.index_of(parent);
    if (pidx == QuotientBasis::npos)
      throw std::logic_error("TraceTable: staircase not closed under division");
    scaled_mats[idx] = detail::mul(impl_->scaled_vars[s], scaled_mats[pidx]);
    mats_[idx] = scaled_mats[idx].to_gmatrix();
  }

  table_.reserve(d);
  for (const auto& m : mats_) table_.push_back(m.trace());

  // Mirrored-monomial coordinates, built over the mirrored staircase so each
  // one is a single matrix-vector application away from a previous one.
  const std::size_t one_idx = basis.index_of(Monomial(slots));
  if (one_idx == QuotientBasis::npos)
    throw std::logic_error("TraceTable: 1 is not a standard monomial");
  std::map<Monomial, detail::ScaledVector, LexLess> memo;
  {
    detail::ScaledVector v1;
    v1.re.assign(d, 0);
    v1.im.assign(d, 0);
    v1.re[one_idx] = 1;
    memo.emplace(Monomial(slots), std::move(v1));
  }
  std::function<const detail::ScaledVector&(const Monomial&)> ensure =
      [&](const Monomial& m) -> const detail::ScaledVector& {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    std::size_t s = 0;
    while (m.exp(s) == 0) ++s;
    Monomial parent = Monomial::unit(slots, s, 1).quotient_of(m);
    const detail::ScaledVector& pv = ensure(parent);
    return memo.emplace(m, detail::apply(impl_->scaled_vars[s], pv))
        .first->second;
  };
  star_coords_.reserve(d);
  for (const auto& gamma : basis.monomials)
    star_coords_.push_back(ensure(gamma.star()).to_gaussian());
}

std::vector<GaussianRational> TraceTable::coords(const GenPoly& f) const {
  GenPoly nf = normal_form(f, *G_);
  std::vector<GaussianRational> u(basis_->dimension());
  for (const auto& [m, c] : nf.terms()) {
    std::size_t i = basis_->index_of(m);
    if (i == QuotientBasis::npos)
      throw std::logic_error("TraceTable: normal form left the basis span");
    u[i] = c;
  }
  return u;
}

GaussianRational TraceTable::trace(const GenPoly& f) const {
  // Tr(M_f) is linear in f and NF(f) is a combination of standard monomials.
  GenPoly nf = normal_form(f, *G_);
  GaussianRational t;
  for (const auto& [m, c] : nf.terms()) {
    std::size_t i = basis_->index_of(m);
    if (i == QuotientBasis::npos)
      throw std::logic_error("TraceTable: normal form left the basis span");
    t += c * table_[i];
  }
  return t;
}

std::vector<GaussianRational> TraceTable::monomial_coords(const Monomial& m) const {
  const std::size_t d = basis_->dimension();
  if (d == 0) return {};
  std::size_t one_idx = basis_->index_of(Monomial(G_->slots()));
  return impl_->walk(m, one_idx, d).to_gaussian();
}

std::vector<GaussianRational> TraceTable::coords_via_matrices(const GenPoly& f) const {
  const std::size_t d = basis_->dimension();
  std::vector<GaussianRational> v(d);
  for (const auto& [m, c] : f.terms()) {
    std::vector<GaussianRational> mc = monomial_coords(m);
    for (std::size_t i = 0; i < d; ++i)
      if (!mc[i].is_zero()) v[i] += c * mc[i];
  }
  return v;
}

GMatrix TraceTable::combine(const std::vector<GaussianRational>& coordinates) const {
  const std::size_t d = basis_->dimension();
  GMatrix out(d);
  for (std::size_t g = 0; g < coordinates.size(); ++g) {
    if (coordinates[g].is_zero()) continue;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const GaussianRational& m = mats_[g].at(i, j);
        if (!m.is_zero()) out.at(i, j) += coordinates[g] * m;
      }
  }
  return out;
}

}  // namespace conjcount
