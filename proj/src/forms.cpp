#include "conjcount/forms.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace conjcount {

namespace detail {

// Shared preprocessing for the matrix-engine kernels: left row functionals
// row_i = tau^T (M_xi M_{e_i}) and right coordinate vectors coords(f_j),
// after which each entry is a length-d dot product.
struct GramPlan {
  std::vector<std::vector<GaussianRational>> rows;
  std::vector<std::vector<GaussianRational>> cols;
};

GramPlan plan_gram(const TraceTable& traces, const std::vector<GenPoly>& elems,
                   const GenPoly& xi, bool hermitian_star) {
  const QuotientBasis& basis = traces.basis();
  const std::size_t d = basis.dimension();
  GramPlan plan;

  std::vector<GaussianRational> xi_coords = traces.coords_via_matrices(xi);
  bool xi_trivial = true;
  std::size_t one_idx = basis.index_of(Monomial(traces.groebner().slots()));
  for (std::size_t g = 0; g < xi_coords.size(); ++g)
    if (!(g == one_idx ? xi_coords[g].is_one() : xi_coords[g].is_zero()))
      xi_trivial = false;
  GMatrix xi_mat;
  if (!xi_trivial) xi_mat = traces.combine(xi_coords);

  const std::vector<GaussianRational>& tau = traces.trace_functional();
  for (const auto& e : elems) {
    std::vector<GaussianRational> u = traces.coords_via_matrices(e);
    // Unit coordinate vectors reuse the cached monomial matrix.
    std::size_t unit = QuotientBasis::npos;
    bool is_unit = true;
    for (std::size_t g = 0; g < u.size() && is_unit; ++g) {
      if (u[g].is_zero()) continue;
      if (unit != QuotientBasis::npos || !u[g].is_one())
        is_unit = false;
      else
        unit = g;
    }
    GMatrix own;
    const GMatrix* a = nullptr;
    if (is_unit && unit != QuotientBasis::npos) {
      a = &traces.monomial_matrix(unit);
    } else {
      own = traces.combine(u);
      a = &own;
    }
    GMatrix combined;
    if (!xi_trivial) {
      combined = xi_mat * *a;
      a = &combined;
    }
    std::vector<GaussianRational> row(d);
    for (std::size_t v = 0; v < d; ++v) {
      GaussianRational acc;
      for (std::size_t uu = 0; uu < d; ++uu) {
        if (tau[uu].is_zero()) continue;
        const GaussianRational& m = a->at(uu, v);
        if (!m.is_zero()) acc += tau[uu] * m;
      }
      row[v] = std::move(acc);
    }
    plan.rows.push_back(std::move(row));
  }
  for (const auto& e : elems) {
    // Standard-monomial elements hit the cached mirrored coordinates.
    if (e.term_count() == 1 && e.leading_coeff().is_one()) {
      std::size_t idx = basis.index_of(e.leading_monomial());
      if (idx != QuotientBasis::npos) {
        if (hermitian_star) {
          plan.cols.push_back(traces.star_coords(idx));
        } else {
          std::vector<GaussianRational> unit(d);
          unit[idx] = 1;
          plan.cols.push_back(std::move(unit));
        }
        continue;
      }
    }
    plan.cols.push_back(
        traces.coords_via_matrices(hermitian_star ? e.star() : e));
  }
  return plan;
}

GaussianRational dot(const std::vector<GaussianRational>& a,
                     const std::vector<GaussianRational>& b) {
  GaussianRational acc;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero() && !b[k].is_zero()) acc += a[k] * b[k];
  return acc;
}

// Serial kernel: every entry computed in a plain double loop.
GMatrix fill_gram_serial(const GramPlan& plan) {
  const std::size_t d = plan.rows.size();
  GMatrix out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      out.at(i, j) = dot(plan.rows[i], plan.cols[j]);
  return out;
}

// Parallel kernel: entries are pure and independent, rows go to threads. In
// the hermitian case only the upper triangle is computed and mirrored.
GMatrix fill_gram_parallel(const GramPlan& plan, bool hermitian_star) {
  const std::size_t d = plan.rows.size();
  GMatrix out(d);
  const long n = static_cast<long>(d);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i < n; ++i)
    for (long j = hermitian_star ? i : 0; j < n; ++j)
      out.at(i, j) = dot(plan.rows[static_cast<std::size_t>(i)],
                         plan.cols[static_cast<std::size_t>(j)]);
  if (hermitian_star)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < i; ++j) out.at(i, j) = out.at(j, i).conj();
  return out;
}

}  // namespace detail

GMatrix gram_matrix(const TraceTable& traces, const std::vector<GenPoly>& elems,
                    const GenPoly& xi, bool hermitian_star, FillMode mode) {
  detail::GramPlan plan = detail::plan_gram(traces, elems, xi, hermitian_star);
  switch (mode) {
    case FillMode::Serial:
      return detail::fill_gram_serial(plan);
    case FillMode::Parallel:
      return detail::fill_gram_parallel(plan, hermitian_star);
    case FillMode::Auto:
    default:
#ifdef _OPENMP
      return detail::fill_gram_parallel(plan, hermitian_star);
#else
      return detail::fill_gram_serial(plan);
#endif
  }
}

GMatrix gram_matrix_reference(const TraceTable& traces,
                              const std::vector<GenPoly>& elems,
                              const GenPoly& xi, bool hermitian_star) {
  const std::size_t d = elems.size();
  GMatrix out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      GenPoly rhs = hermitian_star ? elems[j].star() : elems[j];
      out.at(i, j) = traces.trace(xi * elems[i] * rhs);
    }
  return out;
}

HermitianMatrix hermitian_killing_form(const GroebnerBasis& G,
                                       const QuotientBasis& basis,
                                       const GenPoly& xi, FillMode mode) {
  if (xi.star() != xi)
    throw NotStarSymmetric("hermitian_killing_form: star(xi) != xi");
  TraceTable traces(G, basis);
  std::vector<GenPoly> elems;
  elems.reserve(basis.dimension());
  for (const auto& m : basis.monomials)
    elems.push_back(GenPoly::term(G.num_vars(), m, 1));
  HermitianMatrix out{gram_matrix(traces, elems, xi, /*hermitian_star=*/true, mode),
                      basis.monomials};
  return out;
}

SymmetricMatrix real_killing_form(const std::vector<GenPoly>& real_generators,
                                  const GenPoly& xi_real, FillMode mode) {
  GroebnerBasis G = buchberger(real_generators);
  QuotientBasis basis = standard_monomials(G);
  TraceTable traces(G, basis);
  std::vector<GenPoly> elems;
  elems.reserve(basis.dimension());
  for (const auto& m : basis.monomials)
    elems.push_back(GenPoly::term(G.num_vars(), m, 1));
  SymmetricMatrix out{gram_matrix(traces, elems, xi_real, /*hermitian_star=*/false, mode),
                      basis.monomials};
  return out;
}

Signature signature_of(const GMatrix& h) {
  if (!h.is_hermitian()) throw NotHermitian("signature_of: matrix is not Hermitian");
  const std::size_t d = h.dim();
  Signature sig;
  if (d == 0) return sig;

  std::vector<GaussianRational> p = char_poly(h);
  // Hermitian input: all coefficients are real.
  for (const auto& c : p)
    if (!c.is_real())
      throw NotHermitian("signature_of: characteristic polynomial not real");

  std::size_t low = 0;
  while (low < p.size() && p[low].is_zero()) ++low;
  sig.n_zero = low;

  // Descartes' rule on a polynomial with only real roots is exact: count
  // strict sign changes for +lambda, then for -lambda.
  auto variations = [&](bool negate) {
    int prev = 0;
    std::size_t v = 0;
    for (std::size_t k = low; k < p.size(); ++k) {
      int s = sign_of(p[k].re());
      if (negate && ((k - low) % 2 == 1)) s = -s;
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  };
  sig.n_pos = variations(false);
  sig.n_neg = variations(true);
  if (sig.n_pos + sig.n_neg + sig.n_zero != d)
    throw NotHermitian("signature_of: inertia does not sum to the dimension");
  return sig;
}

}  // namespace conjcount
