#include "conjcount/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace conjcount {

namespace {

using Cplx = std::complex<double>;

Cplx horner(const std::vector<Cplx>& c, Cplx x) {
  Cplx v = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
  return v;
}

std::vector<Cplx> derivative(const std::vector<Cplx>& c) {
  std::vector<Cplx> d;
  for (std::size_t k = 1; k < c.size(); ++k)
    d.push_back(static_cast<double>(k) * c[k]);
  if (d.empty()) d.push_back(0.0);
  return d;
}

double max_abs(const std::vector<Cplx>& c) {
  double m = 0.0;
  for (const auto& x : c) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

namespace {

// Backward error |p(z)| / sum |c_k||z|^k; scale-free and meaningful even
// when a monic polynomial with moderate roots has coefficients spanning
// many orders of magnitude.
double backward_error(const std::vector<Cplx>& c, Cplx z) {
  Cplx v = 0.0;
  double denom = 0.0;
  const double az = std::abs(z);
  for (std::size_t k = c.size(); k-- > 0;) {
    v = v * z + c[k];
    denom = denom * az + std::abs(c[k]);
  }
  return std::abs(v) / std::max(denom, 1e-300);
}

}  // namespace

std::vector<Cplx> aberth_roots(std::vector<Cplx> coeffs,
                               const OracleTolerances& tol) {
  if (coeffs.size() < 2)
    throw std::invalid_argument("aberth_roots: degree must be at least 1");
  if (std::abs(coeffs.back()) == 0.0)
    throw std::invalid_argument("aberth_roots: zero leading coefficient");

  // Deflate exact zeros at the origin first.
  std::vector<Cplx> roots;
  while (coeffs.size() > 1 && std::abs(coeffs.front()) == 0.0) {
    roots.push_back(0.0);
    coeffs.erase(coeffs.begin());
  }
  const std::size_t deg = coeffs.size() - 1;
  if (deg == 0) return roots;

  // Initial guesses on the Fujiwara root-bound circle. (The Cauchy bound
  // 1 + max|c_k/c_d| overshoots absurdly for exact eliminants whose
  // coefficient sizes grow like root_magnitude^degree.)
  double radius = 0.0;
  for (std::size_t k = 0; k < deg; ++k) {
    double q = std::abs(coeffs[k] / coeffs.back());
    if (k == 0) q *= 0.5;
    radius = std::max(radius, std::pow(q, 1.0 / static_cast<double>(deg - k)));
  }
  radius = 2.0 * radius + 1e-3;
  std::vector<Cplx> zs(deg);
  for (std::size_t k = 0; k < deg; ++k) {
    double theta = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(deg) + 0.4;
    zs[k] = std::polar(radius * (0.55 + 0.15 * (k % 4)), theta);
  }

  const std::vector<Cplx> der = derivative(coeffs);
  const double step_tol = tol.aberth_step * tol.scale;
  std::vector<bool> frozen(deg, false);
  bool converged = false;
  for (int iter = 0; iter < tol.max_iterations && !converged; ++iter) {
    double max_step = 0.0;
    bool all_frozen = true;
    for (std::size_t k = 0; k < deg; ++k) {
      if (frozen[k]) continue;
      // An iterate whose backward error reaches rounding noise cannot
      // improve; freeze it so a wobbling last digit does not stall the
      // global step criterion.
      if (backward_error(coeffs, zs[k]) <= 4e-16) {
        frozen[k] = true;
        continue;
      }
      all_frozen = false;
      Cplx p = horner(coeffs, zs[k]);
      Cplx dp = horner(der, zs[k]);
      Cplx newton = (dp == 0.0) ? Cplx(0.0) : p / dp;
      Cplx rep = 0.0;
      for (std::size_t j = 0; j < deg; ++j) {
        if (j == k) continue;
        Cplx diff = zs[k] - zs[j];
        if (std::abs(diff) < 1e-300) diff = 1e-300;
        rep += 1.0 / diff;
      }
      Cplx denom = 1.0 - newton * rep;
      Cplx step = (std::abs(denom) < 1e-300) ? newton : newton / denom;
      zs[k] -= step;
      if (!std::isfinite(zs[k].real()) || !std::isfinite(zs[k].imag())) {
        // Restart a poisoned iterate inside the root bound.
        zs[k] = std::polar(radius * 0.7,
                           2.0 * M_PI * static_cast<double>(k + iter) /
                               static_cast<double>(deg));
        max_step = 1.0;
        continue;
      }
      max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(zs[k])));
    }
    converged = all_frozen || max_step <= step_tol;
  }
  if (!converged)
    throw MaxIterations("aberth_roots: no convergence within iteration budget");
  for (const auto& z : zs)
    if (backward_error(coeffs, z) > tol.aberth_residual * tol.scale)
      throw MaxIterations("aberth_roots: residual check failed");
  roots.insert(roots.end(), zs.begin(), zs.end());
  return roots;
}

namespace {

// Solve (J^H J) d = -J^H F for the Gauss-Newton step; k x k complex system,
// plain LU with partial pivoting.
std::vector<Cplx> least_squares_step(std::vector<std::vector<Cplx>> jac,
                                     std::vector<Cplx> f) {
  const std::size_t rows = jac.size();
  const std::size_t k = rows == 0 ? 0 : jac[0].size();
  std::vector<std::vector<Cplx>> a(k, std::vector<Cplx>(k, 0.0));
  std::vector<Cplx> rhs(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t t = 0; t < rows; ++t)
        a[i][j] += std::conj(jac[t][i]) * jac[t][j];
    for (std::size_t t = 0; t < rows; ++t)
      rhs[i] -= std::conj(jac[t][i]) * f[t];
  }
  // LU solve in place.
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < k; ++i)
      if (std::abs(a[i][col]) > std::abs(a[piv][col])) piv = i;
    if (std::abs(a[piv][col]) < 1e-300) return {};  // singular, give up
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t i = col + 1; i < k; ++i) {
      Cplx fmul = a[i][col] / a[col][col];
      for (std::size_t j = col; j < k; ++j) a[i][j] -= fmul * a[col][j];
      rhs[i] -= fmul * rhs[col];
    }
  }
  std::vector<Cplx> x(k, 0.0);
  for (std::size_t i = k; i-- > 0;) {
    Cplx acc = rhs[i];
    for (std::size_t j = i + 1; j < k; ++j) acc -= a[i][j] * x[j];
    x[i] = acc / a[i][i];
  }
  return x;
}

double system_residual(const std::vector<GenPoly>& gens,
                       const std::vector<Cplx>& point) {
  double r = 0.0;
  for (const auto& g : gens)
    r = std::max(r, std::abs(g.evaluate(point)));
  return r;
}

// Residual relative to the evaluation magnitude: |g(pt)| stays meaningful
// for solutions of large modulus, where the terms being cancelled are huge.
double system_backward_error(const std::vector<GenPoly>& gens,
                             const std::vector<Cplx>& point) {
  double worst = 0.0;
  for (const auto& g : gens) {
    double num = std::abs(g.evaluate(point));
    double den = 1.0;
    for (const auto& [m, c] : g.terms()) {
      double t = std::abs(c.to_complex());
      for (std::size_t s = 0; s < point.size(); ++s)
        for (std::uint32_t e = 0; e < m.exp(s); ++e) t *= std::abs(point[s]);
      den += t;
    }
    worst = std::max(worst, num / den);
  }
  return worst;
}

// Newton (Gauss-Newton) refinement on the full conjugate-closed system.
void refine(const std::vector<GenPoly>& gens, std::vector<Cplx>& point,
            const OracleTolerances& tol) {
  const std::size_t k = point.size();
  std::vector<std::vector<GenPoly>> jac_polys;
  for (const auto& g : gens) {
    std::vector<GenPoly> row;
    for (std::size_t s = 0; s < k; ++s) row.push_back(g.derivative(s));
    jac_polys.push_back(std::move(row));
  }
  double best = system_backward_error(gens, point);
  std::vector<Cplx> best_point = point;
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<Cplx> f;
    for (const auto& g : gens) f.push_back(g.evaluate(point));
    std::vector<std::vector<Cplx>> jac;
    for (const auto& row : jac_polys) {
      std::vector<Cplx> jrow;
      for (const auto& d : row) jrow.push_back(d.evaluate(point));
      jac.push_back(std::move(jrow));
    }
    std::vector<Cplx> step = least_squares_step(std::move(jac), std::move(f));
    if (step.size() != k) break;
    double snorm = 0.0, xnorm = 0.0;
    for (std::size_t s = 0; s < k; ++s) {
      point[s] += step[s];
      snorm = std::max(snorm, std::abs(step[s]));
      xnorm = std::max(xnorm, std::abs(point[s]));
    }
    double res = system_backward_error(gens, point);
    if (res < best) {
      best = res;
      best_point = point;
    }
    if (snorm <= 1e-14 * tol.scale * (1.0 + xnorm)) break;
  }
  point = best_point;
}

// Extracts the coefficients of a univariate polynomial in `slot` after the
// slots listed in `assigned` have been substituted. Returns an empty vector
// when other variables remain.
std::vector<Cplx> univariate_in(const GenPoly& g, std::size_t slot,
                                const std::vector<int>& assigned_mask,
                                const std::vector<Cplx>& values) {
  std::uint32_t deg = 0;
  for (const auto& [m, c] : g.terms()) {
    for (std::size_t s = 0; s < m.slots(); ++s)
      if (m.exp(s) > 0 && s != slot && !assigned_mask[s]) return {};
    deg = std::max(deg, m.exp(slot));
  }
  std::vector<Cplx> coef(deg + 1, 0.0);
  for (const auto& [m, c] : g.terms()) {
    Cplx v = c.to_complex();
    for (std::size_t s = 0; s < m.slots(); ++s) {
      if (s == slot) continue;
      for (std::uint32_t e = 0; e < m.exp(s); ++e) v *= values[s];
    }
    coef[m.exp(slot)] += v;
  }
  return coef;
}

}  // namespace

std::vector<NumericSolution> solve_numeric(const std::vector<GenPoly>& generators,
                                           const GroebnerBasis& G,
                                           const OracleTolerances& tol) {
  const std::size_t r = G.num_vars();
  const std::size_t slots = G.slots();

  std::vector<NumericSolution> out;
  if (G.is_unit_ideal()) return out;  // empty variety

  // Assign variables ascending in LEX (last w variable first). For each
  // partial assignment, the lowest-degree univariate constraint supplies the
  // candidate extensions.
  struct Partial {
    std::vector<Cplx> values;
    std::vector<int> mask;
  };
  std::vector<Partial> frontier{{std::vector<Cplx>(slots, 0.0),
                                 std::vector<int>(slots, 0)}};
  for (std::size_t step = 0; step < slots; ++step) {
    const std::size_t slot = slots - 1 - step;
    std::vector<Partial> next;
    for (auto& part : frontier) {
      auto extract = [&](const GenPoly& g) {
        std::vector<Cplx> cand = univariate_in(g, slot, part.mask, part.values);
        // Strip only leading coefficients that are zero for real (exact
        // zeros, underflow, or complete cancellation); a small-looking lead
        // next to huge low-order coefficients is normal for eliminants.
        while (cand.size() > 1 &&
               std::abs(cand.back()) <= 1e-150 * max_abs(cand))
          cand.pop_back();
        return cand;
      };
      std::vector<Cplx> best;
      for (const auto& g : G.generators()) {
        std::vector<Cplx> cand = extract(g);
        if (cand.size() < 2) continue;  // constant or not univariate here
        if (best.empty() || cand.size() < best.size()) best = cand;
      }
      if (best.empty()) {
        if (step == 0)
          throw NoEliminant(
              "solve_numeric: no univariate eliminant in the last variable");
        // Variable unconstrained: should not happen for zero-dimensional
        // ideals; drop the branch.
        continue;
      }
      std::vector<Cplx> candidates = aberth_roots(best, tol);
      // The triangular basis polynomial can cancel catastrophically at
      // large-modulus branch values; the original generators have small
      // clean coefficients, so their substituted fibers are collected as
      // well and the residual filter arbitrates.
      if (step + 1 == slots) {
        for (const auto& g : generators) {
          std::vector<Cplx> cand = extract(g);
          if (cand.size() < 2) continue;
          try {
            for (const auto& root : aberth_roots(cand, tol))
              candidates.push_back(root);
          } catch (const MaxIterations&) {
            // extra candidates only; the triangular route already supplied some
          }
        }
      }
      for (const auto& root : candidates) {
        Partial ext = part;
        ext.values[slot] = root;
        ext.mask[slot] = 1;
        next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }

  // Newton refinement, residual filter (relative to the cancelled terms so
  // large-modulus solutions are judged fairly), dedup.
  std::vector<std::vector<Cplx>> points;
  for (auto& part : frontier) {
    refine(generators, part.values, tol);
    if (system_backward_error(generators, part.values) <=
        tol.residual * tol.scale)
      points.push_back(part.values);
  }

  std::vector<std::vector<Cplx>> distinct;
  for (const auto& pt : points) {
    bool dup = false;
    for (const auto& q : distinct) {
      double d = 0.0, mag = 1.0;
      for (std::size_t s = 0; s < slots; ++s) {
        d = std::max(d, std::abs(pt[s] - q[s]));
        mag = std::max({mag, std::abs(pt[s]), std::abs(q[s])});
      }
      if (d <= tol.cluster * tol.scale * mag) {
        dup = true;
        break;
      }
    }
    if (!dup) distinct.push_back(pt);
  }

  for (const auto& pt : distinct) {
    NumericSolution sol;
    sol.z.assign(pt.begin(), pt.begin() + static_cast<std::ptrdiff_t>(r));
    sol.w.assign(pt.begin() + static_cast<std::ptrdiff_t>(r), pt.end());
    sol.residual = system_residual(generators, pt);
    double dist = 0.0, zmag = 0.0;
    for (std::size_t k = 0; k < r; ++k) {
      dist = std::max(dist, std::abs(sol.w[k] - std::conj(sol.z[k])));
      zmag = std::max(zmag, std::abs(sol.z[k]));
    }
    const double limit = tol.single * tol.scale * (1.0 + zmag);
    const double gray = tol.single_gray * tol.scale * (1.0 + zmag);
    sol.is_single = dist <= limit;
    sol.single_uncertain = !sol.is_single && dist <= gray;
    out.push_back(std::move(sol));
  }

  // Deterministic order: lexicographic on rounded coordinates.
  std::sort(out.begin(), out.end(), [](const NumericSolution& a,
                                       const NumericSolution& b) {
    auto key = [](const NumericSolution& s) {
      std::vector<double> k;
      for (const auto& v : s.z) {
        k.push_back(std::round(v.real() * 1e9));
        k.push_back(std::round(v.imag() * 1e9));
      }
      for (const auto& v : s.w) {
        k.push_back(std::round(v.real() * 1e9));
        k.push_back(std::round(v.imag() * 1e9));
      }
      return k;
    };
    return key(a) < key(b);
  });
  return out;
}

OracleCount oracle_count(const std::vector<GenPoly>& generators,
                         const GroebnerBasis& G, const OracleTolerances& tol) {
  return oracle_count(solve_numeric(generators, G, tol), tol);
}

OracleCount oracle_count(const std::vector<NumericSolution>& solutions,
                         const OracleTolerances& tol) {
  OracleCount out;
  out.total_distinct = solutions.size();
  std::vector<std::size_t> nonsingle;
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    if (solutions[i].single_uncertain) out.any_uncertain = true;
    if (solutions[i].is_single)
      ++out.singles;
    else
      nonsingle.push_back(i);
  }

  // Non-singles must pair under (z, w) -> (conj w, conj z).
  std::vector<bool> matched(solutions.size(), false);
  for (std::size_t idx : nonsingle) {
    if (matched[idx]) continue;
    bool found = false;
    for (std::size_t jdx : nonsingle) {
      if (jdx == idx || matched[jdx]) continue;
      double d = 0.0, mag = 1.0;
      const auto& a = solutions[idx];
      const auto& b = solutions[jdx];
      for (std::size_t k = 0; k < a.z.size(); ++k) {
        d = std::max(d, std::abs(b.z[k] - std::conj(a.w[k])));
        d = std::max(d, std::abs(b.w[k] - std::conj(a.z[k])));
        mag = std::max({mag, std::abs(a.z[k]), std::abs(a.w[k])});
      }
      const double pair_tol = tol.cluster * tol.scale * mag * 10.0;
      if (d <= pair_tol) {
        matched[idx] = matched[jdx] = true;
        found = true;
        ++out.pairs;
        break;
      }
    }
    if (!found)
      throw InconsistentPairing(
          "oracle_count: a non-single solution has no associated partner");
  }
  return out;
}

}  // namespace conjcount
