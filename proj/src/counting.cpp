#include "conjcount/counting.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace conjcount {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

std::vector<GenPoly> build_conjugate_ideal(const ConjSystem& sys) {
  std::vector<GenPoly> gens;
  gens.reserve(2 * sys.polys.size());
  for (const auto& p : sys.polys) {
    gens.push_back(p);
    gens.push_back(p.star());
  }
  return gens;
}

RootCountReport count_roots(const ConjSystem& sys, const GenPoly* xi,
                            const CountOptions& options) {
  if (sys.polys.empty())
    throw std::invalid_argument("count_roots: empty system");
  RootCountReport report;
  report.ideal_generators = build_conjugate_ideal(sys);
  auto t0 = std::chrono::steady_clock::now();
  report.groebner = buchberger(report.ideal_generators);
  if (options.times) options.times->groebner_ms = ms_since(t0);

  QuotientBasis basis;
  try {
    basis = standard_monomials(*report.groebner);
  } catch (const NotZeroDimensional&) {
    report.kind = CountKind::Infinite;
    report.flags.push_back(
        "not zero dimensional: infinitely many solutions");
    return report;
  }
  report.quotient_dim = basis.dimension();

  GenPoly one = GenPoly::constant(sys.num_vars, 1);
  const GenPoly& xi_poly = xi ? *xi : one;
  t0 = std::chrono::steady_clock::now();
  HermitianMatrix H =
      hermitian_killing_form(*report.groebner, basis, xi_poly, options.fill_mode);
  if (options.times) options.times->form_ms = ms_since(t0);
  t0 = std::chrono::steady_clock::now();
  report.signature = signature_of(H.entries);
  if (options.times) options.times->signature_ms = ms_since(t0);
  report.count = report.signature.difference();
  report.rank = report.signature.rank();
  if (options.with_minors)
    report.minors = H.entries.leading_principal_minors();
  report.form = std::move(H);

  if (xi && !(xi_poly == one))
    report.flags.push_back(
        "nonconstant xi: per-sign eigenvalue statements assume the xi "
        "evaluations are pairwise distinct (not verified)");

  if (sys.polys.size() == 1 && sys.num_vars == 1) {
    if (auto inst = detect_harmonic(sys.polys.front());
        inst && inst->n >= 2 && inst->m() + 2 <= inst->n)
      report.bound = harmonic_bound(*inst).bound;
  }
  return report;
}

void HarmonicInstance::trim() {
  while (!b.empty() && b.back().is_zero()) b.pop_back();
}

GenPoly HarmonicInstance::to_poly() const {
  GenPoly h = GenPoly::variable_w(1, 0, n);
  for (unsigned s = 0; s < n; ++s)
    if (!a[s].is_zero())
      h += GenPoly::term(1, Monomial::unit(2, 1, s), a[s]);
  for (unsigned j = 1; j <= m(); ++j)
    if (!b[j - 1].is_zero())
      h += GenPoly::term(1, Monomial::unit(2, 0, j), b[j - 1]);
  return h;
}

std::optional<HarmonicInstance> detect_harmonic(const GenPoly& p) {
  if (p.num_vars() != 1 || p.is_zero()) return std::nullopt;
  std::uint32_t dz = 0, dw = 0;
  for (const auto& [mono, c] : p.terms()) {
    if (mono.exp(0) > 0 && mono.exp(1) > 0) return std::nullopt;  // mixed term
    dz = std::max(dz, mono.exp(0));
    dw = std::max(dw, mono.exp(1));
  }
  if (dw == 0 && dz == 0) return std::nullopt;  // constant
  if (dz > dw) return detect_harmonic(p.star());

  HarmonicInstance inst;
  inst.n = dw;
  GaussianRational lead = p.coeff(Monomial::unit(2, 1, dw));
  GenPoly monic = (GaussianRational(1) / lead) * p;
  inst.a.assign(inst.n, GaussianRational(0));
  for (unsigned s = 0; s < inst.n; ++s)
    inst.a[s] = s == 0 ? monic.coeff(Monomial(2))
                       : monic.coeff(Monomial::unit(2, 1, s));
  inst.b.assign(dz, GaussianRational(0));
  for (unsigned j = 1; j <= dz; ++j)
    inst.b[j - 1] = monic.coeff(Monomial::unit(2, 0, j));
  inst.trim();
  return inst;
}

HarmonicTraces harmonic_traces(const HarmonicInstance& inst) {
  const unsigned n = inst.n;
  if (n < 2 || inst.m() + 1 > n)
    throw UnsupportedShape("harmonic_traces: needs n >= 2 and m <= n-1");
  const GaussianRational& an1 = inst.a[n - 1];
  const GaussianRational& an2 = inst.a[n - 2];
  GaussianRational nn{Rational(static_cast<long>(n))};
  HarmonicTraces t;
  t.tr_w = -(nn * an1);
  t.tr_w2 = nn * (an1 * an1 - GaussianRational(2) * an2);
  // n = 2, m = 1 corner: reducing z^2 back into the quotient feeds
  // b_1 conj(a_1) onto two diagonal entries (w^2 reaches around the box
  // corner exactly when n = 2). Verified against variety power sums.
  if (n == 2 && inst.m() == 1)
    t.tr_w2 += GaussianRational(2) * inst.b[0] * inst.a[1].conj();
  t.tr_zw = GaussianRational(an1.norm());
  if (inst.m() + 1 == n) {
    GaussianRational factor{Rational(static_cast<long>(2 * n - 1))};
    t.tr_zw += factor * GaussianRational(inst.b[n - 2].norm());
  }
  return t;
}

HarmonicBound harmonic_bound(const HarmonicInstance& inst) {
  const unsigned n = inst.n;
  if (n < 2 || inst.m() + 2 > n)
    throw UnsupportedShape("harmonic_bound: needs n - 2 >= m");
  const GaussianRational& an1 = inst.a[n - 1];
  const GaussianRational& an2 = inst.a[n - 2];
  GaussianRational disc = GaussianRational(Rational(static_cast<long>(n - 1))) *
                              an1 * an1 -
                          GaussianRational(Rational(2L * n)) * an2;
  HarmonicBound out;
  out.degenerate = disc.is_zero();
  out.bound = static_cast<long>(n) * n - (out.degenerate ? 1 : 2);
  return out;
}

GMatrix restricted_form_3x3(const HarmonicInstance& inst) {
  HarmonicTraces t = harmonic_traces(inst);
  const long n = inst.n;
  GMatrix g(3);
  // Basis order [1, z, w]; entry (i, j) = Tr(M_{e_i * star(e_j)}).
  g.at(0, 0) = GaussianRational(Rational(n * n));
  g.at(0, 1) = t.tr_w;          // Tr(M_{star(z)}) = Tr(M_w)
  g.at(0, 2) = t.tr_w.conj();   // Tr(M_z)
  g.at(1, 0) = t.tr_w.conj();
  g.at(1, 1) = t.tr_zw;
  g.at(1, 2) = t.tr_w2.conj();  // Tr(M_{z^2})
  g.at(2, 0) = t.tr_w;
  g.at(2, 1) = t.tr_w2;
  g.at(2, 2) = t.tr_zw;
  return g;
}

FamilyCount family_count(unsigned n, const GaussianRational& a,
                         const GaussianRational& b) {
  if (n < 1) throw std::invalid_argument("family_count: n >= 1 required");
  FamilyCount out;
  if (a.norm() != 1) {
    out.count = b.is_zero() ? 1 : static_cast<long>(n);
    return out;
  }
  // |a| = 1: b/sqrt(a) real <=> u = b^2 conj(a) is real with re(u) >= 0
  // (u = (b/sqrt(a))^2 since a conj(a) = 1).
  GaussianRational u = b * b * a.conj();
  if (u.is_real() && sign_of(u.re()) >= 0)
    out.kind = CountKind::Infinite;
  else
    out.count = 0;
  return out;
}

namespace {

using RatPoly = std::vector<Rational>;  // ascending coefficients

RatPoly rp_mul(const RatPoly& p, const RatPoly& q) {
  RatPoly out(p.size() + q.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

RatPoly rp_pow(const RatPoly& p, unsigned e) {
  RatPoly out{Rational(1)};
  for (unsigned k = 0; k < e; ++k) out = rp_mul(out, p);
  return out;
}

using DPoly = std::vector<double>;

DPoly dp_mul(const DPoly& p, const DPoly& q) {
  DPoly out(p.size() + q.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

DPoly dp_pow(const DPoly& p, unsigned e) {
  DPoly out{1.0};
  for (unsigned k = 0; k < e; ++k) out = dp_mul(out, p);
  return out;
}

Rational rat_pow(Rational base, unsigned e) {
  Rational out(1);
  for (unsigned k = 0; k < e; ++k) out *= base;
  return out;
}

}  // namespace

ConjectureResult conjecture_check(unsigned n, const GaussianRational& a,
                                  const GaussianRational& b) {
  if (n < 2)
    throw std::invalid_argument("conjecture_check: n >= 2 required");
  if (a.norm() == 1)
    throw std::invalid_argument("conjecture_check: |a| != 1 required");

  // Exact characteristic polynomial of K_C^1 for z^n + a w^n + b.
  GenPoly h = GenPoly::variable_z(1, 0, n) +
              a * GenPoly::variable_w(1, 0, n) + GenPoly::constant(1, b);
  RootCountReport rep = count_roots(ConjSystem{{h}, 1});
  if (rep.kind != CountKind::Finite || !rep.form)
    throw std::logic_error("conjecture_check: family quotient not finite");
  std::vector<GaussianRational> p = char_poly(rep.form->entries);
  RatPoly p_exact(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (!p[k].is_real())
      throw std::logic_error("conjecture_check: char poly not real");
    p_exact[k] = p[k].re();
  }

  const Rational alpha = a.norm() - 1;
  const Rational big_b = (b - a * b.conj()).norm();  // |b - a conj(b)|^2
  const Rational n2(static_cast<long>(n) * n);
  const Rational n4 = n2 * n2;
  const unsigned e_pair = n - 1;
  const unsigned e_minus = n * (n - 1) / 2;
  const unsigned e_plus = (n - 1) * (n - 2) / 2;
  const Rational alpha2 = alpha * alpha;

  ConjectureResult out;

  // Sign-completed product: both branches of the "+-" factor appear, which
  // makes every factor rational.
  {
    RatPoly q{Rational(1)};
    q = rp_mul(q, RatPoly{-n2, Rational(1)});                       // (l - n^2)
    q = rp_mul(q, rp_pow(RatPoly{-n4 * big_b, Rational(0), alpha2}, e_pair));
    q = rp_mul(q, rp_pow(RatPoly{-n2 * big_b, alpha2}, e_minus));
    q = rp_mul(q, rp_pow(RatPoly{n2 * big_b, alpha2}, e_plus));
    Rational denom = rat_pow(alpha, 2 * n * (n - 1));
    for (auto& c : q) c /= denom;
    out.exact_product_match = (q.size() == p_exact.size()) && (q == p_exact);

    double err = 0.0;
    if (q.size() == p_exact.size()) {
      for (std::size_t k = 0; k < q.size(); ++k) {
        double pe = p_exact[k].get_d();
        err = std::max(err, std::abs(q[k].get_d() - pe) / (1.0 + std::abs(pe)));
      }
    } else {
      err = 1.0;
    }
    out.float_rel_err = err;
  }

  // Single sign branches over the float embedding; |b - a conj(b)| is
  // irrational in general. A branch fits only if degrees agree.
  const double alpha_d = alpha.get_d();
  const double root_b = std::sqrt(big_b.get_d());
  const double n2d = n2.get_d();
  const double tol = 1e-8 * static_cast<double>(n) * n;
  for (int s : {+1, -1}) {
    DPoly q{1.0};
    q = dp_mul(q, DPoly{-n2d, 1.0});
    q = dp_mul(q, dp_pow(DPoly{s * n2d * root_b, alpha_d}, e_pair));
    q = dp_mul(q, dp_pow(DPoly{-n2d * big_b.get_d(), alpha_d * alpha_d}, e_minus));
    q = dp_mul(q, dp_pow(DPoly{n2d * big_b.get_d(), alpha_d * alpha_d}, e_plus));
    double denom = std::pow(alpha_d, 2.0 * n * (n - 1));
    for (auto& c : q) c /= denom;
    if (q.size() != p_exact.size()) continue;
    bool ok = true;
    for (std::size_t k = 0; k < q.size() && ok; ++k) {
      double pe = p_exact[k].get_d();
      if (std::abs(q[k] - pe) > tol * (1.0 + std::abs(pe))) ok = false;
    }
    if (ok) {
      out.sign_branch = s;
      break;
    }
  }

  out.match = out.exact_product_match || out.sign_branch != 0;
  return out;
}

}  // namespace conjcount
