#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "conjcount/oracle.hpp"
#include "test_util.hpp"

using namespace conjcount;
using testutil::rand_harmonic;
using C = std::complex<double>;

namespace {

GenPoly z(std::uint32_t e = 1) { return GenPoly::variable_z(1, 0, e); }
GenPoly w(std::uint32_t e = 1) { return GenPoly::variable_w(1, 0, e); }

bool contains_root(const std::vector<C>& roots, C v, double tol = 1e-9) {
  return std::any_of(roots.begin(), roots.end(),
                     [&](C r) { return std::abs(r - v) <= tol; });
}

std::vector<NumericSolution> solve(const ConjSystem& sys) {
  auto gens = build_conjugate_ideal(sys);
  GroebnerBasis G = buchberger(gens);
  return solve_numeric(gens, G);
}

}  // namespace

TEST_CASE("aberth on factored polynomials") {
  // l^2 - 3l + 2 = (l-1)(l-2)
  auto r1 = aberth_roots({2.0, -3.0, 1.0});
  REQUIRE(r1.size() == 2);
  CHECK(contains_root(r1, 1.0));
  CHECK(contains_root(r1, 2.0));

  // l^3 - 1: cube roots of unity
  auto r2 = aberth_roots({-1.0, 0.0, 0.0, 1.0});
  REQUIRE(r2.size() == 3);
  CHECK(contains_root(r2, 1.0));
  CHECK(contains_root(r2, std::polar(1.0, 2.0 * M_PI / 3.0)));
  CHECK(contains_root(r2, std::polar(1.0, -2.0 * M_PI / 3.0)));
}

TEST_CASE("aberth rejects bad input") {
  CHECK_THROWS_AS(aberth_roots({1.0}), std::invalid_argument);
  CHECK_THROWS_AS(aberth_roots({1.0, 2.0, 0.0}), std::invalid_argument);
}

TEST_CASE("eliminant roots of the worked system") {
  // The LEX basis of <z^2 + w, w^2 + z> contains w^4 + w, with roots
  // 0, -1, e^{i pi/3}, e^{-i pi/3}.
  GenPoly h = z(2) + w();
  GroebnerBasis G = buchberger({h, h.star()});
  const GenPoly* eliminant = nullptr;
  for (const auto& g : G.generators()) {
    bool w_only = true;
    for (const auto& [m, c] : g.terms())
      if (m.exp(0) > 0) w_only = false;
    if (w_only && g.total_degree() >= 1) eliminant = &g;
  }
  REQUIRE(eliminant != nullptr);
  std::vector<C> coeffs(eliminant->total_degree() + 1, 0.0);
  for (const auto& [m, c] : eliminant->terms())
    coeffs[m.exp(1)] = c.to_complex();
  auto roots = aberth_roots(coeffs);
  REQUIRE(roots.size() == 4);
  CHECK(contains_root(roots, 0.0));
  CHECK(contains_root(roots, -1.0));
}

TEST_CASE("solve_numeric on point systems") {
  // {z - c, w - conj(c)}: the single point (c, conj c).
  C c(0.5, -1.25);
  GenPoly g = z() - GenPoly::constant(1, GaussianRational(Rational(1, 2),
                                                          Rational(-5, 4)));
  auto sols = solve({{g}, 1});
  REQUIRE(sols.size() == 1);
  CHECK(std::abs(sols[0].z[0] - c) <= 1e-10);
  CHECK(std::abs(sols[0].w[0] - std::conj(c)) <= 1e-10);
  CHECK(sols[0].is_single);
}

TEST_CASE("solve_numeric recovers the four worked roots") {
  auto sols = solve({{z(2) + w()}, 1});
  REQUIRE(sols.size() == 4);
  std::vector<C> zs;
  for (const auto& s : sols) {
    CHECK(s.is_single);
    zs.push_back(s.z[0]);
  }
  CHECK(contains_root(zs, 0.0, 1e-8));
  CHECK(contains_root(zs, -1.0, 1e-8));
  CHECK(contains_root(zs, std::polar(1.0, M_PI / 3.0), 1e-8));
  CHECK(contains_root(zs, std::polar(1.0, -M_PI / 3.0), 1e-8));
}

TEST_CASE("solve_numeric on a linear instance") {
  // z + 2 conj(z) + 1 = 0 has the single root z = -1/3.
  GenPoly g = z() + GaussianRational(2) * w() + GenPoly::constant(1, 1);
  auto sols = solve({{g}, 1});
  REQUIRE(sols.size() == 1);
  CHECK(std::abs(sols[0].z[0] - C(-1.0 / 3.0, 0.0)) <= 1e-10);
  CHECK(sols[0].is_single);
}

TEST_CASE("oracle_count on worked systems") {
  auto sols = solve({{z(2) + w()}, 1});
  OracleCount oc = oracle_count(sols);
  CHECK(oc.singles == 4);
  CHECK(oc.pairs == 0);
  CHECK(oc.total_distinct == 4);

  auto origin = solve({{z(), w()}, 1});
  OracleCount oc2 = oracle_count(origin);
  CHECK(oc2.singles == 1);
  CHECK(oc2.total_distinct == 1);
}

TEST_CASE("associated pairs are detected and counted") {
  // z^2 + 1: conjugate ideal <z^2 + 1, w^2 + 1> has singles (i,-i), (-i,i)
  // and the associated pair {(i,i), (-i,-i)}.
  GenPoly g = z(2) + GenPoly::constant(1, 1);
  auto sols = solve({{g}, 1});
  REQUIRE(sols.size() == 4);
  OracleCount oc = oracle_count(sols);
  CHECK(oc.singles == 2);
  CHECK(oc.pairs == 1);
  CHECK(oc.total_distinct == 4);
}

TEST_CASE("residuals stay within the acceptance envelope") {
  std::mt19937 rng(61);
  OracleTolerances tol;
  for (int t = 0; t < 3; ++t) {
    HarmonicInstance inst = rand_harmonic(rng, 3, 1);
    ConjSystem sys = inst.to_system();
    auto gens = build_conjugate_ideal(sys);
    double coeff_scale = 0.0;
    for (const auto& g : gens)
      for (const auto& [m, c] : g.terms())
        coeff_scale = std::max(coeff_scale, std::abs(c.to_complex()));
    for (const auto& s : solve(sys))
      CHECK(s.residual <= tol.residual * (1.0 + coeff_scale));
  }
}

TEST_CASE("solution sets close under the associated-pair map") {
  std::mt19937 rng(67);
  for (int t = 0; t < 3; ++t) {
    HarmonicInstance inst = rand_harmonic(rng, 3, 2);
    auto sols = solve(inst.to_system());
    for (const auto& s : sols) {
      C pz = std::conj(s.w[0]), pw = std::conj(s.z[0]);
      bool found = false;
      for (const auto& other : sols)
        if (std::abs(other.z[0] - pz) + std::abs(other.w[0] - pw) <= 1e-6 *
            (1.0 + std::abs(pz)))
          found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("totals are invariant under unit-modulus rescaling") {
  // h = z^2 + a conj(z): substituting z -> u z with |u| = 1 maps the family
  // to itself with a' = a * conj(u)^3.
  std::mt19937 rng(71);
  GaussianRational u{Rational(3, 5), Rational(4, 5)};
  GaussianRational a = testutil::rand_gaussian_nonzero(rng);
  GaussianRational a2 = a * u.conj() * u.conj() * u.conj();

  auto count_for = [&](const GaussianRational& coef) {
    GenPoly h = z(2) + coef * w();
    auto sols = solve({{h}, 1});
    return oracle_count(sols);
  };
  OracleCount c1 = count_for(a);
  OracleCount c2 = count_for(a2);
  CHECK(c1.singles == c2.singles);
  CHECK(c1.pairs == c2.pairs);
  CHECK(c1.total_distinct == c2.total_distinct);
}

TEST_CASE("oracle totals match the exact pipeline on random instances") {
  std::mt19937 rng(73);
  for (int t = 0; t < 3; ++t) {
    HarmonicInstance inst = rand_harmonic(rng, 3, 1);
    RootCountReport rep = count_roots(inst.to_system());
    REQUIRE(rep.kind == CountKind::Finite);
    auto sols = solve_numeric(rep.ideal_generators, *rep.groebner);
    OracleCount oc = oracle_count(sols);
    CHECK(static_cast<long>(oc.singles) == rep.count);
    CHECK(oc.total_distinct == rep.rank);
  }
}
