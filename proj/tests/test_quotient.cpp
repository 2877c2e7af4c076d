#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace conjcount;
using testutil::rand_gaussian;
using testutil::rand_genpoly;
using testutil::rand_harmonic;

namespace {

struct Pipeline {
  GroebnerBasis G;
  QuotientBasis basis;
};

Pipeline harmonic_pipeline(const HarmonicInstance& inst) {
  GroebnerBasis G = buchberger(build_conjugate_ideal(inst.to_system()));
  QuotientBasis basis = standard_monomials(G);
  return {std::move(G), std::move(basis)};
}

}  // namespace

TEST_CASE("multiplication by 1 is the identity") {
  std::mt19937 rng(2);
  HarmonicInstance inst = rand_harmonic(rng, 2, 1);
  auto [G, basis] = harmonic_pipeline(inst);
  MultMatrix m = mult_matrix(GenPoly::constant(1, 1), basis, G);
  CHECK(m.entries == GMatrix::identity(basis.dimension()));
}

TEST_CASE("columns hold the reduced coordinates") {
  std::mt19937 rng(4);
  HarmonicInstance inst = rand_harmonic(rng, 2, 1);
  auto [G, basis] = harmonic_pipeline(inst);
  GenPoly f = rand_genpoly(rng);
  MultMatrix m = mult_matrix(f, basis, G);
  for (std::size_t j = 0; j < basis.dimension(); ++j) {
    GenPoly col = normal_form(f * GenPoly::term(1, basis.monomials[j], 1), G);
    for (std::size_t i = 0; i < basis.dimension(); ++i)
      CHECK(m.entries.at(i, j) == col.coeff(basis.monomials[i]));
  }
}

TEST_CASE("f -> M_f is additive and multiplicative") {
  std::mt19937 rng(6);
  HarmonicInstance inst = rand_harmonic(rng, 3, 1);
  auto [G, basis] = harmonic_pipeline(inst);
  for (int t = 0; t < 5; ++t) {
    GenPoly f = rand_genpoly(rng), g = rand_genpoly(rng);
    MultMatrix mf = mult_matrix(f, basis, G);
    MultMatrix mg = mult_matrix(g, basis, G);
    CHECK(mf.entries + mg.entries == mult_matrix(f + g, basis, G).entries);
    CHECK(mf.entries * mg.entries == mult_matrix(f * g, basis, G).entries);
    CHECK(mf.entries * mg.entries == mg.entries * mf.entries);
  }
}

TEST_CASE("M_z M_w = M_zw") {
  std::mt19937 rng(8);
  HarmonicInstance inst = rand_harmonic(rng, 3, 2);
  auto [G, basis] = harmonic_pipeline(inst);
  GenPoly z = GenPoly::variable_z(1, 0), w = GenPoly::variable_w(1, 0);
  CHECK(mult_matrix(z, basis, G).entries * mult_matrix(w, basis, G).entries ==
        mult_matrix(z * w, basis, G).entries);
}

TEST_CASE("trace of the identity is the quotient dimension") {
  std::mt19937 rng(10);
  HarmonicInstance inst = rand_harmonic(rng, 3, 1);
  auto [G, basis] = harmonic_pipeline(inst);
  GaussianRational t = trace_of(GenPoly::constant(1, 1), basis, G);
  CHECK(t == GaussianRational(Rational(9)));
}

TEST_CASE("Tr(M_w) = -2a for the quadratic harmonic pair") {
  // ideal <w^2 + a w + b, z^2 + conj(a) z + conj(b)>
  std::mt19937 rng(12);
  GaussianRational a = rand_gaussian(rng), b = rand_gaussian(rng);
  GenPoly h = GenPoly::variable_w(1, 0, 2) + a * GenPoly::variable_w(1, 0) +
              GenPoly::constant(1, b);
  GroebnerBasis G = buchberger({h, h.star()});
  QuotientBasis basis = standard_monomials(G);
  CHECK(trace_of(GenPoly::variable_w(1, 0), basis, G) == -(GaussianRational(2) * a));
}

TEST_CASE("closed-form traces for n = 3 instances") {
  std::mt19937 rng(14);
  GenPoly w = GenPoly::variable_w(1, 0);
  GenPoly z = GenPoly::variable_z(1, 0);

  SUBCASE("m = 1: Tr(M_zw) = |a_2|^2") {
    HarmonicInstance inst = rand_harmonic(rng, 3, 1);
    auto [G, basis] = harmonic_pipeline(inst);
    CHECK(trace_of(z * w, basis, G) == GaussianRational(inst.a[2].norm()));
  }
  SUBCASE("m = 2 = n-1: Tr(M_zw) gains (2n-1)|b_{n-1}|^2") {
    HarmonicInstance inst = rand_harmonic(rng, 3, 2);
    auto [G, basis] = harmonic_pipeline(inst);
    GaussianRational expect =
        GaussianRational(inst.a[2].norm()) +
        GaussianRational(5) * GaussianRational(inst.b[1].norm());
    CHECK(trace_of(z * w, basis, G) == expect);
  }
  SUBCASE("Tr(M_w), Tr(M_w^2) for m <= n-1") {
    HarmonicInstance inst = rand_harmonic(rng, 3, 2);
    auto [G, basis] = harmonic_pipeline(inst);
    CHECK(trace_of(w, basis, G) == -(GaussianRational(3) * inst.a[2]));
    CHECK(trace_of(w * w, basis, G) ==
          GaussianRational(3) *
              (inst.a[2] * inst.a[2] - GaussianRational(2) * inst.a[1]));
  }
}

TEST_CASE("Tr(M_f) = conj(Tr(M_star(f)))") {
  std::mt19937 rng(16);
  HarmonicInstance inst = rand_harmonic(rng, 2, 1);
  auto [G, basis] = harmonic_pipeline(inst);
  for (int t = 0; t < 10; ++t) {
    GenPoly f = rand_genpoly(rng);
    CHECK(trace_of(f, basis, G) == trace_of(f.star(), basis, G).conj());
  }
}

TEST_CASE("TraceTable agrees with direct traces") {
  std::mt19937 rng(18);
  HarmonicInstance inst = rand_harmonic(rng, 3, 1);
  auto [G, basis] = harmonic_pipeline(inst);
  TraceTable traces(G, basis);
  for (int t = 0; t < 10; ++t) {
    GenPoly f = rand_genpoly(rng, 4, 5);
    CHECK(traces.trace(f) == trace_of(f, basis, G));
  }
}

TEST_CASE("cached monomial matrices equal direct multiplication matrices") {
  std::mt19937 rng(20);
  HarmonicInstance inst = rand_harmonic(rng, 3, 2);
  auto [G, basis] = harmonic_pipeline(inst);
  TraceTable traces(G, basis);
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    MultMatrix direct = mult_matrix(GenPoly::term(1, basis.monomials[i], 1), basis, G);
    CHECK(traces.monomial_matrix(i) == direct.entries);
  }
}

TEST_CASE("matrix-walk coordinates equal normal-form coordinates") {
  std::mt19937 rng(24);
  HarmonicInstance inst = rand_harmonic(rng, 3, 2);
  auto [G, basis] = harmonic_pipeline(inst);
  TraceTable traces(G, basis);
  // Cached mirrored coordinates agree with reducing star(gamma) directly.
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    GenPoly starred = GenPoly::term(1, basis.monomials[i].star(), 1);
    CHECK(traces.star_coords(i) == traces.coords(starred));
  }
  // And the generic walk agrees on random polynomials.
  for (int t = 0; t < 10; ++t) {
    GenPoly f = rand_genpoly(rng, 5, 4);
    CHECK(traces.coords_via_matrices(f) == traces.coords(f));
  }
}
