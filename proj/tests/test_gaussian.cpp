#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace conjcount;

TEST_CASE("rational parsing and canonical form") {
  CHECK(rational_from_string("3/6") == Rational(1, 2));
  CHECK(rational_from_string("-4/2") == Rational(-2));
  CHECK(to_string(rational_from_string("10/15")) == "2/3");
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
}

TEST_CASE("field arithmetic") {
  GaussianRational a(Rational(1, 2), Rational(3));
  GaussianRational b(Rational(-2), Rational(1, 3));
  CHECK((a + b) - b == a);
  CHECK(a * b == b * a);
  CHECK((a / b) * b == a);
  CHECK_THROWS_AS(a / GaussianRational(0), std::domain_error);

  GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
}

TEST_CASE("conjugation and norm") {
  std::mt19937 rng(42);
  for (int t = 0; t < 50; ++t) {
    GaussianRational a = testutil::rand_gaussian(rng);
    CHECK(a.conj().conj() == a);
    GaussianRational n = a * a.conj();
    CHECK(n.is_real());
    CHECK(sign_of(n.re()) >= 0);
    CHECK(n.re() == a.norm());
  }
}

TEST_CASE("denominators stay positive and in lowest terms") {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    GaussianRational a = testutil::rand_gaussian(rng);
    GaussianRational b = testutil::rand_gaussian_nonzero(rng);
    GaussianRational c = a / b + a * b - b;
    for (const Rational* q : {&c.re(), &c.im()}) {
      CHECK(sgn(q->get_den()) > 0);
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), q->get_num().get_mpz_t(), q->get_den().get_mpz_t());
      CHECK(g == 1);
    }
  }
}

TEST_CASE("string rendering") {
  CHECK(GaussianRational(0).str() == "0");
  CHECK(GaussianRational(Rational(3, 2)).str() == "3/2");
  CHECK(GaussianRational(Rational(3, 2), Rational(-1, 3)).str() == "3/2-1/3i");
  CHECK(GaussianRational(Rational(0), Rational(1)).str() == "i");
  CHECK(GaussianRational(Rational(0), Rational(-1)).str() == "-i");
  CHECK(GaussianRational(Rational(1), Rational(2)).str() == "1+2i");
}
