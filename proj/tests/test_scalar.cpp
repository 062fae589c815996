#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qgl/scalar.hpp"

using namespace qgl;

namespace {

// small random scalar (possibly zero numerator is re-rolled for invertibles)
Scalar random_scalar(std::mt19937& rng, bool nonzero) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  auto poly = [&](bool nz) {
    Poly p;
    do {
      p = Poly();
      p.c = {Rat(coeff(rng)), Rat(coeff(rng)), Rat(coeff(rng))};
      p.trim();
    } while (nz && p.is_zero());
    return p;
  };
  return Scalar(poly(nonzero), poly(true));
}

}  // namespace

TEST_CASE("canonical form and formatting") {
  CHECK(Scalar::parse("(q^2-1)/(q-1)").str() == "q + 1");
  CHECK(Scalar::lambda().str() == "(q^2 - 1)/(q)");
  CHECK(Scalar::nu().str() == "(q^2 + 1)/(q)");
  CHECK(Scalar::q(-2).str() == "(1)/(q^2)");
  CHECK(Scalar::parse("2*q^3 - q").str() == "2*q^3 - q");
  CHECK(Scalar(0).str() == "0");
  CHECK((-Scalar::q()).str() == "-q");
  // common integer content and denominator sign are both normalized away
  Poly num;
  num.c = {Rat(2), Rat(2)};
  Poly den(Rat(-2));
  CHECK(Scalar(num, den).str() == "-q - 1");
}

TEST_CASE("parse round-trip") {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    Scalar s = random_scalar(rng, false);
    CHECK(Scalar::parse(s.str()) == s);
  }
  CHECK(Scalar::parse("q^-3") == Scalar::q(-3));
  CHECK(Scalar::parse("(q + 1)^2") == (Scalar::q() + 1) * (Scalar::q() + 1));
  CHECK(Scalar::parse("1/2 * q") == Scalar::q() / Scalar(2));
  CHECK(Scalar::parse("-q^2") == -Scalar::q(2));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(Scalar::parse(""), ParseError);
  CHECK_THROWS_AS(Scalar::parse("q +"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("(q"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("q^x"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
  try {
    Scalar::parse("q @ 1");
  } catch (const ParseError& e) {
    CHECK(e.pos == 2);
  }
}

TEST_CASE("field laws on random elements") {
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    Scalar a = random_scalar(rng, false);
    Scalar b = random_scalar(rng, false);
    Scalar c = random_scalar(rng, false);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == Scalar(0));
    Scalar d = random_scalar(rng, true);
    CHECK(d * d.inverse() == Scalar(1));
    CHECK(d / d == Scalar(1));
  }
}

TEST_CASE("powers") {
  Scalar q = Scalar::q();
  CHECK(q.pow(0) == Scalar(1));
  CHECK(q.pow(5) == Scalar::q(5));
  CHECK(q.pow(-3) == Scalar::q(-3));
  Scalar s = Scalar::parse("(q+1)/(q-1)");
  CHECK(s.pow(2) * s.pow(-2) == Scalar(1));
  CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
}

TEST_CASE("evaluation and poles") {
  Scalar s = Scalar::parse("(q^2 - 1)/(q - 1)");
  CHECK(s.evaluate(Rat(3)) == Rat(4));
  Scalar p = Scalar::parse("1/(q - 2)");
  CHECK_THROWS_AS(p.evaluate(Rat(2)), PoleAtPoint);
  std::complex<double> v = Scalar::q(-1).evaluate(std::complex<double>(2.0, 0.0));
  CHECK(std::abs(v - std::complex<double>(0.5, 0.0)) < 1e-14);
}

TEST_CASE("limit at q = 1") {
  // removable singularity
  CHECK(Scalar::parse("(q^3 - 1)/(q - 1)").limit_at_one() == Rat(3));
  CHECK(Scalar::parse("(q^2 - 1)/(q^2 - 1)").limit_at_one() == Rat(1));
  CHECK(Scalar::lambda().limit_at_one() == Rat(0));
  CHECK(Scalar::parse("q + 2").finite_at_one());
  CHECK_FALSE(Scalar::parse("1/(q - 1)").finite_at_one());
  CHECK_THROWS_AS(Scalar::parse("1/(q - 1)").limit_at_one(), PoleAtPoint);
}

TEST_CASE("polynomial gcd is primitive with positive leading coefficient") {
  Poly a;
  a.c = {Rat(-1), Rat(0), Rat(1)};  // q^2 - 1
  Poly b;
  b.c = {Rat(-2), Rat(2)};  // 2q - 2
  Poly g = poly_gcd(a, b);
  CHECK(g.degree() == 1);
  CHECK(g.coeff(1) == Rat(1));
  CHECK(g.coeff(0) == Rat(-1));
}
