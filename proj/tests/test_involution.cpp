#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgl/involution.hpp"

using namespace qgl;

namespace {
const Cplx kQ0 = std::polar(1.0, 0.73);  // generic unit-circle sample
}

TEST_CASE("complex matrix helpers") {
  ZMat id = ZMat::identity(3);
  CHECK(max_abs(zsub(zmul(id, id), id)) == 0.0);
  ZMat a(2, 2);
  a.at(0, 1) = Cplx(0.0, 2.0);
  CHECK(max_abs(a) == 2.0);
  CHECK(zconj(a).at(0, 1) == Cplx(0.0, -2.0));
}

TEST_CASE("specialization evaluates entries and flags poles") {
  Mat m(1, 1);
  m.at(0, 0) = Scalar::lambda();
  ZMat z = specialize(m, Cplx(2.0, 0.0));
  CHECK(std::abs(z.at(0, 0) - Cplx(1.5, 0.0)) < 1e-14);
  Mat pole(1, 1);
  pole.at(0, 0) = Scalar::parse("1/(q - 1)");
  CHECK_THROWS_AS(specialize(pole, Cplx(1.0, 0.0)), PoleAtPoint);
}

TEST_CASE("swap_factors is the permutation of pair slots") {
  ZMat p = swap_factors(2);
  CHECK(max_abs(zsub(zmul(p, p), ZMat::identity(16))) == 0.0);
  CHECK(p.at(p4(2, 1, 0, 0, 1), p4(2, 0, 1, 1, 0)) == Cplx(1.0, 0.0));
}

TEST_CASE("star squares to one exactly when the parameters are unimodular") {
  for (int n = 1; n <= 2; ++n) {
    ZMat good = sigma_numeric(n, kQ0, std::polar(1.0, 0.4), std::polar(1.0, -0.9));
    CHECK(star_square_residual(good, n) < 1e-10);
    ZMat bad = sigma_numeric(n, kQ0, Cplx(2.0, 0.0), std::polar(1.0, -0.9));
    CHECK(star_square_residual(bad, n) > 1e-3);
  }
}

TEST_CASE("conjugation commutes with the spectral projectors") {
  CHECK(alpha_projector_residual(2, kQ0) < 1e-10);
  CHECK(alpha_projector_residual(2, std::polar(1.0, 2.2)) < 1e-10);
}

TEST_CASE("reality dichotomy") {
  // flips are real, the inverse pair is not
  ZMat flip = sigma_numeric(2, kQ0, Cplx(1.0, 0.0), Cplx(1.0, 0.0));
  CHECK(reality_residual(flip, 2) < 1e-10);
  ZMat neg = sigma_numeric(2, kQ0, Cplx(-1.0, 0.0), Cplx(-1.0, 0.0));
  CHECK(reality_residual(neg, 2) < 1e-10);
  Cplx q2 = kQ0 * kQ0;
  ZMat inv = sigma_numeric(2, kQ0, 1.0 / q2, q2);
  CHECK(reality_residual(inv, 2) > 1e-3);
}

TEST_CASE("conjugate-R identity on and off the unit circle") {
  for (int n = 2; n <= 3; ++n) CHECK(rbar_residual(n, kQ0) < 1e-12);
  CHECK(rbar_residual(2, Cplx(1.5, 0.0)) > 1e-3);
}
