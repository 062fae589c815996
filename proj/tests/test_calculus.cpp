#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgl/frep.hpp"

using namespace qgl;

namespace {

Vec basis_vec(int dim, int k) {
  Vec v(dim);
  v[k] = Scalar(1);
  return v;
}

}  // namespace

TEST_CASE("functional representation is convolution-invertible") {
  for (int n = 1; n <= 2; ++n) {
    FRep f(n);
    int n2 = n * n;
    Mat id = Mat::identity(n2);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Mat s1(n2, n2), s2(n2, n2);
        for (int s = 0; s < n; ++s) {
          s1 = s1 + f.rho(a, s) * f.rho_kappa(s, b);
          s2 = s2 + f.rho_kappa(a, s) * f.rho(s, b);
        }
        Mat target = (a == b) ? id : Mat(n2, n2);
        CHECK(s1 == target);
        CHECK(s2 == target);
      }
  }
}

TEST_CASE("rho entries at n = 1") {
  FRep f(1);
  // single generator: both R-inverse factors contribute q^-1
  CHECK(f.rho(0, 0).at(0, 0) == Scalar::q(-2));
  CHECK(f.rho_kappa(0, 0).at(0, 0) == Scalar::q(2));
}

TEST_CASE("basis changes are invertible") {
  for (int n = 1; n <= 2; ++n) {
    FRep f(n);
    Mat w = build_w(f);
    Mat we = build_w_eta(n);
    CHECK(w.is_invertible());
    CHECK(we.is_invertible());
  }
}

TEST_CASE("braiding transport routes agree") {
  for (int n = 1; n <= 2; ++n) {
    FRep f(n);
    Mat w = build_w(f);
    CHECK(lambda_omega(f, w, Route::conjugation) == lambda_omega(f, w, Route::direct));
  }
}

TEST_CASE("theta coefficients") {
  Vec t2 = theta_omega(2);
  CHECK(t2[p2(2, 0, 0)] == -Scalar::q(3) / Scalar::lambda());
  CHECK(t2[p2(2, 1, 1)] == -Scalar::q(1) / Scalar::lambda());
  CHECK(t2[p2(2, 0, 1)].is_zero());
  Vec e2 = theta_eta(2);
  CHECK(e2[p2(2, 0, 0)] == -Scalar::q(-1) / Scalar::lambda());
  CHECK(e2[p2(2, 1, 1)] == -Scalar::q(1) / Scalar::lambda());
  // lambda * theta stays finite as q -> 1 even though theta itself does not
  CHECK_FALSE(t2[0].finite_at_one());
  CHECK((t2[0] * Scalar::lambda()).finite_at_one());
}

TEST_CASE("theta swap identities") {
  for (int n = 1; n <= 2; ++n) {
    FRep f(n);
    Mat w = build_w(f);
    Mat lam_w = lambda_omega(f, w, Route::conjugation);
    Vec th = theta_omega(n);
    int n2 = n * n;
    for (int c = 0; c < n2; ++c) {
      Vec e = basis_vec(n2, c);
      Vec lhs = lam_w.apply(tensor_vec(e, th));
      Vec rhs = tensor_vec(th, e);
      for (size_t i = 0; i < lhs.size(); ++i) CHECK(lhs[i] == rhs[i]);
    }
  }
}

TEST_CASE("tensor_vec flattening") {
  Vec x = basis_vec(4, 1);
  Vec y = basis_vec(4, 2);
  Vec t = tensor_vec(x, y);
  CHECK(t.size() == 16);
  CHECK(t[1 * 4 + 2] == Scalar(1));
  int nz = 0;
  for (const Scalar& s : t)
    if (!s.is_zero()) ++nz;
  CHECK(nz == 1);
}

TEST_CASE("exterior derivative at n = 1 kills the single form") {
  FRep f(1);
  Mat w = build_w(f);
  Mat lam_w = lambda_omega(f, w, Route::conjugation);
  Vec d = exterior_d(lam_w, theta_omega(1), basis_vec(1, 0));
  CHECK(d[0].is_zero());
}

TEST_CASE("determinant functional") {
  for (int n = 1; n <= 3; ++n) {
    FRep f(n);
    Mat fd = f_of_qdet(f);
    CHECK(fd == Mat::identity(n * n).scaled(Scalar::q(-2)));
  }
}
