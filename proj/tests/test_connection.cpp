#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgl/connection.hpp"

using namespace qgl;

namespace {

const Geometry& geo2() {
  static Geometry g(2);
  return g;
}

GPParams inverse_pair() { return {Scalar::q(-2), Scalar::q(2)}; }

}  // namespace

TEST_CASE("anchor identity for n = 1 and 2") {
  CHECK(anchor_residual_nonzeros(Geometry(1)) == 0);
  CHECK(anchor_residual_nonzeros(geo2()) == 0);
}

TEST_CASE("n = 1 connection coefficient is -1") {
  Geometry g(1);
  Mat nb = nabla0(g, g.sigma_omega(inverse_pair()));
  CHECK(nb.rows() == 1);
  CHECK(nb.at(0, 0) == Scalar(-1));
}

TEST_CASE("torsion vanishes for family members and detects perturbations") {
  const Geometry& g = geo2();
  for (const GPParams& p : {inverse_pair(), GPParams{Scalar(1), Scalar(1)},
                            GPParams{Scalar(-1), Scalar(-1)}}) {
    Mat nb = nabla0(g, g.sigma_omega(p));
    CHECK(torsion(g, nb).is_zero());
  }
  Mat nb = nabla0(g, g.sigma_omega(inverse_pair()));
  // perturb along a direction with a nonzero wedge image
  int row = -1;
  for (int r = 0; r < g.n4() && row < 0; ++r)
    for (int rr = 0; rr < g.n4(); ++rr)
      if (!g.pi_w().at(rr, r).is_zero()) {
        row = r;
        break;
      }
  REQUIRE(row >= 0);
  nb.at(row, 0) = nb.at(row, 0) + Scalar(1);
  CHECK(torsion(g, nb).nonzero_count() > 0);
}

TEST_CASE("Leibniz-form sign resolves to +1 in both bases") {
  const Geometry& g = geo2();
  for (const GPParams& p : {inverse_pair(), GPParams{Scalar(1), Scalar(1)}}) {
    SignResolution sr = resolve_leibniz_signs(g, p);
    CHECK(sr.omega_sign == 1);
    CHECK(sr.eta_sign == 1);
  }
}

TEST_CASE("closed form resolves with the wedge image convention") {
  const Geometry& g = geo2();
  for (const GPParams& p : {inverse_pair(), GPParams{Scalar(1), Scalar(1)}}) {
    ClosedFormResolution r = resolve_closed_form(g, p);
    CHECK(r.exact);
    CHECK(r.conv == WedgeConvention::pi_image);
    CHECK(r.wedge_sign == 1);
  }
}

TEST_CASE("staircase extension sign is -1") {
  const Geometry& g = geo2();
  Mat sw = g.sigma_omega(inverse_pair());
  Mat nb = nabla0(g, sw);
  CHECK((extend2(g, sw, nb) - staircase2(g, sw, -1)).is_zero());
  CHECK_FALSE((extend2(g, sw, nb) - staircase2(g, sw, +1)).is_zero());
}

TEST_CASE("3-fold extension bracketings agree") {
  const Geometry& g = geo2();
  Mat sw = g.sigma_omega(inverse_pair());
  Mat nb = nabla0(g, sw);
  CHECK((extend3(g, sw, nb) - extend3_assoc(g, sw, nb)).is_zero());
}

TEST_CASE("curvature snapshot: the canonical connection is flat") {
  const Geometry& g = geo2();
  Mat sw = g.sigma_omega(inverse_pair());
  Mat nb = nabla0(g, sw);
  Mat curv = curvature(g, sw, nb);
  CHECK(curv.is_zero());
  CHECK(matrix_hash(curv) == "14650fb0739d0383");
  // the hash depends only on the nonzero content
  CHECK(matrix_hash(curv) == matrix_hash(Mat(curv.rows(), curv.cols())));
  CHECK(matrix_hash(nb) != matrix_hash(curv));
}

TEST_CASE("metric system for the inverse pair has no solutions at n = 2") {
  const Geometry& g = geo2();
  Mat sw = g.sigma_omega(inverse_pair());
  MetricSolution ms = metric_solver(g, sw, nabla0(g, sw));
  CHECK(ms.dimension() == 0);
  // but the symmetric subspace alone is 10-dimensional
  CHECK(g.pi_w().nullspace().size() == 10);
}

TEST_CASE("uniqueness system has trivial nullspace") {
  CHECK(uniqueness_nullspace_dim(geo2()) == 0);
  CHECK(uniqueness_fullrank_modp(2));
}

TEST_CASE("commutative limits") {
  const Geometry& g = geo2();
  LimitResult sym = commutative_limit(g, {Scalar(1), Scalar(1)});
  CHECK(sym.finite);
  CHECK(sym.match);
  CHECK(sym.gamma0 == 0);
  CHECK(sym.mu0 == 0);

  LimitResult inv = commutative_limit(g, inverse_pair());
  CHECK(inv.finite);
  CHECK(inv.match);
  CHECK(inv.mu1 == -1);
  CHECK(inv.mu2 == 1);
  CHECK(inv.gamma0 == 1);
  CHECK(inv.mu0 == 0);
  // the limit is -omega^i_k (x) omega^k_j
  int n = 2, n2 = 4;
  for (int r4 = 0; r4 < n2 * n2; ++r4)
    for (int c2 = 0; c2 < n2; ++c2) {
      int i = c2 / n, j = c2 % n;
      Rat expect(0);
      for (int k = 0; k < n; ++k)
        if (r4 == p4(n, i, k, k, j)) expect -= 1;
      CHECK(inv.evaluated[r4][c2] == expect);
    }

  Poly den;
  den.c = {Rat(-1), Rat(1)};
  LimitResult bad = commutative_limit(g, {Scalar(Poly::q(), den), Scalar(1)});
  CHECK_FALSE(bad.finite);
  CHECK_FALSE(bad.singular_reason.empty());
}
