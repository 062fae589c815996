#include "qgl/bimodule.hpp"

namespace qgl {

Mat two_sided(const Mat& a, const Mat& b, int n) {
  int n4 = n * n * n * n;
  Mat m(n4, n4);
  for (int k = 0; k < n; ++k)
    for (int mm = 0; mm < n; ++mm)
      for (int l = 0; l < n; ++l)
        for (int p = 0; p < n; ++p) {
          int col = p4(n, k, mm, l, p);
          for (int aa = 0; aa < n; ++aa)
            for (int bb = 0; bb < n; ++bb) {
              const Scalar& ra = a.at(p2(n, k, l), p2(n, aa, bb));
              if (ra.is_zero()) continue;
              for (int cc = 0; cc < n; ++cc)
                for (int dd = 0; dd < n; ++dd) {
                  const Scalar& rb = b.at(p2(n, cc, dd), p2(n, mm, p));
                  if (!rb.is_zero())
                    m.at(p4(n, aa, cc, bb, dd), col) += ra * rb;
                }
            }
        }
  return m;
}

Mat lambda_dt(int n) {
  Mat r = build_r(n);
  return two_sided(r, r_inverse(r), n);
}

Projectors build_projectors(int n) {
  Mat r = build_r(n);
  auto [pq, pm] = hecke_projectors(r);
  Projectors pr{two_sided(pq, pq, n), two_sided(pm, pm, n),
                two_sided(pq, pm, n), two_sided(pm, pq, n)};
  return pr;
}

Mat pi_map(const Projectors& pr) {
  Scalar one(1);
  return pr.p3.scaled(one + Scalar::q(2)) + pr.p4.scaled(one + Scalar::q(-2));
}

Mat pi_section(const Projectors& pr) {
  Scalar one(1);
  return pr.p3.scaled((one + Scalar::q(2)).inverse()) +
         pr.p4.scaled((one + Scalar::q(-2)).inverse());
}

Mat sigma_family(const Projectors& pr, const GPParams& params) {
  if (params.lambda1.is_zero() || params.lambda2.is_zero())
    throw NotAutomorphism("sigma family parameter is zero");
  return pr.p1.scaled(params.lambda1) + pr.p2.scaled(params.lambda2) -
         pr.p3 - pr.p4;
}

Mat sigma_from_alphas(int n, const AlphaCoeffs& a) {
  Mat r = build_r(n);
  Mat id = Mat::identity(n * n);
  return two_sided(id, id, n).scaled(a.a00) + two_sided(id, r, n).scaled(a.a01) +
         two_sided(r, id, n).scaled(a.a10) + two_sided(r, r, n).scaled(a.a11);
}

bool alpha_constraints_hold(const AlphaCoeffs& a) {
  if (a.a01 != a.a10) return false;
  return a.a00 + Scalar::lambda() * a.a10 - a.a11 == Scalar(-1);
}

GPParams alphas_to_eigenvalues(const AlphaCoeffs& a) {
  Scalar nu = Scalar::nu();
  Scalar one(1);
  return {Scalar(-1) + a.a10 * nu + a.a11 * (one + Scalar::q(2)),
          Scalar(-1) - a.a10 * nu + a.a11 * (one + Scalar::q(-2))};
}

AlphaCoeffs eigenvalues_to_alphas(const GPParams& params) {
  // Invert the 2x2 system for (a10, a11); the determinant is nu^3 != 0.
  Scalar nu = Scalar::nu();
  Scalar one(1);
  Scalar b1 = params.lambda1 + one;
  Scalar b2 = params.lambda2 + one;
  Scalar det = nu * (one + Scalar::q(-2)) + nu * (one + Scalar::q(2));
  Scalar a10 = (b1 * (one + Scalar::q(-2)) - b2 * (one + Scalar::q(2))) / det;
  Scalar a11 = (b2 * nu + b1 * nu) / det;
  AlphaCoeffs a;
  a.a10 = a10;
  a.a01 = a10;
  a.a11 = a11;
  a.a00 = Scalar(-1) - Scalar::lambda() * a10 + a11;
  return a;
}

bool gp_predicate(const Mat& s, const Mat& lambda) {
  Mat id = Mat::identity(s.rows());
  if (!((id - lambda) * (s + id)).is_zero()) return false;
  return s.is_invertible();
}

Mat gp_affine(const Mat& s, const Mat& s_prime, const Scalar& mu, const Scalar& mu_prime) {
  Mat id = Mat::identity(s.rows());
  Mat m = (s + id).scaled(mu) + (s_prime + id).scaled(mu_prime) - id;
  if (!m.is_invertible()) throw NotAutomorphism("affine combination is singular");
  return m;
}

}  // namespace qgl
