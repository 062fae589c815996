#include "qgl/involution.hpp"

namespace qgl {

ZMat ZMat::identity(int k) {
  ZMat m(k, k);
  for (int i = 0; i < k; ++i) m.at(i, i) = 1.0;
  return m;
}

ZMat zmul(const ZMat& x, const ZMat& y) {
  ZMat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      Cplx s = x.at(i, k);
      if (s == 0.0) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += s * y.at(k, j);
    }
  return z;
}

ZMat zsub(const ZMat& x, const ZMat& y) {
  ZMat z(x.rows, x.cols);
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] - y.a[i];
  return z;
}

ZMat zconj(const ZMat& x) {
  ZMat z(x.rows, x.cols);
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = std::conj(x.a[i]);
  return z;
}

double max_abs(const ZMat& x) {
  double m = 0.0;
  for (const Cplx& c : x.a) m = std::max(m, std::abs(c));
  return m;
}

ZMat specialize(const Mat& m, Cplx q0) {
  ZMat z(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) z.at(r, c) = m.at(r, c).evaluate(q0);
  return z;
}

ZMat swap_factors(int n) {
  int n4 = n * n * n * n;
  ZMat p(n4, n4);
  for (int k = 0; k < n; ++k)
    for (int m = 0; m < n; ++m)
      for (int l = 0; l < n; ++l)
        for (int pp = 0; pp < n; ++pp)
          p.at(p4(n, l, pp, k, m), p4(n, k, m, l, pp)) = 1.0;
  return p;
}

ZMat sigma_numeric(int n, Cplx q0, Cplx l1, Cplx l2) {
  Projectors pr = build_projectors(n);
  ZMat p1 = specialize(pr.p1, q0);
  ZMat p2 = specialize(pr.p2, q0);
  ZMat p3 = specialize(pr.p3, q0);
  ZMat p4m = specialize(pr.p4, q0);
  ZMat s(p1.rows, p1.cols);
  for (size_t i = 0; i < s.a.size(); ++i)
    s.a[i] = l1 * p1.a[i] + l2 * p2.a[i] - p3.a[i] - p4m.a[i];
  return s;
}

double star_square_residual(const ZMat& sigma, int n) {
  // (sigma o alpha)(v) = sigma * P * conj(v); the square is the linear map
  // sigma * P * conj(sigma * P) = sigma * P * conj(sigma) * P.
  ZMat p = swap_factors(n);
  ZMat j2 = zmul(zmul(sigma, p), zmul(zconj(sigma), p));
  return max_abs(zsub(j2, ZMat::identity(sigma.rows)));
}

double alpha_projector_residual(int n, Cplx q0) {
  Projectors pr = build_projectors(n);
  ZMat p = swap_factors(n);
  double worst = 0.0;
  for (const Mat* m : {&pr.p1, &pr.p2, &pr.p3, &pr.p4}) {
    ZMat z = specialize(*m, q0);
    // alpha o P o alpha is the linear map swap * conj(P) * swap.
    ZMat conj_op = zmul(zmul(p, zconj(z)), p);
    worst = std::max(worst, max_abs(zsub(conj_op, z)));
  }
  return worst;
}

double reality_residual(const ZMat& sigma, int n) {
  // star = sigma o alpha; antilinear maps are represented by their matrix M
  // with action v -> M conj(v).  sigma o star has matrix sigma*sigma*P,
  // star o sigma has matrix sigma*P*conj(sigma).
  ZMat p = swap_factors(n);
  ZMat lhs = zmul(zmul(sigma, sigma), p);
  ZMat rhs = zmul(zmul(sigma, p), zconj(sigma));
  return max_abs(zsub(lhs, rhs));
}

double rbar_residual(int n, Cplx q0) {
  Mat r = build_r(n);
  Mat rinv = r_inverse(r);
  ZMat rz = specialize(r, q0);
  ZMat riz = specialize(rinv, q0);
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Cplx lhs = std::conj(rz.at(p2(n, i, j), p2(n, k, l)));
          Cplx rhs = riz.at(p2(n, j, i), p2(n, l, k));
          worst = std::max(worst, std::abs(lhs - rhs));
        }
  return worst;
}

}  // namespace qgl
