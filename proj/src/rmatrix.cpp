#include "qgl/rmatrix.hpp"

namespace qgl {

Mat build_r(int n) {
  int n2 = n * n;
  Mat r(n2, n2);
  Scalar qv = Scalar::q();
  Scalar lam = Scalar::lambda();
  for (int i = 0; i < n; ++i) r.at(p2(n, i, i), p2(n, i, i)) = qv;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) r.at(p2(n, i, j), p2(n, j, i)) = Scalar(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) r.at(p2(n, i, j), p2(n, i, j)) = lam;
  return r;
}

Mat r_inverse(const Mat& r) {
  int n2 = r.rows();
  Mat id = Mat::identity(n2);
  Mat hecke = (r - id.scaled(Scalar::q())) * (r + id.scaled(Scalar::q(-1)));
  if (!hecke.is_zero()) throw HeckeViolation();
  return r - id.scaled(Scalar::lambda());
}

std::pair<Mat, Mat> hecke_projectors(const Mat& r) {
  int n2 = r.rows();
  Mat id = Mat::identity(n2);
  Scalar inv_nu = Scalar::nu().inverse();
  Mat pq = (r + id.scaled(Scalar::q(-1))).scaled(inv_nu);
  Mat pm = (id.scaled(Scalar::q()) - r).scaled(inv_nu);
  return {pq, pm};
}

Mat embed_two_legs(const Mat& op, int n, int legs, int first) {
  if (first < 0 || first + 2 > legs)
    throw BadLegIndex("leg " + std::to_string(first) + " of " + std::to_string(legs));
  int left = 1, right = 1;
  for (int i = 0; i < first; ++i) left *= n;
  for (int i = first + 2; i < legs; ++i) right *= n;
  Mat m = Mat::kron(Mat::identity(left), op);
  return Mat::kron(m, Mat::identity(right));
}

BraidHeckeResult check_braid_hecke(const Mat& r, int n) {
  BraidHeckeResult res;
  Mat r12 = embed_two_legs(r, n, 3, 0);
  Mat r23 = embed_two_legs(r, n, 3, 1);
  Mat braid = r23 * r12 * r23 - r12 * r23 * r12;
  res.braid_residual_nonzeros = braid.nonzero_count();
  Mat id = Mat::identity(r.rows());
  Mat hecke = (r - id.scaled(Scalar::q())) * (r + id.scaled(Scalar::q(-1)));
  res.hecke_residual_nonzeros = hecke.nonzero_count();
  return res;
}

}  // namespace qgl
