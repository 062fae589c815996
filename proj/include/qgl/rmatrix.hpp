#pragma once
// The standard GL-type braid R-matrix, its inverse, the two Hecke
// projectors, and leg-embedding helpers for multi-leg identities.

#include <utility>

#include "qgl/matrix.hpp"

namespace qgl {

struct BadLegIndex : std::runtime_error {
  explicit BadLegIndex(const std::string& what) : std::runtime_error(what) {}
};
struct HeckeViolation : std::runtime_error {
  HeckeViolation() : std::runtime_error("matrix does not satisfy the Hecke condition") {}
};

// Index-pair flattening used across the whole library (0-based):
// (i,j) -> i*n + j on n^2, and ((k,m),(l,p)) -> ((k*n+m)*n+l)*n+p on n^4.
inline int p2(int n, int i, int j) { return i * n + j; }
inline int p4(int n, int k, int m, int l, int p) {
  return ((k * n + m) * n + l) * n + p;
}

// R = q sum_i E_ii x E_ii + sum_{i != j} E_ij x E_ji + lambda sum_{i<j} E_ii x E_jj.
Mat build_r(int n);

// R - lambda*Id; throws HeckeViolation when (R - q)(R + q^-1) != 0.
Mat r_inverse(const Mat& r);

// (P_q, P_{-1/q}) = ((R + q^-1)/(q + q^-1), (q - R)/(q + q^-1)).
std::pair<Mat, Mat> hecke_projectors(const Mat& r);

// Embed an n^2 x n^2 operator onto adjacent legs (first, first+1) of a
// `legs`-fold tensor power of the n-dimensional space.
Mat embed_two_legs(const Mat& op, int n, int legs, int first);

struct BraidHeckeResult {
  int braid_residual_nonzeros = 0;
  int hecke_residual_nonzeros = 0;
  bool ok() const { return braid_residual_nonzeros == 0 && hecke_residual_nonzeros == 0; }
};

BraidHeckeResult check_braid_hecke(const Mat& r, int n);

}  // namespace qgl
