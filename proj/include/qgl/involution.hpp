#pragma once
// Floating-point verification of the |q| = 1 star-structure statements: the
// antilinear coefficient-conjugation + factor-swap map, the unitarity
// condition on the permutation family, reality of flips, and the
// conjugate-R identity.

#include <complex>
#include <vector>

#include "qgl/bimodule.hpp"

namespace qgl {

using Cplx = std::complex<double>;

struct ZMat {
  int rows = 0, cols = 0;
  std::vector<Cplx> a;
  ZMat() = default;
  ZMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
  Cplx& at(int r, int c) { return a[size_t(r) * cols + c]; }
  const Cplx& at(int r, int c) const { return a[size_t(r) * cols + c]; }
  static ZMat identity(int k);
};

ZMat zmul(const ZMat& x, const ZMat& y);
ZMat zsub(const ZMat& x, const ZMat& y);
ZMat zconj(const ZMat& x);
double max_abs(const ZMat& x);

// Entrywise evaluation at q0; throws PoleAtPoint on an exact pole.
ZMat specialize(const Mat& m, Cplx q0);

// Permutation matrix of the factor swap ((k,m),(l,p)) -> ((l,p),(k,m)).
ZMat swap_factors(int n);

// The numeric sigma = l1 P1 + l2 P2 - P3 - P4 at q0.
ZMat sigma_numeric(int n, Cplx q0, Cplx l1, Cplx l2);

// max |(sigma o alpha)^2 - 1| where alpha(v) = swap(conj(v)).
double star_square_residual(const ZMat& sigma, int n);

// max |alpha o P o alpha - P| over the four spectral projectors at q0.
double alpha_projector_residual(int n, Cplx q0);

// max |sigma o star - star o sigma| with star = sigma o alpha.
double reality_residual(const ZMat& sigma, int n);

// max |conj(R^{ij}_{kl}) - (R^-1)^{ji}_{lk}| at q0.
double rbar_residual(int n, Cplx q0);

}  // namespace qgl
