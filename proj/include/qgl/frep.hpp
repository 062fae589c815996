#pragma once
// The functional representation rho of the matrix-quantum-group generators
// (and of their antipode images), the basis changes from dT-coefficients to
// the left-/right-invariant form bases, the bi-invariant form theta, and the
// exterior derivative on invariant forms.

#include <vector>

#include "qgl/bimodule.hpp"

namespace qgl {

struct SingularAntipodeSystem : std::runtime_error {
  SingularAntipodeSystem() : std::runtime_error("antipode linear system is singular") {}
};
struct SingularBasisChange : std::runtime_error {
  SingularBasisChange() : std::runtime_error("basis-change matrix is singular") {}
};

class FRep {
 public:
  explicit FRep(int n);

  int n() const { return n_; }
  // rho(T^m_k), an n^2 x n^2 matrix indexed by pair-flattened (i,j)/(l,k).
  const Mat& rho(int m, int k) const { return rho_[p2(n_, m, k)]; }
  // rho(kappa(T^m_k)) from the exact antipode linear solve.
  const Mat& rho_kappa(int m, int k) const { return rho_kappa_[p2(n_, m, k)]; }

 private:
  int n_;
  std::vector<Mat> rho_, rho_kappa_;
};

// dT-basis -> left-invariant (omega) basis on the tensor square:
//   W[(e,d,b,p)],[(k,m,l,p)] = rho(T^l_b)[(k,m)],[(e,d)].
Mat build_w(const FRep& f);

// dT-basis -> right-invariant (eta) basis, closed form in R:
//   W_eta[(k,a,x,y)],[(k,m,l,p)] = sum_s R^{xs}_{al} R^{ys}_{mp}.
Mat build_w_eta(int n);

// theta in omega coordinates: -(q^{2n+1}/lambda) sum_i q^{-2i} omega^i_i.
Vec theta_omega(int n);
// theta in eta coordinates: -(1/lambda) sum_i q^{2i+1-2n} eta^i_i.
Vec theta_eta(int n);

enum class Route { conjugation, direct };

// The braiding in the omega basis, either W * Lambda_dT * W^-1 or assembled
// directly from rho and rho_kappa; the two must agree exactly.
Mat lambda_omega(const FRep& f, const Mat& w, Route route);

// x (x) y on coefficient vectors: n^2 x n^2 -> n^4.
Vec tensor_vec(const Vec& x, const Vec& y);

// d x = (1 - Lambda_omega)(theta (x) x + x (x) theta).
Vec exterior_d(const Mat& lambda_om, const Vec& theta, const Vec& x);

// rho applied to the q-determinant; expected value is q^-2 times the identity.
Mat f_of_qdet(const FRep& f);

}  // namespace qgl
