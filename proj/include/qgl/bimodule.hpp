#pragma once
// Operators on the tensor square of the 1-form bimodule, written in the
// dT-coefficient basis: the braiding Lambda, its spectral projectors, the
// two-parameter family of generalized permutations, and the wedge map pi.

#include "qgl/rmatrix.hpp"

namespace qgl {

struct NotAutomorphism : std::runtime_error {
  explicit NotAutomorphism(const std::string& what) : std::runtime_error(what) {}
};

struct GPParams {
  Scalar lambda1, lambda2;
};

struct AlphaCoeffs {
  Scalar a00, a01, a10, a11;
};

// Two-sided action A (.) B on basis tensors: the upper index pair is hit by
// A on the left, the lower pair by B on the right:
//   e[(k,m),(l,p)] -> sum A[(k,l),(a,b)] * B[(c,d),(m,p)] * e[(a,c),(b,d)].
Mat two_sided(const Mat& a, const Mat& b, int n);

// Lambda = two_sided(R, R^-1); satisfies (L-1)(L+q^2)(L+q^-2) = 0.
Mat lambda_dt(int n);

struct Projectors {
  Mat p1, p2, p3, p4;  // idempotent, pairwise orthogonal, sum to identity
};

// p1 = Pq (.) Pq, p2 = Pm (.) Pm, p3 = Pq (.) Pm, p4 = Pm (.) Pq, so that
// Lambda = p1 + p2 - q^2 p3 - q^-2 p4 holds exactly.
Projectors build_projectors(int n);

// pi = (1+q^2) p3 + (1+q^-2) p4  (equals 1 - Lambda).
Mat pi_map(const Projectors& pr);
// Section of pi on its image: i = p3/(1+q^2) + p4/(1+q^-2).
Mat pi_section(const Projectors& pr);

// sigma = l1*p1 + l2*p2 - p3 - p4; throws NotAutomorphism if a parameter is 0.
Mat sigma_family(const Projectors& pr, const GPParams& params);

// Phi = sum_{i,j in {0,1}} a_ij R^i (.) R^j.
Mat sigma_from_alphas(int n, const AlphaCoeffs& a);

// a01 = a10 and a00 + lambda*a10 - a11 = -1.
bool alpha_constraints_hold(const AlphaCoeffs& a);

// l1 = -1 + a10(q+q^-1) + a11(1+q^2), l2 = -1 - a10(q+q^-1) + a11(1+q^-2).
GPParams alphas_to_eigenvalues(const AlphaCoeffs& a);
AlphaCoeffs eigenvalues_to_alphas(const GPParams& params);

// True iff s is invertible and (1 - Lambda)(s + 1) = 0.
bool gp_predicate(const Mat& s, const Mat& lambda);

// mu(s + 1) + mu'(s' + 1) - 1; throws NotAutomorphism when singular.
Mat gp_affine(const Mat& s, const Mat& s_prime, const Scalar& mu, const Scalar& mu_prime);

}  // namespace qgl
