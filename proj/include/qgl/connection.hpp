#pragma once
// The canonical linear connection attached to a generalized permutation,
// with torsion, curvature, tensor extension, metric compatibility,
// uniqueness evidence, and the q -> 1 limit.

#include <optional>
#include <string>

#include "qgl/frep.hpp"

namespace qgl {

struct AnchorFailure : std::runtime_error {
  explicit AnchorFailure(const std::string& what) : std::runtime_error(what) {}
};
struct NoConsistentSign : std::runtime_error {
  NoConsistentSign() : std::runtime_error("no global sign makes the identity exact") {}
};
struct SingularLimit : std::runtime_error {
  explicit SingularLimit(const std::string& what) : std::runtime_error(what) {}
};

// All per-n geometric data, computed once: the braiding and projectors in the
// dT basis, the functional representation, both basis changes, theta in both
// bases, and the omega-basis transports.
class Geometry {
 public:
  explicit Geometry(int n);

  int n() const { return n_; }
  int n2() const { return n_ * n_; }
  int n4() const { return n2() * n2(); }

  const Projectors& projectors_dt() const { return pr_dt_; }
  const Mat& lambda_dt_op() const { return lambda_dt_; }
  const FRep& frep() const { return frep_; }
  const Mat& w() const { return w_; }
  const Mat& w_inv() const { return w_inv_; }
  const Mat& w_eta() const { return w_eta_; }
  const Mat& w_eta_inv() const { return w_eta_inv_; }
  const Mat& lambda_w() const { return lambda_w_; }
  const Mat& lambda_e() const { return lambda_e_; }
  const Mat& lambda_e_inv() const { return lambda_e_inv_; }
  const Mat& pi_w() const { return pi_w_; }
  const Mat& proj_w(int i) const { return proj_w_[i]; }  // i = 0..3
  const Vec& theta_w() const { return theta_w_; }
  const Vec& theta_e() const { return theta_e_; }

  Mat to_omega(const Mat& dt_op) const { return w_ * dt_op * w_inv_; }
  Mat to_eta(const Mat& dt_op) const { return w_eta_ * dt_op * w_eta_inv_; }
  Mat sigma_omega(const GPParams& params) const;
  Mat sigma_eta(const GPParams& params) const;

 private:
  int n_;
  Projectors pr_dt_;
  Mat lambda_dt_;
  FRep frep_;
  Mat w_, w_inv_, w_eta_, w_eta_inv_;
  Mat lambda_w_, lambda_e_, lambda_e_inv_, pi_w_;
  Mat proj_w_[4];
  Vec theta_w_, theta_e_;
};

// nabla0 in the omega basis: column for omega^a is
// coeffs(theta (x) omega^a) - sigma_w * coeffs(omega^a (x) theta).  n^4 x n^2.
Mat nabla0(const Geometry& g, const Mat& sigma_w);
// Same construction in the eta basis (sigma and theta transported there).
Mat nabla0_eta(const Geometry& g, const Mat& sigma_e);

// Resolve the global sign s making nabla0 = s * (Lambda - sigma)((.) (x) theta)
// exact (omega basis), and s' for (Lambda^-1 - sigma) on the eta side.
struct SignResolution {
  int omega_sign = 0;  // +1 or -1
  int eta_sign = 0;
};
SignResolution resolve_leibniz_signs(const Geometry& g, const GPParams& params);

// Torsion matrix d - pi o nabla on the invariant basis; zero for nabla0.
Mat torsion(const Geometry& g, const Mat& nabla);

// Extension of nabla to 2- and 3-fold tensors (recursive form).
Mat extend2(const Geometry& g, const Mat& sigma_w, const Mat& nabla);
Mat extend3(const Geometry& g, const Mat& sigma_w, const Mat& nabla);
// Alternative bracketing of the 3-fold extension (composite first factor).
Mat extend3_assoc(const Geometry& g, const Mat& sigma_w, const Mat& nabla);
// Staircase closed form theta (x) nu + sign * sighat_s(nu (x) theta), s = 2.
Mat staircase2(const Geometry& g, const Mat& sigma_w, int sign);

// Curvature (pi (x) 1) o nabla_2 o nabla as an n^6 x n^2 matrix.
Mat curvature(const Geometry& g, const Mat& sigma_w, const Mat& nabla);
// Stable content hash of a matrix (FNV-1a over the canonical serialization).
std::string matrix_hash(const Mat& m);

enum class WedgeConvention { pi_image, projector_image };

// The four-term closed form for nabla0 built from nu, gamma, beta, with the
// wedge embedded by `conv` and an overall wedge sign.
Mat closed_form_family(const Geometry& g, const GPParams& params,
                       WedgeConvention conv, int wedge_sign);

struct ClosedFormResolution {
  bool exact = false;
  WedgeConvention conv = WedgeConvention::pi_image;
  int wedge_sign = 0;
  int residual_nonzeros = 0;  // of the best attempt when not exact
};
ClosedFormResolution resolve_closed_form(const Geometry& g, const GPParams& params);

// Master convention check: nabla0 for the R-type permutation satisfies
// nabla omega^a_j + omega^a_k (x) omega^k_j = 0 exactly.
int anchor_residual_nonzeros(const Geometry& g);

// Exact nullspace dimension of the constant-intertwiner system (n <= 2).
int uniqueness_nullspace_dim(const Geometry& g);
// Full-rank certificate of the same system at a specialized point over a
// prime field (rank under specialization can only drop, so full rank here
// proves the generic nullspace is zero).  Returns true when certified.
bool uniqueness_fullrank_modp(int n);

struct MetricSolution {
  std::vector<Vec> basis;             // coefficient vectors g_ab, length n^4
  std::vector<bool> nondegenerate;    // per basis element
  int dimension() const { return static_cast<int>(basis.size()); }
};
MetricSolution metric_solver(const Geometry& g, const Mat& sigma_w, const Mat& nabla);

struct LimitResult {
  bool finite = false;
  std::string singular_reason;        // offending scalars when not finite
  Rat mu1, mu2, gamma0, mu0;
  std::vector<std::vector<Rat>> closed_form;  // n^4 x n^2
  std::vector<std::vector<Rat>> evaluated;    // entrywise q = 1 values
  bool match = false;
};
LimitResult commutative_limit(const Geometry& g, const GPParams& params);

}  // namespace qgl
