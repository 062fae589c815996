#include "qgl/connection.hpp"

#include <cstdint>
#include <sstream>

namespace qgl {

namespace {

Vec basis_vec(int dim, int idx) {
  Vec v(dim);
  v[idx] = Scalar(1);
  return v;
}

Vec column(const Mat& m, int c) {
  Vec v(m.rows());
  for (int r = 0; r < m.rows(); ++r) v[r] = m.at(r, c);
  return v;
}

// Apply op (n4 x n4) to the first two pair-slots of a length n4*n2 vector.
Vec op_x_1(const Mat& op, const Vec& v, int n2) {
  int n4 = op.rows();
  Vec out(v.size());
  for (int c4 = 0; c4 < n4; ++c4) {
    bool any = false;
    for (int t = 0; t < n2; ++t)
      if (!v[size_t(c4) * n2 + t].is_zero()) { any = true; break; }
    if (!any) continue;
    for (int r4 = 0; r4 < n4; ++r4) {
      const Scalar& s = op.at(r4, c4);
      if (s.is_zero()) continue;
      for (int t = 0; t < n2; ++t) {
        const Scalar& x = v[size_t(c4) * n2 + t];
        if (!x.is_zero()) out[size_t(r4) * n2 + t] += s * x;
      }
    }
  }
  return out;
}

// Apply op (n4 x n4) to the last two pair-slots of a length n2*n4 vector.
Vec one_x_op(const Mat& op, const Vec& v, int n2) {
  int n4 = op.rows();
  Vec out(v.size());
  for (int t = 0; t < n2; ++t) {
    for (int c4 = 0; c4 < n4; ++c4) {
      const Scalar& x = v[size_t(t) * n4 + c4];
      if (x.is_zero()) continue;
      for (int r4 = 0; r4 < n4; ++r4) {
        const Scalar& s = op.at(r4, c4);
        if (!s.is_zero()) out[size_t(t) * n4 + r4] += s * x;
      }
    }
  }
  return out;
}

}  // namespace

// ---------- Geometry ----------

Geometry::Geometry(int n)
    : n_(n),
      pr_dt_(build_projectors(n)),
      lambda_dt_(qgl::lambda_dt(n)),
      frep_(n),
      w_(build_w(frep_)),
      w_inv_(w_.inverse()),
      w_eta_(build_w_eta(n)),
      w_eta_inv_(w_eta_.inverse()),
      lambda_w_(w_ * lambda_dt_ * w_inv_),
      lambda_e_(w_eta_ * lambda_dt_ * w_eta_inv_),
      theta_w_(theta_omega(n)),
      theta_e_(theta_eta(n)) {
  Mat r = build_r(n);
  Mat rinv = r_inverse(r);
  lambda_e_inv_ = w_eta_ * two_sided(rinv, r, n) * w_eta_inv_;
  pi_w_ = w_ * pi_map(pr_dt_) * w_inv_;
  const Mat* src[4] = {&pr_dt_.p1, &pr_dt_.p2, &pr_dt_.p3, &pr_dt_.p4};
  for (int i = 0; i < 4; ++i) proj_w_[i] = w_ * (*src[i]) * w_inv_;
}

Mat Geometry::sigma_omega(const GPParams& params) const {
  return to_omega(sigma_family(pr_dt_, params));
}

Mat Geometry::sigma_eta(const GPParams& params) const {
  return to_eta(sigma_family(pr_dt_, params));
}

// ---------- connection ----------

namespace {

Mat nabla0_impl(const Mat& sigma, const Vec& theta, int n2) {
  int n4 = n2 * n2;
  Mat m(n4, n2);
  for (int a = 0; a < n2; ++a) {
    Vec x = basis_vec(n2, a);
    Vec tx = tensor_vec(theta, x);
    Vec xt = sigma.apply(tensor_vec(x, theta));
    for (int r = 0; r < n4; ++r) m.at(r, a) = tx[r] - xt[r];
  }
  return m;
}

}  // namespace

Mat nabla0(const Geometry& g, const Mat& sigma_w) {
  return nabla0_impl(sigma_w, g.theta_w(), g.n2());
}

Mat nabla0_eta(const Geometry& g, const Mat& sigma_e) {
  return nabla0_impl(sigma_e, g.theta_e(), g.n2());
}

SignResolution resolve_leibniz_signs(const Geometry& g, const GPParams& params) {
  SignResolution res;
  int n2 = g.n2();
  {
    Mat sw = g.sigma_omega(params);
    Mat nab = nabla0(g, sw);
    Mat d = g.lambda_w() - sw;
    for (int sign : {1, -1}) {
      bool ok = true;
      for (int a = 0; a < n2 && ok; ++a) {
        Vec v = d.apply(tensor_vec(basis_vec(n2, a), g.theta_w()));
        for (int r = 0; r < g.n4(); ++r) {
          Scalar want = sign > 0 ? v[r] : -v[r];
          if (nab.at(r, a) != want) { ok = false; break; }
        }
      }
      if (ok) { res.omega_sign = sign; break; }
    }
  }
  {
    Mat se = g.sigma_eta(params);
    Mat nab = nabla0_eta(g, se);
    Mat d = g.lambda_e_inv() - se;
    for (int sign : {1, -1}) {
      bool ok = true;
      for (int a = 0; a < n2 && ok; ++a) {
        Vec v = d.apply(tensor_vec(basis_vec(n2, a), g.theta_e()));
        for (int r = 0; r < g.n4(); ++r) {
          Scalar want = sign > 0 ? v[r] : -v[r];
          if (nab.at(r, a) != want) { ok = false; break; }
        }
      }
      if (ok) { res.eta_sign = sign; break; }
    }
  }
  if (res.omega_sign == 0 || res.eta_sign == 0) throw NoConsistentSign();
  return res;
}

Mat torsion(const Geometry& g, const Mat& nabla) {
  int n2 = g.n2();
  Mat t(g.n4(), n2);
  for (int a = 0; a < n2; ++a) {
    Vec dx = exterior_d(g.lambda_w(), g.theta_w(), basis_vec(n2, a));
    Vec pn = g.pi_w().apply(column(nabla, a));
    for (int r = 0; r < g.n4(); ++r) t.at(r, a) = dx[r] - pn[r];
  }
  return t;
}

Mat extend2(const Geometry& g, const Mat& sigma_w, const Mat& nabla) {
  int n2 = g.n2(), n4 = g.n4();
  int n6 = n4 * n2;
  Mat m(n6, n4);
  for (int a = 0; a < n2; ++a) {
    Vec na = column(nabla, a);
    for (int b = 0; b < n2; ++b) {
      int col = a * n2 + b;
      Vec v(n6);
      for (int r4 = 0; r4 < n4; ++r4)
        if (!na[r4].is_zero()) v[size_t(r4) * n2 + b] = na[r4];
      Vec w(n6);
      for (int r4 = 0; r4 < n4; ++r4) {
        const Scalar& c = nabla.at(r4, b);
        if (!c.is_zero()) w[size_t(a) * n4 + r4] = c;
      }
      Vec w2 = op_x_1(sigma_w, w, n2);
      for (int r = 0; r < n6; ++r) m.at(r, col) = v[r] + w2[r];
    }
  }
  return m;
}

Mat extend3(const Geometry& g, const Mat& sigma_w, const Mat& nabla) {
  int n2 = g.n2(), n4 = g.n4();
  int n6 = n4 * n2, n8 = n4 * n4;
  Mat e2 = extend2(g, sigma_w, nabla);
  Mat m(n8, n6);
  for (int a = 0; a < n2; ++a) {
    Vec na = column(nabla, a);
    for (int bc = 0; bc < n4; ++bc) {
      int col = a * n4 + bc;
      Vec v(n8);
      for (int r4 = 0; r4 < n4; ++r4)
        if (!na[r4].is_zero()) v[size_t(r4) * n4 + bc] = na[r4];
      // (sigma (x) 1 (x) 1)(e_a (x) nabla2(e_bc)): slot 1 carries a.
      Vec w(n8);
      for (int r6 = 0; r6 < n6; ++r6) {
        const Scalar& c = e2.at(r6, bc);
        if (!c.is_zero()) w[size_t(a) * n6 + r6] = c;
      }
      // sigma acts on pair-slots (1,2) of four slots: group cols as n4 * n4.
      Vec w2 = op_x_1(sigma_w, w, n4);
      for (int r = 0; r < n8; ++r) m.at(r, col) = v[r] + w2[r];
    }
  }
  return m;
}

Mat extend3_assoc(const Geometry& g, const Mat& sigma_w, const Mat& nabla) {
  int n2 = g.n2(), n4 = g.n4();
  int n6 = n4 * n2, n8 = n4 * n4;
  Mat e2 = extend2(g, sigma_w, nabla);
  Mat m(n8, n6);
  for (int ab = 0; ab < n4; ++ab) {
    Vec nab2 = column(e2, ab);
    for (int c = 0; c < n2; ++c) {
      int col = ab * n2 + c;
      Vec v(n8);
      for (int r6 = 0; r6 < n6; ++r6)
        if (!nab2[r6].is_zero()) v[size_t(r6) * n2 + c] = nab2[r6];
      // (sigma x 1 x 1)(1 x sigma x 1)(e_ab (x) nabla(e_c))
      Vec w(n8);
      for (int r4 = 0; r4 < n4; ++r4) {
        const Scalar& s = nabla.at(r4, c);
        if (!s.is_zero()) w[size_t(ab) * n4 + r4] = s;
      }
      // 1 x sigma x 1: view as n2 (slot1) * n4 (slots 2,3) * n2 (slot4).
      Vec w1(n8);
      for (int s1 = 0; s1 < n2; ++s1)
        for (int c4 = 0; c4 < n4; ++c4) {
          for (int s4 = 0; s4 < n2; ++s4) {
            const Scalar& x = w[(size_t(s1) * n4 + c4) * n2 + s4];
            if (x.is_zero()) continue;
            for (int r4 = 0; r4 < n4; ++r4) {
              const Scalar& s = sigma_w.at(r4, c4);
              if (!s.is_zero()) w1[(size_t(s1) * n4 + r4) * n2 + s4] += s * x;
            }
          }
        }
      Vec w2 = op_x_1(sigma_w, w1, n4);
      for (int r = 0; r < n8; ++r) m.at(r, col) = v[r] + w2[r];
    }
  }
  return m;
}

Mat staircase2(const Geometry& g, const Mat& sigma_w, int sign) {
  int n2 = g.n2(), n4 = g.n4();
  int n6 = n4 * n2;
  Mat m(n6, n4);
  const Vec& th = g.theta_w();
  for (int a = 0; a < n2; ++a)
    for (int b = 0; b < n2; ++b) {
      int col = a * n2 + b;
      Vec v(n6);
      for (int t = 0; t < n2; ++t)
        if (!th[t].is_zero()) v[size_t(t) * n4 + a * n2 + b] = th[t];
      Vec w(n6);
      for (int t = 0; t < n2; ++t)
        if (!th[t].is_zero()) w[(size_t(a) * n2 + b) * n2 + t] = th[t];
      Vec w2 = op_x_1(sigma_w, one_x_op(sigma_w, w, n2), n2);
      for (int r = 0; r < n6; ++r)
        m.at(r, col) = sign > 0 ? v[r] + w2[r] : v[r] - w2[r];
    }
  return m;
}

Mat curvature(const Geometry& g, const Mat& sigma_w, const Mat& nabla) {
  int n2 = g.n2();
  int n6 = g.n4() * n2;
  Mat e2 = extend2(g, sigma_w, nabla);
  Mat comp = e2 * nabla;  // n6 x n2
  Mat out(n6, n2);
  for (int a = 0; a < n2; ++a) {
    Vec v = op_x_1(g.pi_w(), column(comp, a), n2);
    for (int r = 0; r < n6; ++r) out.at(r, a) = v[r];
  }
  return out;
}

std::string matrix_hash(const Mat& m) {
  uint64_t h = 1469598103934665603ull;
  auto feed = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      if (m.at(r, c).is_zero()) continue;
      feed(std::to_string(r) + "," + std::to_string(c) + ":" + m.at(r, c).str() + ";");
    }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

// ---------- closed form ----------

Mat closed_form_family(const Geometry& g, const GPParams& params,
                       WedgeConvention conv, int wedge_sign) {
  int n = g.n(), n2 = g.n2(), n4 = g.n4();
  Scalar one(1);
  Scalar denom = Scalar::q(-2) - Scalar::q(2);
  Scalar gam = (params.lambda1 - params.lambda2) / denom;
  Scalar bet = (params.lambda1 * Scalar::q(2) - params.lambda2 * Scalar::q(-2)) / denom;
  Scalar nu2 = Scalar::nu() * Scalar::nu();
  Scalar lam2 = Scalar::lambda() * Scalar::lambda();
  Scalar half(Rat(Int(1), Int(2)));
  Scalar c_wedge = -(one - gam - bet) / nu2 * Scalar(wedge_sign);
  Scalar c_sym = half * (one - gam + bet);
  Scalar c_asym = lam2 * half / nu2 * (one - gam - bet);
  Mat emb = conv == WedgeConvention::pi_image ? g.pi_w()
                                              : g.proj_w(2) + g.proj_w(3);
  Mat m(n4, n2);
  const Vec& th = g.theta_w();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec wkk(n4);
      for (int k = 0; k < n; ++k) wkk[p4(n, i, k, k, j)] = Scalar(1);
      Vec wedge = emb.apply(wkk);
      Vec x = basis_vec(n2, p2(n, i, j));
      Vec xt = tensor_vec(x, th);
      Vec tx = tensor_vec(th, x);
      for (int r = 0; r < n4; ++r) {
        m.at(r, p2(n, i, j)) = c_wedge * wedge[r] - gam * wkk[r] +
                               c_sym * (xt[r] + tx[r]) + c_asym * (xt[r] - tx[r]);
      }
    }
  return m;
}

ClosedFormResolution resolve_closed_form(const Geometry& g, const GPParams& params) {
  Mat nab = nabla0(g, g.sigma_omega(params));
  ClosedFormResolution best;
  best.residual_nonzeros = -1;
  for (WedgeConvention conv : {WedgeConvention::pi_image, WedgeConvention::projector_image}) {
    for (int sign : {1, -1}) {
      Mat cf = closed_form_family(g, params, conv, sign);
      int resid = (cf - nab).nonzero_count();
      if (resid == 0) {
        return {true, conv, sign, 0};
      }
      if (best.residual_nonzeros < 0 || resid < best.residual_nonzeros) {
        best = {false, conv, sign, resid};
      }
    }
  }
  return best;
}

int anchor_residual_nonzeros(const Geometry& g) {
  int n = g.n(), n4 = g.n4();
  GPParams r_params{Scalar::q(-2), Scalar::q(2)};
  Mat nab = nabla0(g, g.sigma_omega(r_params));
  int bad = 0;
  for (int a = 0; a < n; ++a)
    for (int j = 0; j < n; ++j) {
      Vec extra(n4);
      for (int k = 0; k < n; ++k) extra[p4(n, a, k, k, j)] += Scalar(1);
      for (int r = 0; r < n4; ++r)
        if (nab.at(r, p2(n, a, j)) + extra[r] != Scalar()) ++bad;
    }
  return bad;
}

// ---------- uniqueness ----------

int uniqueness_nullspace_dim(const Geometry& g) {
  int n = g.n(), n2 = g.n2(), n4 = g.n4();
  int nunk = n4 * n2;
  const FRep& f = g.frep();
  std::vector<Vec> rows;
  for (int pp = 0; pp < n; ++pp)
    for (int nn = 0; nn < n; ++nn) {
      const Mat& rho_t = f.rho(pp, nn);
      Mat d(n4, n4);
      for (int mid = 0; mid < n; ++mid) {
        const Mat& r1 = f.rho(pp, mid);
        const Mat& r2 = f.rho(mid, nn);
        for (int bb = 0; bb < n2; ++bb)
          for (int bp = 0; bp < n2; ++bp) {
            const Scalar& s1 = r1.at(bb, bp);
            if (s1.is_zero()) continue;
            for (int cc = 0; cc < n2; ++cc)
              for (int cp = 0; cp < n2; ++cp) {
                const Scalar& s2 = r2.at(cc, cp);
                if (!s2.is_zero()) d.at(bp * n2 + cp, bb * n2 + cc) += s1 * s2;
              }
          }
      }
      for (int r4 = 0; r4 < n4; ++r4)
        for (int ij = 0; ij < n2; ++ij) {
          Vec row(nunk);
          bool any = false;
          for (int lk = 0; lk < n2; ++lk) {
            const Scalar& c = rho_t.at(ij, lk);
            if (!c.is_zero()) {
              row[r4 * n2 + lk] += c;
              any = true;
            }
          }
          for (int bc = 0; bc < n4; ++bc) {
            const Scalar& c = d.at(r4, bc);
            if (!c.is_zero()) {
              row[bc * n2 + ij] -= c;
              any = true;
            }
          }
          if (any) rows.push_back(std::move(row));
        }
    }
  int rank = static_cast<int>(rref(rows, nunk).size());
  return nunk - rank;
}

namespace {

constexpr uint64_t kPrime = 2305843009213693951ull;  // 2^61 - 1

uint64_t mulmod(uint64_t a, uint64_t b) {
  return static_cast<uint64_t>((__uint128_t)a * b % kPrime);
}
uint64_t addmod(uint64_t a, uint64_t b) {
  uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}
uint64_t submod(uint64_t a, uint64_t b) { return addmod(a, kPrime - b); }
uint64_t powmod(uint64_t b, uint64_t e) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, b);
    b = mulmod(b, b);
    e >>= 1;
  }
  return r;
}
uint64_t invmod(uint64_t a) { return powmod(a, kPrime - 2); }

}  // namespace

bool uniqueness_fullrank_modp(int n) {
  int n2 = n * n, n4 = n2 * n2;
  int nunk = n4 * n2;
  const uint64_t q0 = 1234577;
  const uint64_t q0inv = invmod(q0);
  const uint64_t lam = submod(q0, q0inv);
  // R and R^-1 mod p.
  std::vector<uint64_t> r(size_t(n2) * n2, 0), rinv(size_t(n2) * n2, 0);
  auto rp2 = [n](int i, int j) { return i * n + j; };
  for (int i = 0; i < n; ++i) r[size_t(rp2(i, i)) * n2 + rp2(i, i)] = q0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) r[size_t(rp2(i, j)) * n2 + rp2(j, i)] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) r[size_t(rp2(i, j)) * n2 + rp2(i, j)] = lam;
  rinv = r;
  for (int d = 0; d < n2; ++d)
    rinv[size_t(d) * n2 + d] = submod(rinv[size_t(d) * n2 + d], lam);
  // rho mod p.
  std::vector<std::vector<uint64_t>> rho(n2, std::vector<uint64_t>(size_t(n2) * n2, 0));
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k) {
      auto& rm = rho[rp2(m, k)];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int l = 0; l < n; ++l)
            for (int kk = 0; kk < n; ++kk) {
              uint64_t acc = 0;
              for (int s = 0; s < n; ++s) {
                uint64_t a = rinv[size_t(rp2(s, kk)) * n2 + rp2(j, k)];
                if (!a) continue;
                uint64_t b = rinv[size_t(rp2(i, m)) * n2 + rp2(s, l)];
                if (b) acc = addmod(acc, mulmod(a, b));
              }
              rm[size_t(rp2(i, j)) * n2 + rp2(l, kk)] = acc;
            }
    }
  // Incremental echelon over F_p; succeed once rank reaches nunk.
  std::vector<std::vector<uint64_t>> echelon;  // normalized rows
  std::vector<int> pivcol;
  int rank = 0;
  std::vector<uint64_t> d(size_t(n4) * n4);
  for (int pp = 0; pp < n && rank < nunk; ++pp)
    for (int nn = 0; nn < n && rank < nunk; ++nn) {
      const auto& rho_t = rho[rp2(pp, nn)];
      std::fill(d.begin(), d.end(), 0);
      for (int mid = 0; mid < n; ++mid) {
        const auto& r1 = rho[rp2(pp, mid)];
        const auto& r2 = rho[rp2(mid, nn)];
        for (int bb = 0; bb < n2; ++bb)
          for (int bp = 0; bp < n2; ++bp) {
            uint64_t s1 = r1[size_t(bb) * n2 + bp];
            if (!s1) continue;
            for (int cc = 0; cc < n2; ++cc)
              for (int cp = 0; cp < n2; ++cp) {
                uint64_t s2 = r2[size_t(cc) * n2 + cp];
                if (s2)
                  d[size_t(bp * n2 + cp) * n4 + (bb * n2 + cc)] = addmod(
                      d[size_t(bp * n2 + cp) * n4 + (bb * n2 + cc)], mulmod(s1, s2));
              }
          }
      }
      for (int r4 = 0; r4 < n4 && rank < nunk; ++r4)
        for (int ij = 0; ij < n2 && rank < nunk; ++ij) {
          std::vector<uint64_t> row(nunk, 0);
          for (int lk = 0; lk < n2; ++lk) {
            uint64_t c = rho_t[size_t(ij) * n2 + lk];
            if (c) row[r4 * n2 + lk] = addmod(row[r4 * n2 + lk], c);
          }
          for (int bc = 0; bc < n4; ++bc) {
            uint64_t c = d[size_t(r4) * n4 + bc];
            if (c) row[bc * n2 + ij] = submod(row[bc * n2 + ij], c);
          }
          // reduce against current echelon
          for (size_t e = 0; e < echelon.size(); ++e) {
            uint64_t f2 = row[pivcol[e]];
            if (!f2) continue;
            const auto& er = echelon[e];
            for (int c = pivcol[e]; c < nunk; ++c)
              if (er[c]) row[c] = submod(row[c], mulmod(f2, er[c]));
          }
          int lead = -1;
          for (int c = 0; c < nunk; ++c)
            if (row[c]) { lead = c; break; }
          if (lead < 0) continue;
          uint64_t inv = invmod(row[lead]);
          for (int c = lead; c < nunk; ++c)
            if (row[c]) row[c] = mulmod(row[c], inv);
          echelon.push_back(std::move(row));
          pivcol.push_back(lead);
          ++rank;
        }
    }
  return rank == nunk;
}

// ---------- metric ----------

MetricSolution metric_solver(const Geometry& g, const Mat& sigma_w, const Mat& nabla) {
  int n2 = g.n2(), n4 = g.n4();
  int n6 = n4 * n2;
  Mat e2 = extend2(g, sigma_w, nabla);
  Mat stacked(n4 + n6, n4);
  for (int r = 0; r < n4; ++r)
    for (int c = 0; c < n4; ++c) stacked.at(r, c) = g.pi_w().at(r, c);
  for (int r = 0; r < n6; ++r)
    for (int c = 0; c < n4; ++c) stacked.at(n4 + r, c) = e2.at(r, c);
  MetricSolution sol;
  sol.basis = stacked.nullspace();
  for (const Vec& v : sol.basis) {
    Mat gm(n2, n2);
    for (int a = 0; a < n2; ++a)
      for (int b = 0; b < n2; ++b) gm.at(a, b) = v[a * n2 + b];
    sol.nondegenerate.push_back(gm.is_invertible());
  }
  return sol;
}

// ---------- commutative limit ----------

LimitResult commutative_limit(const Geometry& g, const GPParams& params) {
  LimitResult res;
  Scalar lam = Scalar::lambda();
  Scalar one(1);
  Scalar mu1 = (params.lambda1 - one) / lam;
  Scalar mu2 = (params.lambda2 - one) / lam;
  std::ostringstream bad;
  if (!mu1.finite_at_one()) bad << "mu1 = " << mu1.str() << " has no finite value at q=1; ";
  if (!mu2.finite_at_one()) bad << "mu2 = " << mu2.str() << " has no finite value at q=1; ";
  if (!bad.str().empty()) {
    res.singular_reason = bad.str();
    return res;
  }
  res.mu1 = mu1.limit_at_one();
  res.mu2 = mu2.limit_at_one();
  res.gamma0 = (res.mu2 - res.mu1) / 2;
  res.mu0 = (res.mu2 + res.mu1) / 2;

  int n = g.n(), n2 = g.n2(), n4 = g.n4();
  Mat nab = nabla0(g, g.sigma_omega(params));
  res.evaluated.assign(n4, std::vector<Rat>(n2, Rat(0)));
  for (int r = 0; r < n4; ++r)
    for (int c = 0; c < n2; ++c) {
      try {
        res.evaluated[r][c] = nab.at(r, c).evaluate(Rat(1));
      } catch (const PoleAtPoint&) {
        res.singular_reason = "connection entry (" + std::to_string(r) + "," +
                              std::to_string(c) + ") has a pole at q=1";
        return res;
      }
    }
  res.finite = true;

  // Closed form: the wedge embedding and the invariant form alpha = lim lambda*theta
  // evaluated at q = 1.
  std::vector<std::vector<Rat>> pi1(n4, std::vector<Rat>(n4, Rat(0)));
  for (int r = 0; r < n4; ++r)
    for (int c = 0; c < n4; ++c)
      if (!g.pi_w().at(r, c).is_zero()) pi1[r][c] = g.pi_w().at(r, c).evaluate(Rat(1));
  std::vector<Rat> alpha(n2, Rat(0));
  for (int i = 0; i < n; ++i) alpha[p2(n, i, i)] = Rat(-1);
  res.closed_form.assign(n4, std::vector<Rat>(n2, Rat(0)));
  Rat c_wedge = -(Rat(1) - res.gamma0) / 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int colidx = p2(n, i, j);
      std::vector<Rat> wkk(n4, Rat(0));
      for (int k = 0; k < n; ++k) wkk[p4(n, i, k, k, j)] += 1;
      std::vector<Rat> col(n4, Rat(0));
      for (int r = 0; r < n4; ++r) {
        Rat wedge(0);
        for (int c = 0; c < n4; ++c)
          if (wkk[c] != 0 && pi1[r][c] != 0) wedge += pi1[r][c] * wkk[c];
        col[r] = c_wedge * wedge - res.gamma0 * wkk[r];
      }
      // -(mu0/2)(alpha (x) omega + omega (x) alpha)
      for (int t = 0; t < n2; ++t) {
        if (alpha[t] == 0) continue;
        col[t * n2 + colidx] -= res.mu0 / 2 * alpha[t];
        col[colidx * n2 + t] -= res.mu0 / 2 * alpha[t];
      }
      for (int r = 0; r < n4; ++r) res.closed_form[r][colidx] = col[r];
    }
  res.match = res.closed_form == res.evaluated;
  return res;
}

}  // namespace qgl
