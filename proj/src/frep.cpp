#include "qgl/frep.hpp"

#include <algorithm>
#include <numeric>

namespace qgl {

FRep::FRep(int n) : n_(n) {
  int n2 = n * n;
  Mat r = build_r(n);
  Mat rinv = r_inverse(r);
  rho_.assign(n2, Mat(n2, n2));
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k) {
      Mat& rm = rho_[p2(n, m, k)];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int l = 0; l < n; ++l)
            for (int kk = 0; kk < n; ++kk) {
              Scalar acc;
              for (int s = 0; s < n; ++s) {
                const Scalar& a = rinv.at(p2(n, s, kk), p2(n, j, k));
                if (a.is_zero()) continue;
                const Scalar& b = rinv.at(p2(n, i, m), p2(n, s, l));
                if (!b.is_zero()) acc += a * b;
              }
              rm.at(p2(n, i, j), p2(n, l, kk)) = acc;
            }
    }

  // Antipode: solve sum_k rho_kappa(T^m_k) rho(T^k_p) = delta^m_p Id through
  // the inverse of the block matrix whose (k,p) block is rho(T^k_p).
  Mat big(n * n2, n * n2);
  for (int k = 0; k < n; ++k)
    for (int p = 0; p < n; ++p) {
      const Mat& blk = rho_[p2(n, k, p)];
      for (int r2 = 0; r2 < n2; ++r2)
        for (int c2 = 0; c2 < n2; ++c2)
          big.at(k * n2 + r2, p * n2 + c2) = blk.at(r2, c2);
    }
  Mat big_inv;
  try {
    big_inv = big.inverse();
  } catch (const SingularMatrix&) {
    throw SingularAntipodeSystem();
  }
  rho_kappa_.assign(n2, Mat(n2, n2));
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k) {
      Mat& blk = rho_kappa_[p2(n, m, k)];
      for (int r2 = 0; r2 < n2; ++r2)
        for (int c2 = 0; c2 < n2; ++c2)
          blk.at(r2, c2) = big_inv.at(m * n2 + r2, k * n2 + c2);
    }
}

Mat build_w(const FRep& f) {
  int n = f.n();
  int n4 = n * n * n * n;
  Mat w(n4, n4);
  for (int k = 0; k < n; ++k)
    for (int m = 0; m < n; ++m)
      for (int l = 0; l < n; ++l)
        for (int p = 0; p < n; ++p) {
          int col = p4(n, k, m, l, p);
          for (int b = 0; b < n; ++b) {
            const Mat& rm = f.rho(l, b);
            for (int e = 0; e < n; ++e)
              for (int d = 0; d < n; ++d) {
                const Scalar& c = rm.at(p2(n, k, m), p2(n, e, d));
                if (!c.is_zero()) w.at(p4(n, e, d, b, p), col) += c;
              }
          }
        }
  if (!w.is_invertible()) throw SingularBasisChange();
  return w;
}

Mat build_w_eta(int n) {
  int n4 = n * n * n * n;
  Mat r = build_r(n);
  Mat w(n4, n4);
  for (int k = 0; k < n; ++k)
    for (int m = 0; m < n; ++m)
      for (int l = 0; l < n; ++l)
        for (int p = 0; p < n; ++p) {
          int col = p4(n, k, m, l, p);
          for (int a = 0; a < n; ++a)
            for (int x = 0; x < n; ++x)
              for (int y = 0; y < n; ++y) {
                Scalar acc;
                for (int s = 0; s < n; ++s) {
                  const Scalar& u = r.at(p2(n, x, s), p2(n, a, l));
                  if (u.is_zero()) continue;
                  const Scalar& v = r.at(p2(n, y, s), p2(n, m, p));
                  if (!v.is_zero()) acc += u * v;
                }
                if (!acc.is_zero()) w.at(p4(n, k, a, x, y), col) += acc;
              }
        }
  if (!w.is_invertible()) throw SingularBasisChange();
  return w;
}

Vec theta_omega(int n) {
  Vec t(n * n);
  Scalar pref = -(Scalar::q(2 * n + 1) / Scalar::lambda());
  for (int i = 0; i < n; ++i) t[p2(n, i, i)] = pref * Scalar::q(-2 * (i + 1));
  return t;
}

Vec theta_eta(int n) {
  Vec t(n * n);
  Scalar pref = -Scalar::lambda().inverse();
  for (int i = 0; i < n; ++i)
    t[p2(n, i, i)] = pref * Scalar::q(2 * (i + 1) + 1 - 2 * n);
  return t;
}

Mat lambda_omega(const FRep& f, const Mat& w, Route route) {
  int n = f.n();
  if (route == Route::conjugation) return w * lambda_dt(n) * w.inverse();
  int n4 = n * n * n * n;
  Mat lam(n4, n4);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          int col = p4(n, i, j, k, l);
          for (int m = 0; m < n; ++m)
            for (int nn = 0; nn < n; ++nn) {
              Mat prod = f.rho_kappa(k, m) * f.rho(nn, l);
              for (int qq = 0; qq < n; ++qq)
                for (int p = 0; p < n; ++p) {
                  const Scalar& c = prod.at(p2(n, i, j), p2(n, qq, p));
                  if (!c.is_zero()) lam.at(p4(n, m, nn, qq, p), col) += c;
                }
            }
        }
  return lam;
}

Vec tensor_vec(const Vec& x, const Vec& y) {
  Vec out(x.size() * y.size());
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero()) out[i * y.size() + j] = x[i] * y[j];
  }
  return out;
}

Vec exterior_d(const Mat& lambda_om, const Vec& theta, const Vec& x) {
  // graded commutator with theta, projected to 2-forms by 1 - Lambda
  Vec tx = tensor_vec(theta, x);
  Vec xt = tensor_vec(x, theta);
  for (size_t i = 0; i < tx.size(); ++i) tx[i] += xt[i];
  Vec lx = lambda_om.apply(tx);
  for (size_t i = 0; i < tx.size(); ++i) tx[i] -= lx[i];
  return tx;
}

Mat f_of_qdet(const FRep& f) {
  int n = f.n();
  int n2 = n * n;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Mat acc(n2, n2);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    Mat word = Mat::identity(n2);
    for (int row = 0; row < n; ++row) word = word * f.rho(row, perm[row]);
    Scalar sign = (-Scalar::q()).pow(inv);
    acc = acc + word.scaled(sign);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

}  // namespace qgl
