#include "qgl/matrix.hpp"

#include <algorithm>

namespace qgl {

Mat Mat::identity(int k) {
  Mat m(k, k);
  for (int i = 0; i < k; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Mat Mat::kron(const Mat& a, const Mat& b) {
  Mat m(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) {
      const Scalar& s = a.at(i, j);
      if (s.is_zero()) continue;
      for (int k = 0; k < b.rows_; ++k)
        for (int l = 0; l < b.cols_; ++l) {
          if (!b.at(k, l).is_zero())
            m.at(i * b.rows_ + k, j * b.cols_ + l) = s * b.at(k, l);
        }
    }
  return m;
}

Mat operator*(const Mat& a, const Mat& b) {
  Mat c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& s = a.at(i, k);
      if (s.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (!b.at(k, j).is_zero()) c.at(i, j) += s * b.at(k, j);
      }
    }
  return c;
}

Mat operator+(const Mat& a, const Mat& b) {
  Mat c(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  Mat c(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
  return c;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat c(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i)
    if (!a_[i].is_zero()) c.a_[i] = a_[i] * s;
  return c;
}

Mat Mat::transpose() const {
  Mat c(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) c.at(j, i) = at(i, j);
  return c;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

int Mat::nonzero_count() const {
  int n = 0;
  for (const auto& s : a_)
    if (!s.is_zero()) ++n;
  return n;
}

Vec Mat::apply(const Vec& v) const {
  Vec out(rows_);
  for (int i = 0; i < rows_; ++i) {
    Scalar acc;
    for (int j = 0; j < cols_; ++j) {
      if (!at(i, j).is_zero() && !v[j].is_zero()) acc += at(i, j) * v[j];
    }
    out[i] = acc;
  }
  return out;
}

std::vector<int> rref(std::vector<Vec>& rows, int cols) {
  std::vector<int> pivots;
  int r = 0;
  int nrows = static_cast<int>(rows.size());
  for (int col = 0; col < cols && r < nrows; ++col) {
    int piv = -1;
    for (int i = r; i < nrows; ++i) {
      if (!rows[i][col].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    Scalar inv = rows[r][col].inverse();
    for (int c = col; c < cols; ++c) {
      if (!rows[r][c].is_zero()) rows[r][c] = rows[r][c] * inv;
    }
    for (int i = 0; i < nrows; ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      Scalar f = rows[i][col];
      for (int c = col; c < cols; ++c) {
        if (!rows[r][c].is_zero()) rows[i][c] -= f * rows[r][c];
      }
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

Mat Mat::inverse() const {
  if (rows_ != cols_) throw SingularMatrix("inverse of non-square matrix");
  int k = rows_;
  std::vector<Vec> aug(k, Vec(2 * k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) aug[i][j] = at(i, j);
    aug[i][k + i] = Scalar(1);
  }
  std::vector<int> piv = rref(aug, 2 * k);
  if (static_cast<int>(piv.size()) < k || piv[k - 1] != k - 1)
    throw SingularMatrix("singular matrix");
  Mat inv(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) inv.at(i, j) = aug[i][k + j];
  return inv;
}

bool Mat::is_invertible() const { return rows_ == cols_ && rank() == rows_; }

int Mat::rank() const {
  std::vector<Vec> rows(rows_, Vec(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) rows[i][j] = at(i, j);
  return static_cast<int>(rref(rows, cols_).size());
}

std::vector<Vec> Mat::nullspace() const {
  std::vector<Vec> rows(rows_, Vec(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) rows[i][j] = at(i, j);
  std::vector<int> piv = rref(rows, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols_);
    v[free] = Scalar(1);
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool solve_unique(const Mat& m, const Vec& b, Vec& x_out) {
  std::vector<Vec> aug(m.rows(), Vec(m.cols() + 1));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug[i][j] = m.at(i, j);
    aug[i][m.cols()] = b[i];
  }
  std::vector<int> piv = rref(aug, m.cols() + 1);
  if (!piv.empty() && piv.back() == m.cols()) return false;  // inconsistent
  if (static_cast<int>(piv.size()) != m.cols()) return false;  // underdetermined
  x_out.assign(m.cols(), Scalar());
  for (size_t r = 0; r < piv.size(); ++r) x_out[piv[r]] = aug[r][m.cols()];
  return true;
}

}  // namespace qgl
