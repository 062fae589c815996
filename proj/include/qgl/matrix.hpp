#pragma once
// Dense matrices and vectors over Q(q) with exact elimination-based
// inverse / rank / nullspace, plus Kronecker products.

#include <vector>

#include "qgl/scalar.hpp"

namespace qgl {

struct SingularMatrix : std::runtime_error {
  explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

using Vec = std::vector<Scalar>;

class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static Mat identity(int k);
  static Mat kron(const Mat& a, const Mat& b);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  Mat scaled(const Scalar& s) const;
  Mat transpose() const;
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  bool is_zero() const;
  int nonzero_count() const;

  Vec apply(const Vec& v) const;

  Mat inverse() const;               // throws SingularMatrix
  bool is_invertible() const;
  int rank() const;
  std::vector<Vec> nullspace() const;  // basis of the right kernel

 private:
  int rows_, cols_;
  std::vector<Scalar> a_;
};

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(std::vector<Vec>& rows, int cols);

// Solve M x = b exactly; empty optional if inconsistent or underdetermined
// solutions are requested from a wide system (requires unique solution).
bool solve_unique(const Mat& m, const Vec& b, Vec& x_out);

}  // namespace qgl
