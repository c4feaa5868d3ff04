#pragma once

#include <initializer_list>
#include <map>
#include <vector>

#include "imhom/rational.hpp"

namespace imh {

// Sparse vector: index -> nonzero value. Entries equal to zero are never stored.
using SparseVec = std::map<int, Rational>;

// y += a * x
void axpy(SparseVec& y, const Rational& a, const SparseVec& x);

// Sparse matrix of exact rationals, stored column-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols);

  static QMatrix identity(int n);
  // Row-major dense construction, for tests and small fixtures.
  static QMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(cols_.size()); }

  Rational at(int r, int c) const;
  void set(int r, int c, const Rational& v);

  const SparseVec& col(int j) const { return cols_[j]; }
  void set_col(int j, SparseVec v);
  void append_col(SparseVec v);

  long nnz() const;
  bool is_zero() const;

  QMatrix transpose() const;
  QMatrix operator*(const QMatrix& rhs) const;
  SparseVec apply(const SparseVec& v) const;  // this * v
  QMatrix hstack(const QMatrix& rhs) const;   // [this | rhs]
  QMatrix scaled(const Rational& a) const;

  bool operator==(const QMatrix& rhs) const;

 private:
  void check_index(int r, int c) const;

  int rows_ = 0;
  std::vector<SparseVec> cols_;
};

}  // namespace imh
