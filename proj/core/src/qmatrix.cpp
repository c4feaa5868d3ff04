#include "imhom/qmatrix.hpp"

#include <stdexcept>

namespace imh {

void axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
  if (a == 0) return;
  for (const auto& [i, v] : x) {
    auto it = y.find(i);
    if (it == y.end()) {
      y.emplace(i, a * v);
    } else {
      it->second += a * v;
      if (it->second == 0) y.erase(it);
    }
  }
}

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("QMatrix: negative shape");
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.cols_[i].emplace(i, 1);
  return m;
}

QMatrix QMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  int nr = static_cast<int>(rows.size());
  int nc = nr == 0 ? 0 : static_cast<int>(rows.begin()->size());
  QMatrix m(nr, nc);
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != nc)
      throw std::invalid_argument("QMatrix::from_rows: ragged rows");
    int c = 0;
    for (long v : row) {
      if (v != 0) m.cols_[c].emplace(r, Rational(v));
      ++c;
    }
    ++r;
  }
  return m;
}

void QMatrix::check_index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols())
    throw std::out_of_range("QMatrix: index out of bounds");
}

Rational QMatrix::at(int r, int c) const {
  check_index(r, c);
  auto it = cols_[c].find(r);
  return it == cols_[c].end() ? Rational(0) : it->second;
}

void QMatrix::set(int r, int c, const Rational& v) {
  check_index(r, c);
  if (v == 0)
    cols_[c].erase(r);
  else
    cols_[c][r] = v;
}

void QMatrix::set_col(int j, SparseVec v) {
  if (j < 0 || j >= cols()) throw std::out_of_range("QMatrix::set_col");
  if (!v.empty() && (v.begin()->first < 0 || v.rbegin()->first >= rows_))
    throw std::out_of_range("QMatrix::set_col: row index out of bounds");
  cols_[j] = std::move(v);
}

void QMatrix::append_col(SparseVec v) {
  if (!v.empty() && (v.begin()->first < 0 || v.rbegin()->first >= rows_))
    throw std::out_of_range("QMatrix::append_col: row index out of bounds");
  cols_.push_back(std::move(v));
}

long QMatrix::nnz() const {
  long n = 0;
  for (const auto& c : cols_) n += static_cast<long>(c.size());
  return n;
}

bool QMatrix::is_zero() const { return nnz() == 0; }

QMatrix QMatrix::transpose() const {
  QMatrix t(cols(), rows_);
  for (int j = 0; j < cols(); ++j)
    for (const auto& [i, v] : cols_[j]) t.cols_[i].emplace(j, v);
  return t;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
  if (cols() != rhs.rows()) throw std::invalid_argument("QMatrix::mul: shape mismatch");
  QMatrix out(rows_, rhs.cols());
  for (int j = 0; j < rhs.cols(); ++j) {
    SparseVec acc;
    for (const auto& [k, v] : rhs.cols_[j]) axpy(acc, v, cols_[k]);
    out.cols_[j] = std::move(acc);
  }
  return out;
}

SparseVec QMatrix::apply(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [k, a] : v) {
    if (k < 0 || k >= cols()) throw std::out_of_range("QMatrix::apply");
    axpy(out, a, cols_[k]);
  }
  return out;
}

QMatrix QMatrix::hstack(const QMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw std::invalid_argument("QMatrix::hstack: row mismatch");
  QMatrix out = *this;
  for (const auto& c : rhs.cols_) out.cols_.push_back(c);
  return out;
}

QMatrix QMatrix::scaled(const Rational& a) const {
  QMatrix out(rows_, cols());
  if (a == 0) return out;
  for (int j = 0; j < cols(); ++j)
    for (const auto& [i, v] : cols_[j]) out.cols_[j].emplace(i, a * v);
  return out;
}

bool QMatrix::operator==(const QMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_;
}

}  // namespace imh
