#include "imhom/subspace.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace imh {

namespace {

void scale_col(SparseVec& c, const Rational& a) {
  for (auto& [i, v] : c) v *= a;
}

}  // namespace

ColumnReduction column_reduce(const QMatrix& m, bool track, bool reduced) {
  const int nc = m.cols();
  std::vector<SparseVec> w(nc);
  for (int j = 0; j < nc; ++j) w[j] = m.col(j);
  std::vector<SparseVec> v;
  if (track) {
    v.resize(nc);
    for (int j = 0; j < nc; ++j) v[j].emplace(j, 1);
  }

  std::map<int, int> pivot_of_row;  // row -> owning column
  for (int j = 0; j < nc; ++j) {
    while (!w[j].empty()) {
      const int r = w[j].begin()->first;
      auto it = pivot_of_row.find(r);
      if (it == pivot_of_row.end()) {
        Rational inv = 1 / w[j].begin()->second;
        scale_col(w[j], inv);
        if (track) scale_col(v[j], inv);
        pivot_of_row.emplace(r, j);
        break;
      }
      const int c = it->second;
      Rational coef = -w[j].begin()->second;
      axpy(w[j], coef, w[c]);
      if (track) axpy(v[j], coef, v[c]);
    }
  }

  if (reduced) {
    // Clear every pivot row in all other pivot columns, shallowest pivot first.
    for (const auto& [r, j] : pivot_of_row) {
      for (const auto& [r2, c] : pivot_of_row) {
        if (c == j) continue;
        auto it = w[c].find(r);
        if (it == w[c].end()) continue;
        Rational coef = -it->second;
        axpy(w[c], coef, w[j]);
        if (track) axpy(v[c], coef, v[j]);
      }
    }
  }

  ColumnReduction out;
  out.rank = static_cast<int>(pivot_of_row.size());
  out.echelon = QMatrix(m.rows(), 0);
  if (track) out.transform = QMatrix(nc, 0);
  std::vector<bool> is_pivot(nc, false);
  for (const auto& [r, j] : pivot_of_row) {
    out.pivot_rows.push_back(r);
    out.pivot_cols.push_back(j);
    out.echelon.append_col(std::move(w[j]));
    if (track) out.transform.append_col(std::move(v[j]));
    is_pivot[j] = true;
  }
  for (int j = 0; j < nc; ++j) {
    if (is_pivot[j]) continue;
    out.echelon.append_col(std::move(w[j]));
    if (track) out.transform.append_col(std::move(v[j]));
  }
  return out;
}

int rank(const QMatrix& m) { return column_reduce(m, false, false).rank; }

Subspace::Subspace(QMatrix basis, std::vector<int> pivot_rows)
    : basis_(std::move(basis)), pivot_rows_(std::move(pivot_rows)) {}

Subspace Subspace::zero(int ambient) {
  return Subspace(QMatrix(ambient, 0), {});
}

Subspace Subspace::full(int ambient) {
  std::vector<int> pivots(ambient);
  std::iota(pivots.begin(), pivots.end(), 0);
  return Subspace(QMatrix::identity(ambient), std::move(pivots));
}

Subspace Subspace::span(const QMatrix& columns) {
  ColumnReduction red = column_reduce(columns, false, true);
  QMatrix basis(columns.rows(), 0);
  for (int j = 0; j < red.rank; ++j) basis.append_col(red.echelon.col(j));
  return Subspace(std::move(basis), std::move(red.pivot_rows));
}

bool Subspace::contains(const SparseVec& v) const {
  SparseVec residual = v;
  for (int j = 0; j < rank(); ++j) {
    auto it = residual.find(pivot_rows_[j]);
    if (it == residual.end()) continue;
    Rational coef = -it->second;
    axpy(residual, coef, basis_.col(j));
  }
  return residual.empty();
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_dim() != other.ambient_dim())
    throw std::invalid_argument("Subspace::contains: ambient mismatch");
  for (int j = 0; j < other.rank(); ++j)
    if (!contains(other.basis_.col(j))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  return basis_ == other.basis_;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_dim() != other.ambient_dim())
    throw std::invalid_argument("Subspace::sum: ambient mismatch");
  return span(basis_.hstack(other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_dim() != other.ambient_dim())
    throw std::invalid_argument("Subspace::intersect: ambient mismatch");
  // Null vectors (x, y) of [A | B] have A x = -B y, a point of both spans.
  QMatrix stacked = basis_.hstack(other.basis_);
  Subspace null = kernel_basis(stacked);
  QMatrix xpart(rank(), null.rank());
  for (int j = 0; j < null.rank(); ++j)
    for (const auto& [i, val] : null.basis().col(j))
      if (i < rank()) xpart.set(i, j, val);
  return span(basis_ * xpart);
}

Subspace Subspace::annihilator() const {
  return kernel_basis(basis_.transpose());
}

Subspace kernel_basis(const QMatrix& m) {
  ColumnReduction red = column_reduce(m, true, false);
  QMatrix null(m.cols(), 0);
  for (int j = red.rank; j < m.cols(); ++j) null.append_col(red.transform.col(j));
  return Subspace::span(null);
}

Subspace image_basis(const QMatrix& m) { return Subspace::span(m); }

Subspace preimage(const QMatrix& m, const Subspace& s) {
  if (s.ambient_dim() != m.rows())
    throw std::invalid_argument("preimage: ambient mismatch");
  QMatrix stacked = m.hstack(s.basis().scaled(-1));
  Subspace null = kernel_basis(stacked);
  QMatrix vpart(m.cols(), null.rank());
  for (int j = 0; j < null.rank(); ++j)
    for (const auto& [i, val] : null.basis().col(j))
      if (i < m.cols()) vpart.set(i, j, val);
  return Subspace::span(vpart);
}

LinearSolver::LinearSolver(const QMatrix& m)
    : cols_(m.cols()), red_(column_reduce(m, true, false)) {}

std::optional<std::vector<Rational>> LinearSolver::solve(const SparseVec& b) const {
  SparseVec residual = b;
  std::vector<Rational> coefs(red_.rank, Rational(0));
  for (int j = 0; j < red_.rank; ++j) {
    auto it = residual.find(red_.pivot_rows[j]);
    if (it == residual.end()) continue;
    coefs[j] = it->second;
    axpy(residual, -coefs[j], red_.echelon.col(j));
  }
  if (!residual.empty()) return std::nullopt;
  SparseVec x;
  for (int j = 0; j < red_.rank; ++j) axpy(x, coefs[j], red_.transform.col(j));
  std::vector<Rational> out(cols_, Rational(0));
  for (const auto& [i, v] : x) out[i] = v;
  return out;
}

}  // namespace imh
