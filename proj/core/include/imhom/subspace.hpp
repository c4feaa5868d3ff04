#pragma once

#include <optional>
#include <vector>

#include "imhom/qmatrix.hpp"

namespace imh {

// Result of column reduction: m * transform = echelon. Pivot columns come
// first, sorted by strictly increasing pivot row, with pivot entry 1; the
// remaining columns are zero. When `reduced`, every pivot row is cleared in
// all other columns.
struct ColumnReduction {
  QMatrix echelon;
  QMatrix transform;            // empty unless tracking was requested
  std::vector<int> pivot_rows;  // pivot row of echelon column i, i < rank
  std::vector<int> pivot_cols;  // original column index of echelon column i
  int rank = 0;
};

ColumnReduction column_reduce(const QMatrix& m, bool track, bool reduced);

int rank(const QMatrix& m);

// A linear subspace of Q^ambient, held as a reduced column echelon basis.
// The basis is canonical, so equality of subspaces is matrix equality.
class Subspace {
 public:
  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  static Subspace span(const QMatrix& columns);

  int ambient_dim() const { return basis_.rows(); }
  int rank() const { return basis_.cols(); }
  const QMatrix& basis() const { return basis_; }
  const std::vector<int>& pivot_rows() const { return pivot_rows_; }

  bool contains(const SparseVec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  // Functionals vanishing on this subspace, in dual coordinates.
  Subspace annihilator() const;

 private:
  Subspace(QMatrix basis, std::vector<int> pivot_rows);
  QMatrix basis_;
  std::vector<int> pivot_rows_;
};

Subspace kernel_basis(const QMatrix& m);
Subspace image_basis(const QMatrix& m);
// {v : m * v lies in s}
Subspace preimage(const QMatrix& m, const Subspace& s);

// Reusable exact solver for m * x = b.
class LinearSolver {
 public:
  explicit LinearSolver(const QMatrix& m);
  // One solution if consistent, nullopt otherwise.
  std::optional<std::vector<Rational>> solve(const SparseVec& b) const;
  int rank() const { return red_.rank; }

 private:
  int cols_;
  ColumnReduction red_;
};

}  // namespace imh
