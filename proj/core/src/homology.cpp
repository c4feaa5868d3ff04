#include "imhom/homology.hpp"

#include <stdexcept>

namespace imh {

namespace {

QMatrix safe_boundary(const SimplicialComplex& k, int degree) {
  if (degree < 0 || degree > k.dim())
    return QMatrix(k.num_simplices(degree - 1), k.num_simplices(degree));
  return boundary_matrix(k, degree);
}

struct QuotientBasis {
  std::vector<SparseVec> reps;
  int sub_rank = 0;  // rank of the divided-out subspace
  std::shared_ptr<LinearSolver> solver;
};

// Basis of (cycles / sub) picked from the columns of `cycles`, plus a solver
// over [sub | reps] for coordinates.
QuotientBasis quotient_basis(const QMatrix& sub_basis, const QMatrix& cycles) {
  QuotientBasis out;
  out.sub_rank = sub_basis.cols();
  QMatrix stacked = sub_basis.hstack(cycles);
  ColumnReduction red = column_reduce(stacked, false, false);
  QMatrix solver_input = sub_basis;
  for (int i = 0; i < red.rank; ++i) {
    int j = red.pivot_cols[i];
    if (j < sub_basis.cols()) continue;
    out.reps.push_back(cycles.col(j - sub_basis.cols()));
    solver_input.append_col(cycles.col(j - sub_basis.cols()));
  }
  out.solver = std::make_shared<LinearSolver>(solver_input);
  return out;
}

}  // namespace

HomologySpace::HomologySpace(ComplexPtr k, int degree)
    : complex_(std::move(k)), degree_(degree) {
  const SimplicialComplex& kk = *complex_;
  if (degree < 0 || degree > kk.dim()) {
    rank_ = 0;
    boundary_rank_ = 0;
    solver_ = std::make_shared<LinearSolver>(QMatrix(kk.num_simplices(degree), 0));
    return;
  }
  QMatrix d_here = safe_boundary(kk, degree);
  QMatrix d_above = safe_boundary(kk, degree + 1);
  Subspace cycles = kernel_basis(d_here);
  Subspace boundaries = image_basis(d_above);
  QuotientBasis q = quotient_basis(boundaries.basis(), cycles.basis());
  boundary_rank_ = q.sub_rank;
  reps_ = std::move(q.reps);
  rank_ = static_cast<int>(reps_.size());
  solver_ = std::move(q.solver);
}

std::vector<Rational> HomologySpace::coordinates(const SparseVec& cycle) const {
  auto sol = solver_->solve(cycle);
  if (!sol) throw std::invalid_argument("HomologySpace: chain is not a cycle of this space");
  return std::vector<Rational>(sol->begin() + boundary_rank_, sol->end());
}

Subspace HomologySpace::span_of_classes(const std::vector<SparseVec>& cycles) const {
  QMatrix coords(rank_, 0);
  for (const SparseVec& z : cycles) {
    auto c = coordinates(z);
    SparseVec col;
    for (int i = 0; i < rank_; ++i)
      if (c[i] != 0) col.emplace(i, c[i]);
    coords.append_col(std::move(col));
  }
  return image_basis(coords);
}

CohomologySpace::CohomologySpace(ComplexPtr k, int degree)
    : complex_(std::move(k)), degree_(degree) {
  const SimplicialComplex& kk = *complex_;
  if (degree < 0 || degree > kk.dim()) {
    rank_ = 0;
    coboundary_rank_ = 0;
    solver_ = std::make_shared<LinearSolver>(QMatrix(kk.num_simplices(degree), 0));
    return;
  }
  QMatrix delta_here = safe_boundary(kk, degree + 1).transpose();
  QMatrix delta_below = safe_boundary(kk, degree).transpose();
  Subspace cocycles = kernel_basis(delta_here);
  Subspace coboundaries = image_basis(delta_below);
  QuotientBasis q = quotient_basis(coboundaries.basis(), cocycles.basis());
  coboundary_rank_ = q.sub_rank;
  reps_ = std::move(q.reps);
  rank_ = static_cast<int>(reps_.size());
  solver_ = std::move(q.solver);
}

std::vector<Rational> CohomologySpace::coordinates(const SparseVec& cocycle) const {
  auto sol = solver_->solve(cocycle);
  if (!sol)
    throw std::invalid_argument("CohomologySpace: cochain is not a cocycle of this space");
  return std::vector<Rational>(sol->begin() + coboundary_rank_, sol->end());
}

Subspace CohomologySpace::span_of_classes(const std::vector<SparseVec>& cocycles) const {
  QMatrix coords(rank_, 0);
  for (const SparseVec& z : cocycles) {
    auto c = coordinates(z);
    SparseVec col;
    for (int i = 0; i < rank_; ++i)
      if (c[i] != 0) col.emplace(i, c[i]);
    coords.append_col(std::move(col));
  }
  return image_basis(coords);
}

HomologySpace homology(const ComplexPtr& k, int degree) {
  if (degree < 0 || degree > k->dim())
    throw std::out_of_range("homology: degree out of range");
  return HomologySpace(k, degree);
}

CohomologySpace cohomology(const ComplexPtr& k, int degree) {
  if (degree < 0 || degree > k->dim())
    throw std::out_of_range("cohomology: degree out of range");
  return CohomologySpace(k, degree);
}

std::vector<int> homology_ranks(const ComplexPtr& k) {
  std::vector<int> out;
  std::vector<int> boundary_ranks(k->dim() + 2, 0);
  for (int d = 1; d <= k->dim(); ++d) boundary_ranks[d] = rank(boundary_matrix(*k, d));
  for (int d = 0; d <= k->dim(); ++d)
    out.push_back(k->num_simplices(d) - boundary_ranks[d] - boundary_ranks[d + 1]);
  return out;
}

QMatrix induced_map(const SimplicialMap& f, const HomologySpace& domain_h,
                    const HomologySpace& codomain_h) {
  f.validate();
  int degree = domain_h.degree();
  QMatrix push = f.chain_matrix(degree);
  QMatrix out(codomain_h.rank(), domain_h.rank());
  for (int j = 0; j < domain_h.rank(); ++j) {
    SparseVec image = push.apply(domain_h.representatives()[j]);
    auto coords = codomain_h.coordinates(image);
    for (int i = 0; i < codomain_h.rank(); ++i) out.set(i, j, coords[i]);
  }
  return out;
}

QMatrix induced_map(const SimplicialMap& f, int degree) {
  HomologySpace dh(f.domain, degree);
  HomologySpace ch(f.codomain, degree);
  return induced_map(f, dh, ch);
}

QMatrix induced_cohomology_map(const SimplicialMap& f, const CohomologySpace& codomain_c,
                               const CohomologySpace& domain_c) {
  f.validate();
  int degree = codomain_c.degree();
  QMatrix pull = f.chain_matrix(degree).transpose();
  QMatrix out(domain_c.rank(), codomain_c.rank());
  for (int j = 0; j < codomain_c.rank(); ++j) {
    SparseVec image = pull.apply(codomain_c.representatives()[j]);
    auto coords = domain_c.coordinates(image);
    for (int i = 0; i < domain_c.rank(); ++i) out.set(i, j, coords[i]);
  }
  return out;
}

QMatrix induced_cohomology_map(const SimplicialMap& f, int degree) {
  CohomologySpace cc(f.codomain, degree);
  CohomologySpace dc(f.domain, degree);
  return induced_cohomology_map(f, cc, dc);
}

Rational evaluate(const SparseVec& cocycle, const SparseVec& chain) {
  Rational acc(0);
  for (const auto& [i, v] : chain) {
    auto it = cocycle.find(i);
    if (it != cocycle.end()) acc += it->second * v;
  }
  return acc;
}

QMatrix pairing_matrix(const CohomologySpace& hc, const HomologySpace& h) {
  if (hc.degree() != h.degree())
    throw std::invalid_argument("pairing_matrix: degree mismatch");
  QMatrix p(hc.rank(), h.rank());
  for (int i = 0; i < hc.rank(); ++i)
    for (int j = 0; j < h.rank(); ++j)
      p.set(i, j, evaluate(hc.representatives()[i], h.representatives()[j]));
  return p;
}

SparseVec cup_product(const SimplicialComplex& k, int p, const SparseVec& u,
                      int q, const SparseVec& v) {
  SparseVec out;
  const auto& top = k.simplices(p + q);
  for (int idx = 0; idx < static_cast<int>(top.size()); ++idx) {
    const Simplex& s = top[idx];
    Simplex front(s.begin(), s.begin() + p + 1);
    Simplex back(s.begin() + p, s.end());
    int fi = k.index_of(front);
    int bi = k.index_of(back);
    if (fi < 0 || bi < 0) continue;
    auto uit = u.find(fi);
    if (uit == u.end()) continue;
    auto vit = v.find(bi);
    if (vit == v.end()) continue;
    Rational val = uit->second * vit->second;
    if (val != 0) out.emplace(idx, val);
  }
  return out;
}

}  // namespace imh
