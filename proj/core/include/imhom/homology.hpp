#pragma once

#include <memory>
#include <vector>

#include "imhom/simplicial.hpp"
#include "imhom/subspace.hpp"

namespace imh {

// A computed homology group: rank, a basis of representative cycles, and an
// exact coordinate map for arbitrary cycles of the same degree. Coordinates
// of any boundary are zero.
class HomologySpace {
 public:
  HomologySpace(ComplexPtr k, int degree);

  int degree() const { return degree_; }
  int rank() const { return rank_; }
  const ComplexPtr& complex() const { return complex_; }
  // Representative cycles, one chain vector (indexed by degree-simplices)
  // per basis class.
  const std::vector<SparseVec>& representatives() const { return reps_; }
  // Coordinates of a cycle in the representative basis. Throws if the input
  // is not a cycle.
  std::vector<Rational> coordinates(const SparseVec& cycle) const;
  // Subspace of H spanned by the classes of the given cycles.
  Subspace span_of_classes(const std::vector<SparseVec>& cycles) const;

 private:
  ComplexPtr complex_;
  int degree_;
  int rank_;
  int boundary_rank_;
  std::vector<SparseVec> reps_;
  std::shared_ptr<LinearSolver> solver_;  // for [boundaries | reps]
};

// Cohomology in the same degree: representative cocycles (functionals on
// degree-simplices) with the analogous coordinate map.
class CohomologySpace {
 public:
  CohomologySpace(ComplexPtr k, int degree);

  int degree() const { return degree_; }
  int rank() const { return rank_; }
  const ComplexPtr& complex() const { return complex_; }
  const std::vector<SparseVec>& representatives() const { return reps_; }
  std::vector<Rational> coordinates(const SparseVec& cocycle) const;
  Subspace span_of_classes(const std::vector<SparseVec>& cocycles) const;

 private:
  ComplexPtr complex_;
  int degree_;
  int rank_;
  int coboundary_rank_;
  std::vector<SparseVec> reps_;
  std::shared_ptr<LinearSolver> solver_;
};

HomologySpace homology(const ComplexPtr& k, int degree);
CohomologySpace cohomology(const ComplexPtr& k, int degree);
std::vector<int> homology_ranks(const ComplexPtr& k);  // degrees 0..dim

// Matrix of H_degree(f) in the representative bases of precomputed spaces.
QMatrix induced_map(const SimplicialMap& f, const HomologySpace& domain_h,
                    const HomologySpace& codomain_h);
QMatrix induced_map(const SimplicialMap& f, int degree);

// Matrix of f^*: H^degree(codomain) -> H^degree(domain).
QMatrix induced_cohomology_map(const SimplicialMap& f, const CohomologySpace& codomain_c,
                               const CohomologySpace& domain_c);
QMatrix induced_cohomology_map(const SimplicialMap& f, int degree);

// <cocycle, chain> evaluation.
Rational evaluate(const SparseVec& cocycle, const SparseVec& chain);
// Pairing matrix P[i][j] = <phi_i, z_j> of the two representative bases;
// invertible over the rationals.
QMatrix pairing_matrix(const CohomologySpace& hc, const HomologySpace& h);

// Alexander-Whitney cup product of cochains in the fixed vertex order.
SparseVec cup_product(const SimplicialComplex& k, int p, const SparseVec& u,
                      int q, const SparseVec& v);

}  // namespace imh
