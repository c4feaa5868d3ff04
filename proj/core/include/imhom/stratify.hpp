#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "imhom/simplicial.hpp"

namespace imh {

// Perversity function p(c) on real codimensions 2..n with the growth
// conditions p(2) = 0 and p(c) <= p(c+1) <= p(c) + 1.
class Perversity {
 public:
  static Perversity middle(int top_dim);  // p(c) = floor((c-2)/2)
  static Perversity zero(int top_dim);
  static Perversity top(int top_dim);  // p(c) = c - 2
  static Perversity custom(int top_dim, const std::vector<int>& values);

  int top_dim() const { return top_dim_; }
  int operator()(int codim) const;
  bool leq(const Perversity& other) const;
  const std::string& name() const { return name_; }

 private:
  Perversity(int top_dim, std::vector<int> values, std::string name);
  int top_dim_;
  std::vector<int> values_;  // values_[i] = p(i + 2)
  std::string name_;
};

// GM filtration X = X_n >= X_{n-2} >= ... >= X_0 by closed full subcomplexes,
// stored per codimension. A codimension missing from the input inherits the
// next deeper skeleton.
class Stratification {
 public:
  // Validates nesting, dimension bounds, and fullness; when a skeleton is
  // not full and `auto_subdivide` is set, the complex is barycentrically
  // subdivided (with the skeleta carried along) until it is.
  static Stratification make(ComplexPtr k, int formal_dim,
                             std::map<int, std::set<Simplex>> skeleta,
                             bool auto_subdivide = true);
  static Stratification trivial(ComplexPtr k);

  const ComplexPtr& complex() const { return complex_; }
  int formal_dim() const { return formal_dim_; }
  // Effective skeleton X_{n-c}; empty set for codim beyond the deepest entry.
  const std::set<Simplex>& skeleton(int codim) const;
  const std::map<int, std::set<Simplex>>& stored_skeleta() const { return skeleta_; }
  // Codimensions whose effective skeleton is nonempty, ascending. A stored
  // deep skeleton makes every shallower codimension effective too.
  std::vector<int> codims() const;

  // Largest c with s inside X_{n-c}; nullopt for a regular simplex.
  std::optional<int> codim_of(const Simplex& s) const;
  // Vertex set of the effective skeleton X_{n-c}. Because skeleta are full,
  // dim(s n X_{n-c}) is one less than the count of vertices of s in here.
  const std::set<int>& skeleton_vertices(int codim) const;

 private:
  ComplexPtr complex_;
  int formal_dim_ = 0;
  std::map<int, std::set<Simplex>> skeleta_;        // as stored
  std::map<int, std::set<Simplex>> effective_;      // cumulative, all codims
  std::map<int, std::set<int>> skeleton_vertices_;  // codim -> vertex set
};

// Link condition over the rationals: every link is a rational homology
// sphere of the complementary dimension. Requires a pure complex.
bool is_rational_homology_manifold(const SimplicialComplex& k);

// Reduced rational homology ranks, degrees 0..dim; empty complex -> {}.
std::vector<int> reduced_homology_ranks(const SimplicialComplex& k);

// Singular set detection by the link test, then recursion into the singular
// set. Regular means the link is a rational homology sphere (interior) or
// rationally acyclic (boundary of a pseudomanifold-with-boundary).
Stratification canonical_stratification(const ComplexPtr& k, bool auto_subdivide = true);

// The closed subcomplex spanned by simplices with a non-regular link.
std::set<Simplex> singular_set(const SimplicialComplex& k);

}  // namespace imh
