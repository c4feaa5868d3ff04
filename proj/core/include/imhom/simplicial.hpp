#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "imhom/qmatrix.hpp"

namespace imh {

// A simplex is the sorted list of its vertex indices (ascending in the
// complex's fixed vertex order).
using Simplex = std::vector<int>;

class SimplicialComplex;
using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

// Sparse chain in a fixed degree, keyed by simplex index within that degree.
struct Chain {
  int degree = 0;
  SparseVec coeffs;
};

// Finite abstract simplicial complex with named subcomplexes. Immutable
// after construction except for registering subcomplex names.
class SimplicialComplex {
 public:
  // Face closure of the given maximal simplices over a fixed vertex order.
  // Empty input or a repeated vertex in a tuple is an error unless
  // `allow_empty` (internal callers like link need the empty complex).
  static SimplicialComplex build(const std::vector<std::string>& vertex_names,
                                 const std::vector<Simplex>& maximal,
                                 bool allow_empty = false);

  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::string& vertex_name(int v) const { return vertex_names_.at(v); }
  int vertex_index(const std::string& name) const;  // -1 if unknown

  int num_simplices(int d) const;
  const std::vector<Simplex>& simplices(int d) const;
  int index_of(const Simplex& s) const;  // -1 if absent
  bool has_simplex(const Simplex& s) const { return index_of(s) >= 0; }
  const Simplex& simplex_at(int d, int i) const { return simplices(d).at(i); }
  long total_simplices() const;
  int euler_characteristic() const;

  std::vector<Simplex> maximal_simplices() const;
  bool is_pure() const;
  // Every (n-1)-simplex has exactly two n-cofaces (`with_boundary`: one or
  // two). On failure returns the offending simplex through `offender`.
  bool is_pseudomanifold(bool with_boundary, Simplex* offender = nullptr) const;

  // Connected components of the 1-skeleton, as vertex -> component id.
  std::vector<int> vertex_components() const;
  // Edge-path distance in the 1-skeleton; -1 if disconnected.
  int graph_distance(int u, int v) const;

  const std::map<std::string, std::set<Simplex>>& subcomplexes() const {
    return subcomplexes_;
  }
  bool has_subcomplex(const std::string& name) const;
  const std::set<Simplex>& subcomplex(const std::string& name) const;
  // Validates that every simplex exists here and the set is face-closed.
  void add_subcomplex(const std::string& name, std::set<Simplex> simplices);

  int subdivision_level() const { return subdivision_level_; }
  void set_subdivision_level(int n) { subdivision_level_ = n; }

 private:
  std::vector<std::string> vertex_names_;
  std::map<std::string, int> vertex_index_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, int>> index_by_dim_;
  std::map<std::string, std::set<Simplex>> subcomplexes_;
  int subdivision_level_ = 0;
};

// Face closure of maximal simplices given by vertex names; vertex order is
// first appearance.
ComplexPtr build_complex(const std::vector<std::vector<std::string>>& maximal);

// Matrix of the simplicial boundary operator from degree-d chains to
// (d-1)-chains, alternating signs in the fixed vertex order.
QMatrix boundary_matrix(const SimplicialComplex& k, int degree);

// {tau : tau disjoint from s, tau union s in k}, as a standalone complex.
ComplexPtr link(const SimplicialComplex& k, const Simplex& s);

bool is_full(const SimplicialComplex& k, const std::set<Simplex>& sub);
bool is_full(const SimplicialComplex& k, const std::string& sub_name);

// Simplicial map given by a total vertex assignment. Simplices may map
// degenerately (the image vertex set must still be a simplex of the
// codomain); the chain map sends degenerate images to zero.
struct SimplicialMap {
  ComplexPtr domain;
  ComplexPtr codomain;
  std::vector<int> vertex_map;

  void validate() const;
  QMatrix chain_matrix(int degree) const;
};

SimplicialMap identity_map(const ComplexPtr& k);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

// Chain map between two complexes, one matrix per degree of the domain.
struct ChainMap {
  ComplexPtr domain;
  ComplexPtr codomain;
  std::vector<QMatrix> mats;

  QMatrix matrix(int degree) const;
  // domain degree == codomain degree here (subdivision, quotient, inclusion)
};

ChainMap chain_map_of(const SimplicialMap& f);

struct SubdivisionResult {
  ComplexPtr complex;
  ChainMap sd;  // C_*(k) -> C_*(k'), commutes with the boundary
};

// Barycentric subdivision; named subcomplexes are carried forward and become
// full in the result.
SubdivisionResult barycentric_subdivision(const ComplexPtr& k);

struct QuotientResult {
  ComplexPtr complex;
  SimplicialMap quotient;
};

// Merge each pair (u, v) to a single vertex. Requires distance >= 3 in the
// 1-skeleton (or disjoint components) per pair, so the realization of the
// result is the quotient space.
QuotientResult identify_vertices(const ComplexPtr& k,
                                 const std::vector<std::pair<int, int>>& pairs);

// Collapse a full, connected, nonempty subcomplex to a point. The complex
// must have been barycentrically subdivided at least twice.
QuotientResult collapse_subcomplex(const ComplexPtr& k, const std::string& sub_name);

ComplexPtr cone(const SimplicialComplex& k, const std::string& apex = "apex");
ComplexPtr suspension(const SimplicialComplex& k);
ComplexPtr disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);
// Staircase triangulation of the product, in the factors' vertex orders.
ComplexPtr product(const SimplicialComplex& a, const SimplicialComplex& b);

struct SubcomplexResult {
  ComplexPtr complex;
  SimplicialMap inclusion;
};

SubcomplexResult extract_subcomplex(const ComplexPtr& k, const std::string& name);
SubcomplexResult extract_subcomplex(const ComplexPtr& k, const std::set<Simplex>& simplices);

}  // namespace imh
