#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "imhom/homology.hpp"
#include "imhom/stratify.hpp"

namespace imh {

// A simplex is allowable in degree i when, for every codimension c,
// dim(sigma n X_{n-c}) <= i - c + p(c). The intersection dimension is read
// off the vertex count because skeleta are full; an empty intersection
// always passes.
bool allowable_test(const Stratification& s, const Perversity& p, const Simplex& sigma,
                    int degree);

// Indices (within the degree) of the allowable simplices.
std::vector<int> allowable_simplices(const Stratification& s, const Perversity& p,
                                     int degree);

// Chains spanned by allowable simplices whose boundary is again a span of
// allowable simplices, as a subspace of the full chain group. These form a
// chain subcomplex of C_*.
Subspace ic_chains(const Stratification& s, const Perversity& p, int degree);

// Intersection homology group: allowable cycles modulo boundaries of
// allowable-with-allowable-boundary chains.
struct IHSpace {
  int degree = 0;
  int rank = 0;
  // Representative allowable cycles, chains of the stratified complex.
  std::vector<SparseVec> representatives;
};

IHSpace intersection_homology(const Stratification& s, const Perversity& p, int degree);
std::vector<int> ih_ranks(const Stratification& s, const Perversity& p);  // 0..dim

// Image of IH_k -> H_k in the coordinates of a homology space computed on
// the same complex as the stratification.
Subspace iota_image(const Stratification& s, const Perversity& p, const HomologySpace& h);

// Closures of the top-dimensional pieces, per dimension class: maximal
// simplices of one dimension are grouped by connectivity across faces whose
// link is a two-point set, then closed under faces.
std::vector<std::set<Simplex>> irreducible_components(const SimplicialComplex& k);

struct ImageHomology {
  int degree = 0;
  Subspace subspace = Subspace::zero(0);        // in H_degree coordinates
  std::vector<Subspace> per_component;          // one summand per component
};

// Per-complex cache for image/kernel computations: irreducible components,
// their canonical stratifications (middle perversity), homology spaces, and
// the assembled subspaces.
class ImAnalysis {
 public:
  explicit ImAnalysis(ComplexPtr k);

  const ComplexPtr& complex() const { return complex_; }
  const std::vector<std::set<Simplex>>& components() const { return components_; }

  const HomologySpace& h(int degree);
  const CohomologySpace& hc(int degree);
  const ImageHomology& image(int degree);
  // Annihilator of image(degree) under the evaluation pairing, in the
  // cohomology representative coordinates.
  const Subspace& kernel(int degree);
  // Columns: H-coordinates of the pushed intersection-cycle representatives
  // of all components (a spanning set of image(degree).subspace).
  const QMatrix& iota_matrix(int degree);

  std::vector<int> h_ranks();    // degrees 0..dim
  std::vector<int> im_ranks();
  std::vector<int> ker_ranks();

 private:
  struct Component {
    SubcomplexResult ext;
    std::vector<ChainMap> sds;  // subdivisions applied before stratifying
    std::optional<Stratification> strat;
    std::optional<Perversity> perv;
    std::map<int, HomologySpace> h_local;  // on the stratified complex
    std::map<int, HomologySpace> h_base;   // on ext.complex, if subdivided
  };

  void ensure_components();
  Subspace component_image(Component& c, int degree, QMatrix& iota_cols);

  ComplexPtr complex_;
  std::vector<std::set<Simplex>> components_;
  std::vector<Component> comps_;
  bool comps_ready_ = false;
  std::map<int, HomologySpace> h_;
  std::map<int, CohomologySpace> hc_;
  std::map<int, ImageHomology> image_;
  std::map<int, Subspace> kernel_;
  std::map<int, QMatrix> iota_;
};

ImageHomology image_homology(const ComplexPtr& k, int degree);
Subspace kernel_cohomology(const ComplexPtr& k, int degree);

// Containment/equality report for f_*(IM(domain)) against IM(codomain), or
// for the dual kernel comparison.
struct MapCheck {
  bool contained = false;
  bool equal = false;
  int moved_rank = 0;
  int target_rank = 0;
};

MapCheck check_pushforward(const SimplicialMap& f, int degree);
MapCheck check_pushforward(const SimplicialMap& f, int degree, ImAnalysis& dom,
                           ImAnalysis& cod);
// contained: f^* kernel(codomain) inside kernel(domain);
// equal: (f^*)^{-1} kernel(domain) equals kernel(codomain).
MapCheck check_ker_pullback(const SimplicialMap& f, int degree);
MapCheck check_ker_pullback(const SimplicialMap& f, int degree, ImAnalysis& dom,
                            ImAnalysis& cod);

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool all_pass() const;
};

// Rank stability under barycentric subdivision and under refining the
// canonical stratification by an extra zero-dimensional skeleton point.
CheckReport check_invariance(const ComplexPtr& k);

// The connecting homomorphism of a two-set closed cover restricted to the
// image subspaces: containment of the image in IM(A n B) and the exactness
// defect of the image sequence at the A n B node.
struct MvImCheck {
  bool contained = false;
  int kernel_rank = 0;  // dim(ker(to_sum) n IM_{k-1}(A n B))
  int image_rank = 0;   // dim(connecting(IM_k(X)))
  int defect = 0;       // kernel_rank - image_rank
};

MvImCheck mv_im_check(const ComplexPtr& k, const std::string& a, const std::string& b,
                      int degree);

// For each orientable top-dimensional component, checks that its fundamental
// class lies in the image subspace of its dimension.
struct FundamentalClassReport {
  struct Item {
    int component = 0;
    int dim = 0;
    bool orientable = false;
    bool in_image = false;
  };
  std::vector<Item> items;
  bool all_pass() const;  // every orientable component passes
};

FundamentalClassReport fundamental_class_membership(const ComplexPtr& k);

}  // namespace imh
