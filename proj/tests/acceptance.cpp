// Acceptance gate: the headline checks of the library, one pass/fail line
// each. Exits nonzero if any criterion fails.
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "imhom/corpus.hpp"
#include "imhom/imcore.hpp"
#include "imhom/json_io.hpp"
#include "imhom/mayer_vietoris.hpp"

using namespace imh;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool pass) {
  std::printf("criterion %2d %-58s %s\n", n, (what + ":").c_str(), pass ? "PASS" : "FAIL");
  if (!pass) ++failures;
}

bool ranks_equal(const std::vector<int>& a, const std::vector<int>& b) { return a == b; }

// 1. Both pinched-torus models: H (1,1,1), IM (1,0,1), KER (0,1,0), and the
// two models agree rank-for-rank.
bool criterion1() {
  std::vector<std::vector<int>> tables;
  for (const char* name : {"pinched_torus_icosa", "pinched_torus_quotient"}) {
    ImAnalysis an(build_corpus(name).complex);
    if (!ranks_equal(an.h_ranks(), {1, 1, 1})) return false;
    if (!ranks_equal(an.im_ranks(), {1, 0, 1})) return false;
    if (!ranks_equal(an.ker_ranks(), {0, 1, 0})) return false;
    tables.push_back(an.h_ranks());
    tables.push_back(an.im_ranks());
    tables.push_back(an.ker_ranks());
  }
  return tables[0] == tables[3] && tables[1] == tables[4] && tables[2] == tables[5];
}

// 2. Smooth spaces: the comparison map is an isomorphism, so IM = H and
// KER = 0 in every degree.
bool criterion2() {
  for (const char* name : {"circle", "sphere2", "sphere2_octa", "grid_torus"}) {
    ImAnalysis an(build_corpus(name).complex);
    if (!ranks_equal(an.im_ranks(), an.h_ranks())) return false;
    for (int r : an.ker_ranks())
      if (r != 0) return false;
  }
  return true;
}

// 3. Normalization map sphere -> pinched torus: pushforward hits all of IM
// and the kernel pullback matches, in every degree.
bool criterion3() {
  CorpusEntry entry = build_corpus("normalization_map");
  const SimplicialMap& f = entry.maps[0].map;
  ImAnalysis dom(f.domain), cod(f.codomain);
  for (int d = 0; d <= 2; ++d) {
    MapCheck push = check_pushforward(f, d, dom, cod);
    if (!push.contained || !push.equal) return false;
    MapCheck pull = check_ker_pullback(f, d, dom, cod);
    if (!pull.contained || !pull.equal) return false;
  }
  return true;
}

// 4. Torus collapse (not an algebraic model): the degree-1 pushforward moves
// a rank-1 subspace into a rank-0 image, so containment must fail.
bool criterion4() {
  CorpusEntry entry = build_corpus("torus_collapse_map");
  const SimplicialMap& f = entry.maps[0].map;
  MapCheck push = check_pushforward(f, 1);
  return !push.contained && push.moved_rank == 1 && push.target_rank == 0;
}

// 5. Mayer-Vietoris on the glued spheres: the connecting map respects the
// image subspaces in degrees 1 and 2, with exactness defect 1 at the bottom.
bool criterion5() {
  CorpusEntry entry = build_corpus("mv_cover_glued_spheres");
  const auto& [a, b] = entry.covers[0];
  MvImCheck k1 = mv_im_check(entry.complex, a, b, 1);
  MvImCheck k2 = mv_im_check(entry.complex, a, b, 2);
  return k1.contained && k1.kernel_rank == 1 && k1.image_rank == 0 && k1.defect == 1 &&
         k2.contained && k2.defect == 0;
}

// 6. On every corpus space, the kernel subspace computed as the annihilator
// of the image agrees with the kernel of the transposed comparison matrix.
bool criterion6() {
  for (const std::string& name :
       {std::string("circle"), std::string("sphere2"), std::string("sphere2_octa"),
        std::string("grid_torus"), std::string("csaszar_torus"),
        std::string("pinched_torus_icosa"), std::string("pinched_torus_quotient"),
        std::string("glued_spheres"), std::string("susp_torus")}) {
    ImAnalysis an(build_corpus(name).complex);
    for (int d = 0; d <= an.complex()->dim(); ++d) {
      QMatrix p = pairing_matrix(an.hc(d), an.h(d));
      Subspace direct = kernel_basis((p * an.iota_matrix(d)).transpose());
      if (!(direct == an.kernel(d))) return false;
      // independent functional-side route
      Subspace ann = an.image(d).subspace.annihilator();
      Subspace via_h = kernel_basis(an.iota_matrix(d).transpose());
      if (!(ann == via_h)) return false;
    }
  }
  return true;
}

// 7. Kernel classes form an ideal: cup products of kernel representatives
// with arbitrary cohomology classes stay in the kernel; the degree-0 kernel
// vanishes.
bool criterion7() {
  for (const char* name : {"pinched_torus_icosa", "glued_spheres"}) {
    ComplexPtr k = build_corpus(name).complex;
    ImAnalysis an(k);
    if (an.kernel(0).rank() != 0) return false;
    int dim = k->dim();
    for (int p = 0; p <= dim; ++p) {
      const Subspace& kp = an.kernel(p);
      for (int j = 0; j < kp.rank(); ++j) {
        SparseVec kc;
        for (const auto& [i, val] : kp.basis().col(j))
          axpy(kc, val, an.hc(p).representatives()[i]);
        for (int q = 0; p + q <= dim; ++q)
          for (const SparseVec& u : an.hc(q).representatives()) {
            SparseVec prod = cup_product(*k, p, kc, q, u);
            auto coords = an.hc(p + q).coordinates(prod);
            SparseVec cv;
            for (size_t i = 0; i < coords.size(); ++i)
              if (coords[i] != 0) cv[static_cast<int>(i)] = coords[i];
            if (!cv.empty() && !an.kernel(p + q).contains(cv)) return false;
          }
      }
    }
  }
  return true;
}

// 8. Suspended torus: middle-perversity intersection homology (1,2,0,1),
// upper-middle (1,0,2,1), dual to each other across complementary degrees.
bool criterion8() {
  ComplexPtr susp = build_corpus("susp_torus").complex;
  Stratification s = canonical_stratification(susp);
  std::vector<int> lower = ih_ranks(s, Perversity::middle(3));
  std::vector<int> upper = ih_ranks(s, Perversity::custom(3, {0, 1}));
  if (!ranks_equal(lower, {1, 2, 0, 1})) return false;
  if (!ranks_equal(upper, {1, 0, 2, 1})) return false;
  for (int k = 0; k <= 3; ++k)
    if (lower[k] != upper[3 - k]) return false;
  return true;
}

// 9. Ranks are invariant under barycentric subdivision and stratification
// refinement, on every corpus space.
bool criterion9() {
  for (const std::string& name :
       {std::string("circle"), std::string("sphere2"), std::string("sphere2_octa"),
        std::string("grid_torus"), std::string("csaszar_torus"),
        std::string("pinched_torus_icosa"), std::string("pinched_torus_quotient"),
        std::string("glued_spheres"), std::string("susp_torus")}) {
    CheckReport report = check_invariance(build_corpus(name).complex);
    if (!report.all_pass()) {
      for (const CheckItem& item : report.items)
        if (!item.pass)
          std::fprintf(stderr, "  invariance failure on %s: %s %s\n", name.c_str(),
                       item.name.c_str(), item.detail.c_str());
      return false;
    }
  }
  return true;
}

// 10. Structural properties: boundary squared vanishes, intersection chains
// form a chain subcomplex, larger perversities admit more chains, the
// ordinary Mayer-Vietoris sequence is exact, and randomized rank-nullity /
// annihilator-involution checks pass (>= 1000 cases).
bool criterion10() {
  // boundary squared
  for (const char* name : {"grid_torus", "susp_torus", "glued_spheres"}) {
    ComplexPtr k = build_corpus(name).complex;
    for (int d = 2; d <= k->dim(); ++d)
      if ((boundary_matrix(*k, d - 1) * boundary_matrix(*k, d)).nnz() != 0) return false;
  }
  // intersection chains are a chain subcomplex; monotone in the perversity
  for (const char* name : {"pinched_torus_icosa", "susp_torus"}) {
    ComplexPtr k = build_corpus(name).complex;
    Stratification s = canonical_stratification(k);
    Perversity z = Perversity::zero(k->dim());
    Perversity m = Perversity::middle(k->dim());
    Perversity t = Perversity::top(k->dim());
    for (int d = 0; d <= k->dim(); ++d) {
      Subspace ic = ic_chains(s, m, d);
      if (d >= 1) {
        Subspace below = ic_chains(s, m, d - 1);
        QMatrix bd = boundary_matrix(*k, d);
        for (int j = 0; j < ic.rank(); ++j)
          if (!below.contains(bd.apply(ic.basis().col(j)))) return false;
      }
      if (!ic.contains(ic_chains(s, z, d))) return false;
      if (!ic_chains(s, t, d).contains(ic)) return false;
    }
  }
  // ordinary Mayer-Vietoris exactness on the glued-spheres cover
  {
    CorpusEntry entry = build_corpus("mv_cover_glued_spheres");
    MayerVietoris mv(entry.complex, entry.covers[0].first, entry.covers[0].second);
    for (int d = 0; d <= entry.complex->dim(); ++d) {
      if (!(image_basis(mv.to_sum(d)) == kernel_basis(mv.from_sum(d)))) return false;
      if (d >= 1) {
        if (!(image_basis(mv.from_sum(d)) == kernel_basis(mv.connecting(d)))) return false;
        if (!(image_basis(mv.connecting(d)) == kernel_basis(mv.to_sum(d - 1)))) return false;
      }
    }
  }
  // randomized exact linear algebra
  std::mt19937 rng(7771);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> keep(0, 2);
  for (int trial = 0; trial < 1000; ++trial) {
    int rows = dim(rng), cols = dim(rng);
    QMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (keep(rng) == 0) m.set(i, j, Rational(entry(rng)));
    int r = rank(m);
    Subspace ker = kernel_basis(m);
    if (r + ker.rank() != cols) return false;
    Subspace im = image_basis(m);
    if (im.rank() != r) return false;
    if (!(im.annihilator().annihilator() == im)) return false;
    if (im.annihilator().rank() + r != rows) return false;
  }
  return true;
}

}  // namespace

int main() {
  report(1, "pinched torus models: H/IM/KER tables and agreement", criterion1());
  report(2, "smooth spaces: IM = H and KER = 0", criterion2());
  report(3, "normalization map: image and kernel transported exactly", criterion3());
  report(4, "torus collapse: containment fails as expected", criterion4());
  report(5, "Mayer-Vietoris image sequence: containment and defect 1", criterion5());
  report(6, "kernel equals annihilator of image, two routes", criterion6());
  report(7, "kernel is a cup-product ideal; degree-0 kernel vanishes", criterion7());
  report(8, "suspended torus: perversity tables and duality", criterion8());
  report(9, "rank invariance under subdivision and refinement", criterion9());
  report(10, "structural properties and randomized linear algebra", criterion10());
  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  else std::printf("all 10 criteria PASSED\n");
  return failures ? 1 : 0;
}
