#include "doctest.h"
#include "helpers.hpp"
#include "imhom/corpus.hpp"
#include "imhom/imcore.hpp"
#include "imhom/mayer_vietoris.hpp"

using namespace imh;

namespace {

Stratification pinched_strat() {
  return canonical_stratification(build_corpus("pinched_torus_icosa").complex);
}

}  // namespace

TEST_CASE("allowability on the pinched torus") {
  Stratification s = pinched_strat();
  Perversity zero = Perversity::zero(2);
  int pinch = *s.skeleton_vertices(2).begin();

  // the pinch vertex itself: intersection dim 0, needs 0 <= degree - 2 + p(2)
  CHECK_FALSE(allowable_test(s, zero, {pinch}, 0));
  CHECK_FALSE(allowable_test(s, zero, {pinch}, 1));
  CHECK(allowable_test(s, zero, {pinch}, 2));

  // a regular vertex is allowable in every degree
  for (int v = 0; v < s.complex()->num_vertices(); ++v)
    if (v != pinch) {
      CHECK(allowable_test(s, zero, {v}, 0));
      break;
    }

  // an edge touching the pinch point: intersection dim 0
  for (const Simplex& e : s.complex()->simplices(1))
    if (e[0] == pinch || e[1] == pinch) {
      CHECK_FALSE(allowable_test(s, zero, e, 1));
      CHECK(allowable_test(s, zero, e, 2));
      break;
    }

  // counts: in top degree everything is allowable
  CHECK(allowable_simplices(s, zero, 2).size() ==
        static_cast<size_t>(s.complex()->num_simplices(2)));
}

TEST_CASE("intersection chains form a chain subcomplex") {
  for (const std::string& name :
       {std::string("pinched_torus_icosa"), std::string("glued_spheres"),
        std::string("susp_torus")}) {
    ComplexPtr k = build_corpus(name).complex;
    Stratification s = canonical_stratification(k);
    Perversity m = Perversity::middle(k->dim());
    for (int d = 1; d <= k->dim(); ++d) {
      Subspace ic = ic_chains(s, m, d);
      Subspace ic_below = ic_chains(s, m, d - 1);
      QMatrix bd = boundary_matrix(*k, d);
      for (int j = 0; j < ic.rank(); ++j)
        CHECK(ic_below.contains(bd.apply(ic.basis().col(j))));
    }
  }
}

TEST_CASE("larger perversities admit more chains") {
  for (const std::string& name :
       {std::string("pinched_torus_icosa"), std::string("susp_torus")}) {
    ComplexPtr k = build_corpus(name).complex;
    Stratification s = canonical_stratification(k);
    Perversity z = Perversity::zero(k->dim());
    Perversity m = Perversity::middle(k->dim());
    Perversity t = Perversity::top(k->dim());
    for (int d = 0; d <= k->dim(); ++d) {
      Subspace zc = ic_chains(s, z, d);
      Subspace mc = ic_chains(s, m, d);
      Subspace tc = ic_chains(s, t, d);
      CHECK(mc.contains(zc));
      CHECK(tc.contains(mc));
    }
  }
}

TEST_CASE("intersection homology of smooth spaces equals homology") {
  for (const std::string& name :
       {std::string("circle"), std::string("sphere2_octa"), std::string("grid_torus")}) {
    ComplexPtr k = build_corpus(name).complex;
    Stratification s = canonical_stratification(k);
    CHECK(ih_ranks(s, Perversity::middle(k->dim())) == homology_ranks(k));
  }
}

TEST_CASE("intersection homology of the pinched torus") {
  Stratification s = pinched_strat();
  CHECK(ih_ranks(s, Perversity::middle(2)) == std::vector<int>{1, 0, 1});
  // in dimension 2 every perversity has p(2) = 0, so all tables agree and
  // differ from ordinary homology (1, 1, 1)
  CHECK(ih_ranks(s, Perversity::zero(2)) == std::vector<int>{1, 0, 1});
  CHECK(ih_ranks(s, Perversity::top(2)) == std::vector<int>{1, 0, 1});
}

TEST_CASE("intersection homology of the suspended torus matches the cone formula") {
  // For the suspension of a closed manifold T, IH_k with cone degree cutoff
  // m = dim - 1 - p(dim) is H_k(T) truncated/shifted:
  //   k < m:  H_k(T);  k >= m: H_{k-1}(T) in degrees above m, 0 at k = m
  // (reduced in the relevant range). Computed here directly from H_*(T^2).
  ComplexPtr torus = build_corpus("grid_torus").complex;
  std::vector<int> ht = homology_ranks(torus);  // 1, 2, 1
  ComplexPtr susp = build_corpus("susp_torus").complex;
  Stratification s = canonical_stratification(susp);

  auto suspension_formula = [&](const Perversity& p) {
    int cutoff = 2 - p(3);  // chains may touch a cone point from degree 3 - p(3) on
    std::vector<int> expect(4, 0);
    for (int k = 0; k <= 3; ++k) {
      if (k == 0)
        expect[k] = 1;
      else if (k < cutoff)
        expect[k] = ht[k];                       // reduced H_k(T)
      else if (k > cutoff)
        expect[k] = (k == 1) ? ht[0] - 1 : ht[k - 1];  // reduced H_{k-1}(T)
      else
        expect[k] = 0;
    }
    return expect;
  };

  Perversity middle = Perversity::middle(3);
  CHECK(ih_ranks(s, middle) == suspension_formula(middle));
  CHECK(ih_ranks(s, middle) == std::vector<int>{1, 2, 0, 1});

  Perversity zero = Perversity::zero(3);
  CHECK(ih_ranks(s, zero) == suspension_formula(zero));
  CHECK(ih_ranks(s, zero) == std::vector<int>{1, 2, 0, 1});

  Perversity upper = Perversity::custom(3, {0, 1});
  CHECK(ih_ranks(s, upper) == suspension_formula(upper));
  CHECK(ih_ranks(s, upper) == std::vector<int>{1, 0, 2, 1});
}

TEST_CASE("complementary perversities give dual ranks on the suspended torus") {
  ComplexPtr susp = build_corpus("susp_torus").complex;
  Stratification s = canonical_stratification(susp);
  std::vector<int> lower = ih_ranks(s, Perversity::middle(3));
  std::vector<int> upper = ih_ranks(s, Perversity::custom(3, {0, 1}));
  for (int k = 0; k <= 3; ++k) CHECK(lower[k] == upper[3 - k]);
}

TEST_CASE("iota image on a smooth space is everything") {
  ComplexPtr torus = build_corpus("grid_torus").complex;
  Stratification s = canonical_stratification(torus);
  Perversity m = Perversity::middle(2);
  for (int d = 0; d <= 2; ++d) {
    HomologySpace h(torus, d);
    CHECK(iota_image(s, m, h) == Subspace::full(h.rank()));
  }
}

TEST_CASE("irreducible components") {
  ComplexPtr torus = build_corpus("grid_torus").complex;
  CHECK(irreducible_components(*torus).size() == 1);

  ComplexPtr glued = build_corpus("glued_spheres").complex;
  auto comps = irreducible_components(*glued);
  REQUIRE(comps.size() == 2);
  // each component is a full octahedron sphere
  for (const auto& c : comps) {
    int triangles = 0;
    for (const Simplex& s : c)
      if (s.size() == 3) ++triangles;
    CHECK(triangles == 8);
  }

  // mixed dimensions: a sphere with a dangling edge
  ComplexPtr mixed = build_complex({{"a", "b", "c"}, {"a", "b", "d"},
                                    {"a", "c", "d"}, {"b", "c", "d"},
                                    {"d", "e"}});
  CHECK(irreducible_components(*mixed).size() == 2);
}

TEST_CASE("image and kernel on the corpus match the expected tables") {
  for (const std::string& name : imh::testing::space_names()) {
    CorpusEntry entry = build_corpus(name);
    ImAnalysis an(entry.complex);
    CHECK(an.h_ranks() == entry.expected_ranks.at("H"));
    CHECK(an.im_ranks() == entry.expected_ranks.at("IM"));
    CHECK(an.ker_ranks() == entry.expected_ranks.at("KER"));
  }
}

TEST_CASE("kernel is the annihilator of the image, computed two ways") {
  for (const std::string& name : imh::testing::space_names()) {
    ImAnalysis an(build_corpus(name).complex);
    int dim = an.complex()->dim();
    for (int d = 0; d <= dim; ++d) {
      QMatrix p = pairing_matrix(an.hc(d), an.h(d));
      // route 1: cohomology coordinates x whose evaluation functional
      // P^T x kills the spanning set of pushed classes
      Subspace route1 = kernel_basis((p * an.iota_matrix(d)).transpose());
      CHECK(route1 == an.kernel(d));
      // route 2: annihilator of the image subspace inside H^*, pulled to
      // cohomology coordinates by solving P^T x = a for each basis functional
      Subspace ann = an.image(d).subspace.annihilator();
      QMatrix a_basis = ann.basis();
      QMatrix x_cols(an.hc(d).rank(), a_basis.cols());
      LinearSolver solver(p.transpose());
      for (int j = 0; j < a_basis.cols(); ++j) {
        auto x = solver.solve(a_basis.col(j));
        REQUIRE(x.has_value());
        for (int i = 0; i < static_cast<int>(x->size()); ++i)
          if ((*x)[i] != 0) x_cols.set(i, j, (*x)[i]);
      }
      CHECK(image_basis(x_cols) == an.kernel(d));
    }
  }
}

TEST_CASE("identity pushforward preserves image and kernel") {
  for (const std::string& name :
       {std::string("pinched_torus_icosa"), std::string("glued_spheres")}) {
    ComplexPtr k = build_corpus(name).complex;
    SimplicialMap id = identity_map(k);
    for (int d = 0; d <= k->dim(); ++d) {
      MapCheck push = check_pushforward(id, d);
      CHECK(push.contained);
      CHECK(push.equal);
      MapCheck pull = check_ker_pullback(id, d);
      CHECK(pull.contained);
      CHECK(pull.equal);
    }
  }
}

TEST_CASE("kernel cohomology is an ideal under cup product") {
  for (const std::string& name :
       {std::string("pinched_torus_icosa"), std::string("pinched_torus_quotient"),
        std::string("glued_spheres")}) {
    ComplexPtr k = build_corpus(name).complex;
    ImAnalysis an(k);
    int dim = k->dim();
    for (int p = 0; p <= dim; ++p) {
      // kernel representatives as actual cocycles
      const Subspace& kp = an.kernel(p);
      std::vector<SparseVec> ker_cocycles;
      for (int j = 0; j < kp.rank(); ++j) {
        SparseVec c;
        for (const auto& [i, val] : kp.basis().col(j))
          axpy(c, val, an.hc(p).representatives()[i]);
        ker_cocycles.push_back(c);
      }
      for (int q = 0; p + q <= dim; ++q) {
        const CohomologySpace& hq = an.hc(q);
        for (const SparseVec& kc : ker_cocycles)
          for (const SparseVec& u : hq.representatives()) {
            SparseVec prod = cup_product(*k, p, kc, q, u);
            auto coords = an.hc(p + q).coordinates(prod);
            SparseVec cv;
            for (size_t i = 0; i < coords.size(); ++i)
              if (coords[i] != 0) cv[static_cast<int>(i)] = coords[i];
            if (!cv.empty()) CHECK(an.kernel(p + q).contains(cv));
          }
      }
    }
    // KER^0 vanishes
    CHECK(an.kernel(0).rank() == 0);
  }
}

TEST_CASE("rank invariance under subdivision and stratum refinement") {
  for (const std::string& name : imh::testing::small_space_names()) {
    CheckReport report = check_invariance(build_corpus(name).complex);
    for (const CheckItem& item : report.items) {
      INFO(name << ": " << item.name << " " << item.detail);
      CHECK(item.pass);
    }
  }
}

TEST_CASE("Mayer-Vietoris image check on the glued spheres") {
  CorpusEntry glued = build_corpus("mv_cover_glued_spheres");
  const auto& [a, b] = glued.covers[0];
  MvImCheck k1 = mv_im_check(glued.complex, a, b, 1);
  CHECK(k1.contained);
  CHECK(k1.kernel_rank == 1);
  CHECK(k1.image_rank == 0);
  CHECK(k1.defect == 1);
  MvImCheck k2 = mv_im_check(glued.complex, a, b, 2);
  CHECK(k2.contained);
  CHECK(k2.defect == 0);
}

TEST_CASE("Mayer-Vietoris image sequence is exact for a smooth cover") {
  // hemispheres of a sphere: every IM is all of H, so defects vanish
  ComplexPtr k = [] {
    ComplexPtr base = build_complex({{"n", "e0", "e1"},
                                     {"n", "e1", "e2"},
                                     {"n", "e2", "e3"},
                                     {"n", "e3", "e0"},
                                     {"s", "e0", "e1"},
                                     {"s", "e1", "e2"},
                                     {"s", "e2", "e3"},
                                     {"s", "e3", "e0"}});
    auto marked = std::make_shared<SimplicialComplex>(*base);
    std::set<Simplex> top, bottom;
    for (int d = 0; d <= base->dim(); ++d)
      for (const Simplex& s : base->simplices(d)) {
        bool has_n = false, has_s = false;
        for (int v : s) {
          if (base->vertex_name(v) == "n") has_n = true;
          if (base->vertex_name(v) == "s") has_s = true;
        }
        if (!has_s) top.insert(s);
        if (!has_n) bottom.insert(s);
      }
    marked->add_subcomplex("top", top);
    marked->add_subcomplex("bottom", bottom);
    return ComplexPtr(marked);
  }();
  for (int d = 1; d <= 2; ++d) {
    MvImCheck c = mv_im_check(k, "top", "bottom", d);
    CHECK(c.contained);
    CHECK(c.defect == 0);
  }
}

TEST_CASE("fundamental classes of orientable components lie in the image") {
  for (const std::string& name : imh::testing::space_names()) {
    FundamentalClassReport report =
        fundamental_class_membership(build_corpus(name).complex);
    CHECK_FALSE(report.items.empty());
    CHECK(report.all_pass());
    for (const auto& item : report.items) {
      CHECK(item.orientable);
      CHECK(item.in_image);
    }
  }
}
