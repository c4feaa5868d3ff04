#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "imhom/corpus.hpp"
#include "imhom/homology.hpp"
#include "imhom/imcore.hpp"

using namespace imh;

TEST_CASE("corpus names build") {
  std::vector<std::string> names = corpus_names();
  CHECK(names.size() >= 12);
  for (const std::string& name : names) {
    CorpusEntry entry = build_corpus(name);
    CHECK(entry.name == name);
    REQUIRE(entry.complex != nullptr);
  }
  CHECK_THROWS(build_corpus("no_such_space"));
}

TEST_CASE("expected homology tables are correct") {
  for (const std::string& name : imh::testing::space_names()) {
    CorpusEntry entry = build_corpus(name);
    REQUIRE(entry.expected_ranks.count("H"));
    CHECK(homology_ranks(entry.complex) == entry.expected_ranks.at("H"));
  }
}

TEST_CASE("expected intersection homology tables are correct") {
  for (const std::string& name : imh::testing::space_names()) {
    CorpusEntry entry = build_corpus(name);
    if (entry.expected_ranks.count("IH_middle")) {
      Stratification s = canonical_stratification(entry.complex);
      CHECK(ih_ranks(s, Perversity::middle(entry.complex->dim())) ==
            entry.expected_ranks.at("IH_middle"));
    }
  }
}

TEST_CASE("the two pinched torus models have identical tables") {
  CorpusEntry a = build_corpus("pinched_torus_icosa");
  CorpusEntry b = build_corpus("pinched_torus_quotient");
  for (const std::string& key : {std::string("H"), std::string("IM"), std::string("KER")}) {
    REQUIRE(a.expected_ranks.count(key));
    REQUIRE(b.expected_ranks.count(key));
    CHECK(a.expected_ranks.at(key) == b.expected_ranks.at(key));
  }
}

TEST_CASE("corpus maps are valid simplicial maps") {
  for (const std::string& name : {std::string("normalization_map"),
                                  std::string("torus_collapse_map")}) {
    CorpusEntry entry = build_corpus(name);
    REQUIRE(entry.maps.size() == 1);
    const LabeledMap& m = entry.maps[0];
    CHECK_NOTHROW(m.map.validate());
    CHECK((m.label == "algebraic-model" || m.label == "non-algebraic-model"));
  }
  CHECK(build_corpus("normalization_map").maps[0].label == "algebraic-model");
  CHECK(build_corpus("torus_collapse_map").maps[0].label == "non-algebraic-model");
}

TEST_CASE("normalization map is surjective on vertices of the pinched torus") {
  CorpusEntry entry = build_corpus("normalization_map");
  const LabeledMap& m = entry.maps[0];
  CHECK(m.map.domain->num_vertices() == 12);   // icosahedron
  CHECK(m.map.codomain->num_vertices() == 11); // pinched torus
  std::set<int> hit(m.map.vertex_map.begin(), m.map.vertex_map.end());
  CHECK(static_cast<int>(hit.size()) == m.map.codomain->num_vertices());
}

TEST_CASE("covers really cover") {
  CorpusEntry entry = build_corpus("mv_cover_glued_spheres");
  REQUIRE(entry.covers.size() == 1);
  const auto& [a_name, b_name] = entry.covers[0];
  REQUIRE(entry.complex->has_subcomplex(a_name));
  REQUIRE(entry.complex->has_subcomplex(b_name));
  const auto& a = entry.complex->subcomplex(a_name);
  const auto& b = entry.complex->subcomplex(b_name);
  for (int d = 0; d <= entry.complex->dim(); ++d)
    for (const Simplex& s : entry.complex->simplices(d))
      CHECK((a.count(s) || b.count(s)));
  // both pieces are full subcomplexes (closed cover)
  CHECK(is_full(*entry.complex, a_name));
  CHECK(is_full(*entry.complex, b_name));
}

TEST_CASE("glued spheres glue points keep their names") {
  ComplexPtr glued = build_corpus("glued_spheres").complex;
  CHECK(glued->vertex_index("v0") >= 0);
  CHECK(glued->vertex_index("v1") >= 0);
}

TEST_CASE("icosahedron model is a homology sphere with antipodal caps") {
  // reachable through the normalization map's domain
  ComplexPtr icosa = build_corpus("normalization_map").maps[0].map.domain;
  CHECK(homology_ranks(icosa) == std::vector<int>{1, 0, 1});
  int t = icosa->vertex_index("t");
  int b = icosa->vertex_index("b");
  REQUIRE(t >= 0);
  REQUIRE(b >= 0);
  CHECK(icosa->graph_distance(t, b) == 3);
}
