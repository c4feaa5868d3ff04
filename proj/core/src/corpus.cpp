#include "imhom/corpus.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace imh {

namespace {

ComplexPtr circle3() {
  return build_complex({{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

ComplexPtr tetra_sphere() {
  return build_complex({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
}

// Octahedron with antipodal pairs (v0,v1), (v2,v3), (v4,v5).
ComplexPtr octahedron() {
  std::vector<std::vector<std::string>> faces;
  for (const char* i : {"v0", "v1"})
    for (const char* j : {"v2", "v3"})
      for (const char* k : {"v4", "v5"}) faces.push_back({i, j, k});
  return build_complex(faces);
}

// Icosahedron as a pentagonal antiprism (rings u1..u5 and l1..l5) capped by
// "t" and "b"; t and b are antipodal at edge distance 3.
ComplexPtr icosahedron() {
  auto u = [](int i) { return "u" + std::to_string((i - 1) % 5 + 1); };
  auto l = [](int i) { return "l" + std::to_string((i - 1) % 5 + 1); };
  std::vector<std::vector<std::string>> faces;
  for (int i = 1; i <= 5; ++i) {
    faces.push_back({"t", u(i), u(i + 1)});
    faces.push_back({u(i), u(i + 1), l(i)});
    faces.push_back({u(i + 1), l(i), l(i + 1)});
    faces.push_back({"b", l(i), l(i + 1)});
  }
  return build_complex(faces);
}

ComplexPtr csaszar_torus() {
  std::vector<std::vector<std::string>> faces;
  auto v = [](int i) { return "v" + std::to_string(((i % 7) + 7) % 7); };
  for (int i = 0; i < 7; ++i) {
    faces.push_back({v(i), v(i + 1), v(i + 3)});
    faces.push_back({v(i), v(i + 2), v(i + 3)});
  }
  return build_complex(faces);
}

ComplexPtr grid_torus() {
  ComplexPtr c = circle3();
  return product(*c, *c);
}

struct GluedSpheres {
  ComplexPtr complex;
  int glue_a = 0;  // image of the merged (v0, v0') pair
  int glue_b = 0;  // image of the merged (v1, v1') pair
};

GluedSpheres glued_spheres() {
  ComplexPtr o = octahedron();
  ComplexPtr two = disjoint_union(*o, *o);
  int a1 = two->vertex_index("v0"), a2 = two->vertex_index("v0'");
  int b1 = two->vertex_index("v1"), b2 = two->vertex_index("v1'");
  QuotientResult q = identify_vertices(two, {{a1, a2}, {b1, b2}});
  return {q.complex, q.quotient.vertex_map[a1], q.quotient.vertex_map[b1]};
}

struct TorusCollapse {
  ComplexPtr torus;  // twice-subdivided grid torus
  QuotientResult quotient;
};

// Collapse one row circle {a} x C3 of the grid torus to a point.
TorusCollapse torus_collapse() {
  ComplexPtr t = grid_torus();
  auto marked = std::make_shared<SimplicialComplex>(*t);
  std::set<int> row_verts;
  for (int v = 0; v < marked->num_vertices(); ++v)
    if (marked->vertex_name(v).rfind("(a,", 0) == 0) row_verts.insert(v);
  std::set<Simplex> row;
  for (int d = 0; d <= marked->dim(); ++d) {
    for (const Simplex& s : marked->simplices(d)) {
      bool inside = true;
      for (int v : s)
        if (!row_verts.count(v)) inside = false;
      if (inside) row.insert(s);
    }
  }
  marked->add_subcomplex("row", std::move(row));
  SubdivisionResult s1 = barycentric_subdivision(marked);
  SubdivisionResult s2 = barycentric_subdivision(s1.complex);
  TorusCollapse out;
  out.torus = s2.complex;
  out.quotient = collapse_subcomplex(s2.complex, "row");
  return out;
}

// Closure of the simplices avoiding one vertex (the closed complement of its
// open star).
std::set<Simplex> star_complement(const SimplicialComplex& k, int vertex) {
  std::set<Simplex> out;
  for (int d = 0; d <= k.dim(); ++d)
    for (const Simplex& s : k.simplices(d))
      if (!std::binary_search(s.begin(), s.end(), vertex)) out.insert(s);
  return out;
}

CorpusEntry with_ranks(std::string name, ComplexPtr k,
                       std::vector<int> h, std::vector<int> im, std::vector<int> ker) {
  CorpusEntry e;
  e.name = std::move(name);
  e.complex = std::move(k);
  e.expected_ranks["H"] = std::move(h);
  e.expected_ranks["IM"] = std::move(im);
  e.expected_ranks["KER"] = std::move(ker);
  return e;
}

}  // namespace

std::vector<std::string> corpus_names() {
  return {"circle",
          "sphere2",
          "sphere2_octa",
          "grid_torus",
          "csaszar_torus",
          "pinched_torus_icosa",
          "pinched_torus_quotient",
          "glued_spheres",
          "susp_torus",
          "normalization_map",
          "torus_collapse_map",
          "mv_cover_glued_spheres"};
}

CorpusEntry build_corpus(const std::string& name) {
  if (name == "circle")
    return with_ranks(name, circle3(), {1, 1}, {1, 1}, {0, 0});
  if (name == "sphere2")
    return with_ranks(name, tetra_sphere(), {1, 0, 1}, {1, 0, 1}, {0, 0, 0});
  if (name == "sphere2_octa")
    return with_ranks(name, octahedron(), {1, 0, 1}, {1, 0, 1}, {0, 0, 0});
  if (name == "grid_torus")
    return with_ranks(name, grid_torus(), {1, 2, 1}, {1, 2, 1}, {0, 0, 0});
  if (name == "csaszar_torus")
    return with_ranks(name, csaszar_torus(), {1, 2, 1}, {1, 2, 1}, {0, 0, 0});
  if (name == "pinched_torus_icosa") {
    ComplexPtr ico = icosahedron();
    QuotientResult q =
        identify_vertices(ico, {{ico->vertex_index("t"), ico->vertex_index("b")}});
    CorpusEntry e = with_ranks(name, q.complex, {1, 1, 1}, {1, 0, 1}, {0, 1, 0});
    e.maps.push_back({"normalization", "algebraic-model", q.quotient});
    return e;
  }
  if (name == "pinched_torus_quotient") {
    TorusCollapse tc = torus_collapse();
    CorpusEntry e = with_ranks(name, tc.quotient.complex, {1, 1, 1}, {1, 0, 1}, {0, 1, 0});
    e.maps.push_back({"torus_collapse", "non-algebraic-model", tc.quotient.quotient});
    return e;
  }
  if (name == "glued_spheres") {
    GluedSpheres g = glued_spheres();
    return with_ranks(name, g.complex, {1, 1, 2}, {1, 0, 2}, {0, 1, 0});
  }
  if (name == "susp_torus") {
    ComplexPtr t = grid_torus();
    CorpusEntry e =
        with_ranks(name, suspension(*t), {1, 0, 2, 1}, {1, 0, 0, 1}, {0, 0, 2, 0});
    e.expected_ranks["IH_middle"] = {1, 2, 0, 1};
    e.expected_ranks["IH_upper"] = {1, 0, 2, 1};
    return e;
  }
  if (name == "normalization_map") {
    CorpusEntry e = build_corpus("pinched_torus_icosa");
    e.name = name;
    return e;
  }
  if (name == "torus_collapse_map") {
    CorpusEntry e = build_corpus("pinched_torus_quotient");
    e.name = name;
    return e;
  }
  if (name == "mv_cover_glued_spheres") {
    GluedSpheres g = glued_spheres();
    auto marked = std::make_shared<SimplicialComplex>(*g.complex);
    marked->add_subcomplex("A", star_complement(*marked, g.glue_b));
    marked->add_subcomplex("B", star_complement(*marked, g.glue_a));
    CorpusEntry e = with_ranks(name, marked, {1, 1, 2}, {1, 0, 2}, {0, 1, 0});
    e.covers.emplace_back("A", "B");
    return e;
  }
  throw std::invalid_argument("unknown corpus name: " + name);
}

}  // namespace imh
