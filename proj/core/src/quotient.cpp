#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "imhom/simplicial.hpp"

namespace imh {

namespace {

QuotientResult apply_vertex_merge(const ComplexPtr& kp, const std::vector<int>& target,
                                  bool allow_degenerate) {
  const SimplicialComplex& k = *kp;
  // target: old vertex -> representative old vertex (itself if kept)
  std::vector<int> new_index(k.num_vertices(), -1);
  std::vector<std::string> names;
  for (int v = 0; v < k.num_vertices(); ++v) {
    if (target[v] != v) continue;
    new_index[v] = static_cast<int>(names.size());
    names.push_back(k.vertex_name(v));
  }
  std::vector<int> vmap(k.num_vertices());
  for (int v = 0; v < k.num_vertices(); ++v) vmap[v] = new_index[target[v]];

  // Every nondegenerate image survives; degenerate simplices are dropped and
  // their surviving faces are picked up here as separate entries.
  std::vector<Simplex> maximal;
  for (int d = 0; d <= k.dim(); ++d) {
    for (const Simplex& s : k.simplices(d)) {
      Simplex image;
      for (int v : s) image.push_back(vmap[v]);
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (image.size() < s.size()) {
        if (!allow_degenerate)
          throw std::logic_error("vertex identification degenerated a simplex");
        continue;
      }
      maximal.push_back(std::move(image));
    }
  }

  auto q = std::make_shared<SimplicialComplex>(SimplicialComplex::build(names, maximal));

  for (const auto& [name, simplices] : k.subcomplexes()) {
    std::set<Simplex> image;
    for (const Simplex& s : simplices) {
      Simplex im;
      for (int v : s) im.push_back(vmap[v]);
      std::sort(im.begin(), im.end());
      im.erase(std::unique(im.begin(), im.end()), im.end());
      if (im.size() == s.size()) image.insert(std::move(im));
    }
    q->add_subcomplex(name, std::move(image));
  }

  QuotientResult out;
  out.complex = q;
  out.quotient.domain = kp;
  out.quotient.codomain = q;
  out.quotient.vertex_map = vmap;
  out.quotient.validate();
  return out;
}

}  // namespace

QuotientResult identify_vertices(const ComplexPtr& kp,
                                 const std::vector<std::pair<int, int>>& pairs) {
  const SimplicialComplex& k = *kp;
  std::set<int> seen;
  std::vector<int> comp = k.vertex_components();
  for (const auto& [u, v] : pairs) {
    if (u < 0 || u >= k.num_vertices() || v < 0 || v >= k.num_vertices() || u == v)
      throw std::invalid_argument("identify_vertices: bad pair");
    if (!seen.insert(u).second || !seen.insert(v).second)
      throw std::invalid_argument(
          "identify_vertices: vertex reused across pairs: (" + k.vertex_name(u) +
          ", " + k.vertex_name(v) + ")");
    if (comp[u] == comp[v]) {
      int d = k.graph_distance(u, v);
      if (d >= 0 && d < 3)
        throw std::invalid_argument(
            "identify_vertices: pair closer than distance 3: (" + k.vertex_name(u) +
            ", " + k.vertex_name(v) + ")");
    }
  }
  std::vector<int> target(k.num_vertices());
  for (int v = 0; v < k.num_vertices(); ++v) target[v] = v;
  for (const auto& [u, v] : pairs) target[std::max(u, v)] = std::min(u, v);
  return apply_vertex_merge(kp, target, /*allow_degenerate=*/false);
}

QuotientResult collapse_subcomplex(const ComplexPtr& kp, const std::string& sub_name) {
  const SimplicialComplex& k = *kp;
  const std::set<Simplex>& sub = k.subcomplex(sub_name);
  if (sub.empty())
    throw std::invalid_argument("collapse_subcomplex: empty subcomplex");
  if (!is_full(k, sub))
    throw std::invalid_argument("collapse_subcomplex: subcomplex is not full");
  if (k.subdivision_level() < 2)
    throw std::invalid_argument(
        "collapse_subcomplex: complex must be barycentrically subdivided twice first");

  std::set<int> verts;
  std::set<std::pair<int, int>> edges;
  for (const Simplex& s : sub) {
    if (s.size() == 1) verts.insert(s[0]);
    if (s.size() == 2) edges.emplace(s[0], s[1]);
  }
  // connectivity within the subcomplex's own 1-skeleton
  std::map<int, std::vector<int>> adj;
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::set<int> reached;
  std::deque<int> queue{*verts.begin()};
  reached.insert(*verts.begin());
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : adj[u])
      if (reached.insert(v).second) queue.push_back(v);
  }
  if (reached.size() != verts.size())
    throw std::invalid_argument("collapse_subcomplex: subcomplex is not connected");

  int root = *verts.begin();
  std::vector<int> target(k.num_vertices());
  for (int v = 0; v < k.num_vertices(); ++v)
    target[v] = verts.count(v) ? root : v;
  return apply_vertex_merge(kp, target, /*allow_degenerate=*/true);
}

}  // namespace imh
