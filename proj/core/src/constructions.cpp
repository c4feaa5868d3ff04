#include <algorithm>
#include <set>
#include <stdexcept>

#include "imhom/simplicial.hpp"

namespace imh {

namespace {

std::string fresh_name(std::set<std::string>& taken, std::string base) {
  while (!taken.insert(base).second) base += "'";
  return base;
}

}  // namespace

ComplexPtr cone(const SimplicialComplex& k, const std::string& apex) {
  std::vector<std::string> names = k.vertex_names();
  std::set<std::string> taken(names.begin(), names.end());
  names.push_back(fresh_name(taken, apex));
  int a = static_cast<int>(names.size()) - 1;
  std::vector<Simplex> maximal;
  for (Simplex s : k.maximal_simplices()) {
    s.push_back(a);
    maximal.push_back(std::move(s));
  }
  if (maximal.empty()) maximal.push_back({a});
  return std::make_shared<SimplicialComplex>(SimplicialComplex::build(names, maximal));
}

ComplexPtr suspension(const SimplicialComplex& k) {
  std::vector<std::string> names = k.vertex_names();
  std::set<std::string> taken(names.begin(), names.end());
  names.push_back(fresh_name(taken, "north"));
  names.push_back(fresh_name(taken, "south"));
  int n = static_cast<int>(names.size()) - 2;
  int s = n + 1;
  std::vector<Simplex> maximal;
  for (const Simplex& m : k.maximal_simplices()) {
    Simplex up = m;
    up.push_back(n);
    Simplex down = m;
    down.push_back(s);
    maximal.push_back(std::move(up));
    maximal.push_back(std::move(down));
  }
  return std::make_shared<SimplicialComplex>(SimplicialComplex::build(names, maximal));
}

ComplexPtr disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<std::string> names = a.vertex_names();
  std::set<std::string> taken(names.begin(), names.end());
  int offset = a.num_vertices();
  for (const std::string& n : b.vertex_names())
    names.push_back(fresh_name(taken, n));
  std::vector<Simplex> maximal = a.maximal_simplices();
  for (Simplex s : b.maximal_simplices()) {
    for (int& v : s) v += offset;
    maximal.push_back(std::move(s));
  }
  return std::make_shared<SimplicialComplex>(SimplicialComplex::build(names, maximal));
}

namespace {

void staircases(int p, int q, int i, int j, Simplex path,
                const std::vector<int>& pair_index, int bcols,
                std::vector<Simplex>& out) {
  path.push_back(pair_index[i * bcols + j]);
  if (i == p && j == q) {
    out.push_back(std::move(path));
    return;
  }
  if (i < p) staircases(p, q, i + 1, j, path, pair_index, bcols, out);
  if (j < q) staircases(p, q, i, j + 1, path, pair_index, bcols, out);
}

}  // namespace

ComplexPtr product(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<std::string> names;
  for (int u = 0; u < a.num_vertices(); ++u)
    for (int v = 0; v < b.num_vertices(); ++v)
      names.push_back("(" + a.vertex_name(u) + "," + b.vertex_name(v) + ")");
  auto pair_id = [&](int u, int v) { return u * b.num_vertices() + v; };

  std::vector<Simplex> maximal;
  for (const Simplex& sa : a.maximal_simplices()) {
    for (const Simplex& sb : b.maximal_simplices()) {
      int p = static_cast<int>(sa.size()) - 1;
      int q = static_cast<int>(sb.size()) - 1;
      // grid of product vertices for this cell, row-major over (sa, sb)
      std::vector<int> grid((p + 1) * (q + 1));
      for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q; ++j)
          grid[i * (q + 1) + j] = pair_id(sa[i], sb[j]);
      staircases(p, q, 0, 0, {}, grid, q + 1, maximal);
    }
  }
  return std::make_shared<SimplicialComplex>(SimplicialComplex::build(names, maximal));
}

}  // namespace imh
