#include <algorithm>
#include <set>
#include <stdexcept>

#include "imhom/simplicial.hpp"

namespace imh {

SubdivisionResult barycentric_subdivision(const ComplexPtr& kp) {
  const SimplicialComplex& k = *kp;
  // One new vertex per simplex of k, ordered by (dimension, index); old
  // vertices keep their names and relative order.
  std::vector<std::vector<int>> new_vertex(k.dim() + 1);
  std::vector<std::string> names;
  std::set<std::string> taken;
  std::vector<std::pair<int, int>> origin;  // new vertex -> (dim, index) in k
  for (int d = 0; d <= k.dim(); ++d) {
    new_vertex[d].resize(k.num_simplices(d));
    for (int i = 0; i < k.num_simplices(d); ++i) {
      std::string name = d == 0 ? k.vertex_name(k.simplex_at(0, i)[0])
                                : "b" + std::to_string(d) + "." + std::to_string(i);
      while (!taken.insert(name).second) name += "'";
      new_vertex[d][i] = static_cast<int>(names.size());
      names.push_back(std::move(name));
      origin.emplace_back(d, i);
    }
  }

  // Maximal simplices are the full flags inside maximal simplices of k,
  // one per vertex ordering.
  std::vector<Simplex> maximal;
  for (const Simplex& top : k.maximal_simplices()) {
    Simplex perm = top;
    std::sort(perm.begin(), perm.end());
    do {
      Simplex flag;
      Simplex prefix;
      for (int v : perm) {
        prefix.push_back(v);
        Simplex sorted = prefix;
        std::sort(sorted.begin(), sorted.end());
        int d = static_cast<int>(sorted.size()) - 1;
        flag.push_back(new_vertex[d][k.index_of(sorted)]);
      }
      maximal.push_back(std::move(flag));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  auto sub = std::make_shared<SimplicialComplex>(
      SimplicialComplex::build(names, maximal));
  sub->set_subdivision_level(k.subdivision_level() + 1);

  // Carry named subcomplexes forward: a flag lies in the image of S iff all
  // of its barycenters come from simplices of S.
  for (const auto& [name, simplices] : k.subcomplexes()) {
    std::set<Simplex> image;
    for (int d = 0; d <= sub->dim(); ++d) {
      for (const Simplex& s : sub->simplices(d)) {
        bool inside = true;
        for (int v : s) {
          auto [od, oi] = origin[v];
          if (!simplices.count(k.simplex_at(od, oi))) {
            inside = false;
            break;
          }
        }
        if (inside) image.insert(s);
      }
    }
    sub->add_subcomplex(name, std::move(image));
  }

  // Subdivision chain map, built by coning each simplex over its barycenter:
  // sd(v) = b_v, sd(s) = (-1)^dim b_s . sd(boundary s).
  std::vector<std::vector<SparseVec>> memo(k.dim() + 1);
  for (int d = 0; d <= k.dim(); ++d) memo[d].resize(k.num_simplices(d));
  for (int i = 0; i < k.num_simplices(0); ++i) {
    Simplex v{new_vertex[0][i]};
    memo[0][i].emplace(sub->index_of(v), 1);
  }
  for (int d = 1; d <= k.dim(); ++d) {
    const int outer_sign = (d % 2 == 0) ? 1 : -1;
    for (int i = 0; i < k.num_simplices(d); ++i) {
      const Simplex& s = k.simplex_at(d, i);
      const int apex = new_vertex[d][i];
      SparseVec acc;
      int face_sign = 1;
      for (size_t f = 0; f < s.size(); ++f) {
        Simplex face;
        for (size_t t = 0; t < s.size(); ++t)
          if (t != f) face.push_back(s[t]);
        const SparseVec& fv = memo[d - 1][k.index_of(face)];
        for (const auto& [idx, a] : fv) {
          Simplex coned = sub->simplex_at(d - 1, idx);
          coned.push_back(apex);  // the apex is the deepest barycenter
          int target = sub->index_of(coned);
          if (target < 0) throw std::logic_error("subdivision: missing flag");
          Rational contrib = a * face_sign * outer_sign;
          auto it = acc.find(target);
          if (it == acc.end()) {
            acc.emplace(target, contrib);
          } else {
            it->second += contrib;
            if (it->second == 0) acc.erase(it);
          }
        }
        face_sign = -face_sign;
      }
      memo[d][i] = std::move(acc);
    }
  }

  SubdivisionResult out;
  out.complex = sub;
  out.sd.domain = kp;
  out.sd.codomain = sub;
  for (int d = 0; d <= k.dim(); ++d) {
    QMatrix m(sub->num_simplices(d), k.num_simplices(d));
    for (int i = 0; i < k.num_simplices(d); ++i) m.set_col(i, memo[d][i]);
    out.sd.mats.push_back(std::move(m));
  }
  return out;
}

}  // namespace imh
