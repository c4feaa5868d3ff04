#include "imhom/stratify.hpp"

#include <algorithm>
#include <stdexcept>

#include "imhom/homology.hpp"

namespace imh {

Perversity::Perversity(int top_dim, std::vector<int> values, std::string name)
    : top_dim_(top_dim), values_(std::move(values)), name_(std::move(name)) {}

Perversity Perversity::middle(int top_dim) {
  std::vector<int> v;
  for (int c = 2; c <= top_dim; ++c) v.push_back((c - 2) / 2);
  return Perversity(top_dim, std::move(v), "middle");
}

Perversity Perversity::zero(int top_dim) {
  std::vector<int> v(std::max(0, top_dim - 1), 0);
  return Perversity(top_dim, std::move(v), "zero");
}

Perversity Perversity::top(int top_dim) {
  std::vector<int> v;
  for (int c = 2; c <= top_dim; ++c) v.push_back(c - 2);
  return Perversity(top_dim, std::move(v), "top");
}

Perversity Perversity::custom(int top_dim, const std::vector<int>& values) {
  if (static_cast<int>(values.size()) != std::max(0, top_dim - 1))
    throw std::invalid_argument("Perversity: need one value per codim 2..n");
  if (!values.empty() && values[0] != 0)
    throw std::invalid_argument("Perversity: p(2) must be 0");
  for (size_t i = 0; i + 1 < values.size(); ++i) {
    if (values[i + 1] < values[i] || values[i + 1] > values[i] + 1)
      throw std::invalid_argument("Perversity: growth condition violated at codim " +
                                  std::to_string(i + 3));
  }
  return Perversity(top_dim, values, "custom");
}

int Perversity::operator()(int codim) const {
  if (codim < 2 || codim > top_dim_)
    throw std::out_of_range("Perversity: codim out of range");
  return values_[codim - 2];
}

bool Perversity::leq(const Perversity& other) const {
  if (top_dim_ != other.top_dim_) return false;
  for (size_t i = 0; i < values_.size(); ++i)
    if (values_[i] > other.values_[i]) return false;
  return true;
}

Stratification Stratification::make(ComplexPtr k, int formal_dim,
                                    std::map<int, std::set<Simplex>> skeleta,
                                    bool auto_subdivide) {
  if (formal_dim != k->dim())
    throw std::invalid_argument("Stratification: formal_dim must match the complex dimension");
  for (auto& [codim, simplices] : skeleta) {
    if (codim < 2)
      throw std::invalid_argument("Stratification: skeleta start at codimension 2");
    for (const Simplex& s : simplices)
      if (!k->has_simplex(s))
        throw std::invalid_argument("Stratification: skeleton simplex not in complex");
  }

  // cumulative skeleta, checked for dimension and fullness
  for (int round = 0;; ++round) {
    std::map<int, std::set<Simplex>> effective;
    std::set<Simplex> acc;
    for (int c = formal_dim; c >= 2; --c) {
      auto it = skeleta.find(c);
      if (it != skeleta.end()) acc.insert(it->second.begin(), it->second.end());
      effective[c] = acc;
    }
    bool all_full = true;
    for (const auto& [c, simplices] : effective) {
      for (const Simplex& s : simplices) {
        if (static_cast<int>(s.size()) - 1 > formal_dim - c)
          throw std::invalid_argument("Stratification: skeleton at codim " +
                                      std::to_string(c) + " exceeds dimension bound");
      }
      if (!is_full(*k, simplices)) all_full = false;
    }
    if (all_full) {
      Stratification out;
      out.complex_ = k;
      out.formal_dim_ = formal_dim;
      out.skeleta_ = std::move(skeleta);
      out.effective_ = std::move(effective);
      for (const auto& [c, simplices] : out.effective_) {
        std::set<int>& verts = out.skeleton_vertices_[c];
        for (const Simplex& s : simplices) verts.insert(s.begin(), s.end());
      }
      return out;
    }
    if (!auto_subdivide || round >= 3)
      throw std::invalid_argument("Stratification: a skeleton is not full; subdivide first");
    // carry the skeleta through one barycentric subdivision
    auto owned = std::make_shared<SimplicialComplex>(*k);
    for (const auto& [c, simplices] : skeleta)
      owned->add_subcomplex("__skeleton" + std::to_string(c), simplices);
    SubdivisionResult sub = barycentric_subdivision(owned);
    std::map<int, std::set<Simplex>> lifted;
    for (const auto& [c, simplices] : skeleta)
      lifted[c] = sub.complex->subcomplex("__skeleton" + std::to_string(c));
    auto cleaned = std::make_shared<SimplicialComplex>(*sub.complex);
    k = cleaned;
    skeleta = std::move(lifted);
  }
}

Stratification Stratification::trivial(ComplexPtr k) {
  int n = k->dim();
  return make(std::move(k), n, {}, false);
}

const std::set<Simplex>& Stratification::skeleton(int codim) const {
  static const std::set<Simplex> kEmpty;
  auto it = effective_.find(codim);
  return it == effective_.end() ? kEmpty : it->second;
}

const std::set<int>& Stratification::skeleton_vertices(int codim) const {
  static const std::set<int> kEmpty;
  auto it = skeleton_vertices_.find(codim);
  return it == skeleton_vertices_.end() ? kEmpty : it->second;
}

std::vector<int> Stratification::codims() const {
  std::vector<int> out;
  for (const auto& [c, simplices] : effective_)
    if (!simplices.empty()) out.push_back(c);
  return out;
}

std::optional<int> Stratification::codim_of(const Simplex& s) const {
  if (!complex_->has_simplex(s))
    throw std::invalid_argument("codim_of: simplex not in complex");
  std::optional<int> best;
  for (const auto& [c, simplices] : effective_)
    if (simplices.count(s)) best = std::max(best.value_or(c), c);
  return best;
}

std::vector<int> reduced_homology_ranks(const SimplicialComplex& k) {
  if (k.num_simplices(0) == 0) return {};
  auto kp = std::make_shared<SimplicialComplex>(k);
  std::vector<int> ranks = homology_ranks(kp);
  ranks[0] -= 1;
  return ranks;
}

namespace {

enum class LinkType { sphere, point, singular };

// Incidence index for computing many links on one complex.
struct StarIndex {
  const SimplicialComplex& k;
  std::vector<std::vector<std::pair<int, int>>> star;  // vertex -> (dim, idx)

  explicit StarIndex(const SimplicialComplex& kk) : k(kk), star(kk.num_vertices()) {
    for (int d = 0; d <= k.dim(); ++d)
      for (int i = 0; i < k.num_simplices(d); ++i)
        for (int v : k.simplex_at(d, i)) star[v].emplace_back(d, i);
  }

  SimplicialComplex link_of(const Simplex& s) const {
    std::vector<Simplex> members;
    for (const auto& [d, i] : star[s[0]]) {
      const Simplex& cof = k.simplex_at(d, i);
      if (cof.size() <= s.size()) continue;
      if (!std::includes(cof.begin(), cof.end(), s.begin(), s.end())) continue;
      Simplex rest;
      std::set_difference(cof.begin(), cof.end(), s.begin(), s.end(),
                          std::back_inserter(rest));
      members.push_back(std::move(rest));
    }
    std::set<int> used;
    for (const Simplex& t : members) used.insert(t.begin(), t.end());
    std::map<int, int> renumber;
    std::vector<std::string> names;
    for (int v : used) {
      renumber[v] = static_cast<int>(names.size());
      names.push_back(k.vertex_name(v));
    }
    for (Simplex& t : members)
      for (int& v : t) v = renumber[v];
    return SimplicialComplex::build(names, members, /*allow_empty=*/true);
  }
};

LinkType classify_link(const SimplicialComplex& link, int expected_dim) {
  std::vector<int> ranks = reduced_homology_ranks(link);
  if (ranks.empty())
    return expected_dim == -1 ? LinkType::sphere : LinkType::singular;
  bool acyclic = true;
  for (int r : ranks)
    if (r != 0) acyclic = false;
  if (expected_dim >= 0 && expected_dim < static_cast<int>(ranks.size())) {
    bool sphere = true;
    for (int d = 0; d < static_cast<int>(ranks.size()); ++d)
      if (ranks[d] != (d == expected_dim ? 1 : 0)) sphere = false;
    if (sphere) return LinkType::sphere;
  }
  return acyclic ? LinkType::point : LinkType::singular;
}

}  // namespace

bool is_rational_homology_manifold(const SimplicialComplex& k) {
  if (!k.is_pure())
    throw std::invalid_argument("is_rational_homology_manifold: complex is not pure");
  StarIndex idx(k);
  int n = k.dim();
  for (int d = 0; d <= n; ++d) {
    for (const Simplex& s : k.simplices(d)) {
      SimplicialComplex lk = idx.link_of(s);
      if (classify_link(lk, n - d - 1) != LinkType::sphere) return false;
    }
  }
  return true;
}

std::set<Simplex> singular_set(const SimplicialComplex& k) {
  StarIndex idx(k);
  int n = k.dim();
  std::set<Simplex> bad;
  for (int d = 0; d <= n; ++d) {
    for (const Simplex& s : k.simplices(d)) {
      SimplicialComplex lk = idx.link_of(s);
      if (classify_link(lk, n - d - 1) == LinkType::singular) bad.insert(s);
    }
  }
  // closure
  std::set<Simplex> closed;
  for (const Simplex& s : bad) {
    int m = static_cast<int>(s.size());
    for (int mask = 1; mask < (1 << m); ++mask) {
      Simplex face;
      for (int i = 0; i < m; ++i)
        if (mask & (1 << i)) face.push_back(s[i]);
      closed.insert(std::move(face));
    }
  }
  return closed;
}

Stratification canonical_stratification(const ComplexPtr& k, bool auto_subdivide) {
  Simplex offender;
  if (!k->is_pseudomanifold(/*with_boundary=*/true, &offender)) {
    std::string what = "canonical_stratification: not a pseudomanifold";
    if (!offender.empty()) {
      what += " (offending simplex:";
      for (int v : offender) what += " " + k->vertex_name(v);
      what += ")";
    }
    throw std::invalid_argument(what);
  }
  int n = k->dim();
  std::map<int, std::set<Simplex>> skeleta;
  std::set<Simplex> cur = singular_set(*k);
  while (!cur.empty()) {
    int d = 0;
    for (const Simplex& s : cur) d = std::max(d, static_cast<int>(s.size()) - 1);
    int codim = n - d;
    if (codim < 2)
      throw std::invalid_argument(
          "canonical_stratification: codimension-one singular locus");
    if (skeleta.count(codim)) break;
    skeleta[codim] = cur;
    // recurse into the singular set for deeper strata
    auto ext = extract_subcomplex(k, cur);
    if (ext.complex->dim() < 1) break;
    std::set<Simplex> deeper_local = singular_set(*ext.complex);
    std::set<Simplex> deeper;
    for (const Simplex& s : deeper_local) {
      Simplex lifted;
      for (int v : s) lifted.push_back(ext.inclusion.vertex_map[v]);
      std::sort(lifted.begin(), lifted.end());
      deeper.insert(std::move(lifted));
    }
    if (deeper == cur) break;
    cur = std::move(deeper);
  }
  return Stratification::make(k, n, std::move(skeleta), auto_subdivide);
}

}  // namespace imh
