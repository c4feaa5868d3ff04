#include "imhom/simplicial.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace imh {

namespace {

void close_under_faces(std::set<Simplex>& simplices) {
  std::deque<Simplex> queue(simplices.begin(), simplices.end());
  while (!queue.empty()) {
    Simplex s = std::move(queue.front());
    queue.pop_front();
    if (s.size() <= 1) continue;
    for (size_t i = 0; i < s.size(); ++i) {
      Simplex face;
      face.reserve(s.size() - 1);
      for (size_t j = 0; j < s.size(); ++j)
        if (j != i) face.push_back(s[j]);
      if (simplices.insert(face).second) queue.push_back(face);
    }
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::build(const std::vector<std::string>& vertex_names,
                                           const std::vector<Simplex>& maximal,
                                           bool allow_empty) {
  if (maximal.empty() && !allow_empty)
    throw std::invalid_argument("build_complex: empty input");
  SimplicialComplex k;
  k.vertex_names_ = vertex_names;
  for (int i = 0; i < static_cast<int>(vertex_names.size()); ++i) {
    if (!k.vertex_index_.emplace(vertex_names[i], i).second)
      throw std::invalid_argument("build_complex: duplicate vertex name " + vertex_names[i]);
  }
  std::set<Simplex> all;
  for (Simplex s : maximal) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("build_complex: repeated vertex in a tuple");
    for (int v : s)
      if (v < 0 || v >= static_cast<int>(vertex_names.size()))
        throw std::out_of_range("build_complex: vertex index out of range");
    all.insert(std::move(s));
  }
  close_under_faces(all);
  int dim = 0;
  for (const auto& s : all) dim = std::max(dim, static_cast<int>(s.size()) - 1);
  k.by_dim_.resize(all.empty() ? 0 : dim + 1);
  k.index_by_dim_.resize(k.by_dim_.size());
  for (const auto& s : all) {
    auto& bucket = k.by_dim_[s.size() - 1];
    bucket.push_back(s);
  }
  for (size_t d = 0; d < k.by_dim_.size(); ++d) {
    std::sort(k.by_dim_[d].begin(), k.by_dim_[d].end());
    for (int i = 0; i < static_cast<int>(k.by_dim_[d].size()); ++i)
      k.index_by_dim_[d].emplace(k.by_dim_[d][i], i);
  }
  return k;
}

int SimplicialComplex::vertex_index(const std::string& name) const {
  auto it = vertex_index_.find(name);
  return it == vertex_index_.end() ? -1 : it->second;
}

int SimplicialComplex::num_simplices(int d) const {
  if (d < 0 || d >= static_cast<int>(by_dim_.size())) return 0;
  return static_cast<int>(by_dim_[d].size());
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
  static const std::vector<Simplex> kEmpty;
  if (d < 0 || d >= static_cast<int>(by_dim_.size())) return kEmpty;
  return by_dim_[d];
}

int SimplicialComplex::index_of(const Simplex& s) const {
  int d = static_cast<int>(s.size()) - 1;
  if (d < 0 || d >= static_cast<int>(index_by_dim_.size())) return -1;
  auto it = index_by_dim_[d].find(s);
  return it == index_by_dim_[d].end() ? -1 : it->second;
}

long SimplicialComplex::total_simplices() const {
  long n = 0;
  for (const auto& bucket : by_dim_) n += static_cast<long>(bucket.size());
  return n;
}

int SimplicialComplex::euler_characteristic() const {
  int chi = 0;
  int sign = 1;
  for (const auto& bucket : by_dim_) {
    chi += sign * static_cast<int>(bucket.size());
    sign = -sign;
  }
  return chi;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= dim(); ++d) {
    std::set<Simplex> covered;
    for (const Simplex& t : simplices(d + 1)) {
      for (size_t i = 0; i < t.size(); ++i) {
        Simplex face;
        for (size_t j = 0; j < t.size(); ++j)
          if (j != i) face.push_back(t[j]);
        covered.insert(std::move(face));
      }
    }
    for (const Simplex& s : by_dim_[d])
      if (!covered.count(s)) out.push_back(s);
  }
  return out;
}

bool SimplicialComplex::is_pure() const {
  for (const Simplex& s : maximal_simplices())
    if (static_cast<int>(s.size()) - 1 != dim()) return false;
  return true;
}

bool SimplicialComplex::is_pseudomanifold(bool with_boundary, Simplex* offender) const {
  if (!is_pure()) {
    if (offender) offender->clear();
    return false;
  }
  int n = dim();
  if (n == 0) return true;
  std::map<Simplex, int> coface_count;
  for (const Simplex& s : simplices(n)) {
    for (size_t i = 0; i < s.size(); ++i) {
      Simplex face;
      for (size_t j = 0; j < s.size(); ++j)
        if (j != i) face.push_back(s[j]);
      ++coface_count[face];
    }
  }
  for (const Simplex& f : simplices(n - 1)) {
    int c = coface_count[f];
    bool ok = with_boundary ? (c == 1 || c == 2) : (c == 2);
    if (!ok) {
      if (offender) *offender = f;
      return false;
    }
  }
  return true;
}

std::vector<int> SimplicialComplex::vertex_components() const {
  int n = num_vertices();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (const Simplex& e : simplices(1)) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : adj[u]) {
        if (comp[v] < 0) {
          comp[v] = next;
          queue.push_back(v);
        }
      }
    }
    ++next;
  }
  return comp;
}

int SimplicialComplex::graph_distance(int u, int v) const {
  int n = num_vertices();
  std::vector<std::vector<int>> adj(n);
  for (const Simplex& e : simplices(1)) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  std::vector<int> dist(n, -1);
  dist[u] = 0;
  std::deque<int> queue{u};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (x == v) return dist[x];
    for (int y : adj[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return -1;
}

bool SimplicialComplex::has_subcomplex(const std::string& name) const {
  return subcomplexes_.count(name) > 0;
}

const std::set<Simplex>& SimplicialComplex::subcomplex(const std::string& name) const {
  auto it = subcomplexes_.find(name);
  if (it == subcomplexes_.end())
    throw std::invalid_argument("unknown subcomplex: " + name);
  return it->second;
}

void SimplicialComplex::add_subcomplex(const std::string& name, std::set<Simplex> simplices) {
  std::set<Simplex> closed = simplices;
  close_under_faces(closed);
  if (closed != simplices)
    throw std::invalid_argument("subcomplex " + name + " is not face-closed");
  for (const Simplex& s : simplices)
    if (!has_simplex(s))
      throw std::invalid_argument("subcomplex " + name + " contains a foreign simplex");
  subcomplexes_[name] = std::move(simplices);
}

ComplexPtr build_complex(const std::vector<std::vector<std::string>>& maximal) {
  std::vector<std::string> names;
  std::map<std::string, int> index;
  std::vector<Simplex> simplices;
  for (const auto& tuple : maximal) {
    Simplex s;
    for (const auto& name : tuple) {
      auto it = index.find(name);
      if (it == index.end()) {
        it = index.emplace(name, static_cast<int>(names.size())).first;
        names.push_back(name);
      }
      s.push_back(it->second);
    }
    simplices.push_back(std::move(s));
  }
  return std::make_shared<SimplicialComplex>(
      SimplicialComplex::build(names, simplices));
}

QMatrix boundary_matrix(const SimplicialComplex& k, int degree) {
  if (degree < 0 || degree > k.dim())
    throw std::out_of_range("boundary_matrix: degree out of range");
  QMatrix m(k.num_simplices(degree - 1), k.num_simplices(degree));
  if (degree == 0) return m;
  const auto& top = k.simplices(degree);
  for (int j = 0; j < static_cast<int>(top.size()); ++j) {
    const Simplex& s = top[j];
    int sign = 1;
    for (size_t i = 0; i < s.size(); ++i) {
      Simplex face;
      for (size_t t = 0; t < s.size(); ++t)
        if (t != i) face.push_back(s[t]);
      m.set(k.index_of(face), j, Rational(sign));
      sign = -sign;
    }
  }
  return m;
}

ComplexPtr link(const SimplicialComplex& k, const Simplex& s) {
  if (!k.has_simplex(s)) throw std::invalid_argument("link: simplex not in complex");
  std::vector<Simplex> members;
  for (int d = 0; d <= k.dim(); ++d) {
    for (const Simplex& t : k.simplices(d)) {
      Simplex inter;
      std::set_intersection(t.begin(), t.end(), s.begin(), s.end(),
                            std::back_inserter(inter));
      if (!inter.empty()) continue;
      Simplex join;
      std::merge(t.begin(), t.end(), s.begin(), s.end(), std::back_inserter(join));
      if (k.has_simplex(join)) members.push_back(t);
    }
  }
  // renumber onto the vertices that occur, preserving order and names
  std::set<int> used;
  for (const Simplex& t : members) used.insert(t.begin(), t.end());
  std::map<int, int> renumber;
  std::vector<std::string> names;
  for (int v : used) {
    renumber[v] = static_cast<int>(names.size());
    names.push_back(k.vertex_name(v));
  }
  std::vector<Simplex> relabeled;
  for (const Simplex& t : members) {
    Simplex r;
    for (int v : t) r.push_back(renumber[v]);
    relabeled.push_back(std::move(r));
  }
  return std::make_shared<SimplicialComplex>(
      SimplicialComplex::build(names, relabeled, /*allow_empty=*/true));
}

bool is_full(const SimplicialComplex& k, const std::set<Simplex>& sub) {
  std::set<int> verts;
  for (const Simplex& s : sub)
    verts.insert(s.begin(), s.end());
  for (int d = 0; d <= k.dim(); ++d) {
    for (const Simplex& s : k.simplices(d)) {
      bool spanned = true;
      for (int v : s)
        if (!verts.count(v)) {
          spanned = false;
          break;
        }
      if (spanned && !sub.count(s)) return false;
    }
  }
  return true;
}

bool is_full(const SimplicialComplex& k, const std::string& sub_name) {
  return is_full(k, k.subcomplex(sub_name));
}

void SimplicialMap::validate() const {
  if (!domain || !codomain) throw std::invalid_argument("SimplicialMap: missing complex");
  if (static_cast<int>(vertex_map.size()) != domain->num_vertices())
    throw std::invalid_argument("SimplicialMap: vertex map is not total");
  for (int v : vertex_map)
    if (v < 0 || v >= codomain->num_vertices())
      throw std::invalid_argument("SimplicialMap: image vertex out of range");
  for (int d = 0; d <= domain->dim(); ++d) {
    for (const Simplex& s : domain->simplices(d)) {
      Simplex image;
      for (int v : s) image.push_back(vertex_map[v]);
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (!codomain->has_simplex(image))
        throw std::invalid_argument("SimplicialMap: a simplex maps to a non-simplex");
    }
  }
}

namespace {

// Sign of the permutation sorting `v`, or 0 if it has repeats.
int sort_sign(std::vector<int>& v) {
  int sign = 1;
  for (size_t i = 0; i < v.size(); ++i) {
    for (size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] == v[j]) return 0;
      if (v[i] > v[j]) {
        std::swap(v[i], v[j]);
        sign = -sign;
      }
    }
  }
  return sign;
}

}  // namespace

QMatrix SimplicialMap::chain_matrix(int degree) const {
  QMatrix m(codomain->num_simplices(degree), domain->num_simplices(degree));
  for (int j = 0; j < domain->num_simplices(degree); ++j) {
    std::vector<int> image;
    for (int v : domain->simplex_at(degree, j)) image.push_back(vertex_map[v]);
    int sign = sort_sign(image);
    if (sign == 0) continue;
    int idx = codomain->index_of(image);
    if (idx < 0) throw std::logic_error("SimplicialMap: invalid image simplex");
    m.set(idx, j, Rational(sign));
  }
  return m;
}

SimplicialMap identity_map(const ComplexPtr& k) {
  SimplicialMap f;
  f.domain = k;
  f.codomain = k;
  f.vertex_map.resize(k->num_vertices());
  for (int i = 0; i < k->num_vertices(); ++i) f.vertex_map[i] = i;
  return f;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (g.domain.get() != f.codomain.get())
    throw std::invalid_argument("compose: domains do not match");
  SimplicialMap h;
  h.domain = f.domain;
  h.codomain = g.codomain;
  for (int v : f.vertex_map) h.vertex_map.push_back(g.vertex_map[v]);
  return h;
}

QMatrix ChainMap::matrix(int degree) const {
  if (degree >= 0 && degree < static_cast<int>(mats.size())) return mats[degree];
  return QMatrix(codomain->num_simplices(degree), domain->num_simplices(degree));
}

ChainMap chain_map_of(const SimplicialMap& f) {
  ChainMap cm;
  cm.domain = f.domain;
  cm.codomain = f.codomain;
  for (int d = 0; d <= f.domain->dim(); ++d) cm.mats.push_back(f.chain_matrix(d));
  return cm;
}

SubcomplexResult extract_subcomplex(const ComplexPtr& k, const std::string& name) {
  return extract_subcomplex(k, k->subcomplex(name));
}

SubcomplexResult extract_subcomplex(const ComplexPtr& k, const std::set<Simplex>& simplices) {
  std::set<int> used;
  for (const Simplex& s : simplices) used.insert(s.begin(), s.end());
  std::map<int, int> renumber;
  std::vector<std::string> names;
  std::vector<int> back;
  for (int v : used) {
    renumber[v] = static_cast<int>(names.size());
    names.push_back(k->vertex_name(v));
    back.push_back(v);
  }
  std::vector<Simplex> relabeled;
  for (const Simplex& s : simplices) {
    Simplex r;
    for (int v : s) r.push_back(renumber[v]);
    relabeled.push_back(std::move(r));
  }
  SubcomplexResult out;
  out.complex = std::make_shared<SimplicialComplex>(
      SimplicialComplex::build(names, relabeled, /*allow_empty=*/true));
  out.inclusion.domain = out.complex;
  out.inclusion.codomain = k;
  out.inclusion.vertex_map = back;
  return out;
}

}  // namespace imh
