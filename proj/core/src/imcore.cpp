#include "imhom/imcore.hpp"

#include <algorithm>
#include <stdexcept>

#include "imhom/mayer_vietoris.hpp"

namespace imh {

namespace {

QMatrix safe_boundary(const SimplicialComplex& k, int degree) {
  if (degree < 1 || degree > k.dim())
    return QMatrix(k.num_simplices(degree - 1), k.num_simplices(degree));
  return boundary_matrix(k, degree);
}

QMatrix cols_matrix(int rows, const std::vector<SparseVec>& cols) {
  QMatrix m(rows, 0);
  for (const SparseVec& c : cols) m.append_col(c);
  return m;
}

SparseVec coords_to_sparse(const std::vector<Rational>& c) {
  SparseVec out;
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    if (c[i] != 0) out.emplace(i, c[i]);
  return out;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool allowable_test(const Stratification& s, const Perversity& p, const Simplex& sigma,
                    int degree) {
  for (int c : s.codims()) {
    const std::set<int>& skel = s.skeleton_vertices(c);
    int count = 0;
    for (int v : sigma)
      if (skel.count(v)) ++count;
    if (count == 0) continue;  // empty intersection always passes
    if (count - 1 > degree - c + p(c)) return false;
  }
  return true;
}

std::vector<int> allowable_simplices(const Stratification& s, const Perversity& p,
                                     int degree) {
  std::vector<int> out;
  const auto& simplices = s.complex()->simplices(degree);
  for (int i = 0; i < static_cast<int>(simplices.size()); ++i)
    if (allowable_test(s, p, simplices[i], degree)) out.push_back(i);
  return out;
}

Subspace ic_chains(const Stratification& s, const Perversity& p, int degree) {
  const SimplicialComplex& k = *s.complex();
  int n_here = k.num_simplices(degree);
  if (degree < 0 || degree > k.dim()) return Subspace::zero(n_here);

  std::vector<int> allow = allowable_simplices(s, p, degree);
  std::vector<int> allow_below =
      degree > 0 ? allowable_simplices(s, p, degree - 1) : std::vector<int>{};
  std::vector<char> below_ok(k.num_simplices(degree - 1), 0);
  for (int i : allow_below) below_ok[i] = 1;
  std::vector<int> bad_row(k.num_simplices(degree - 1), -1);
  int n_bad = 0;
  for (int i = 0; i < static_cast<int>(bad_row.size()); ++i)
    if (!below_ok[i]) bad_row[i] = n_bad++;

  // boundary restricted to allowable columns, projected onto the
  // non-allowable rows; its kernel is the intersection chain group
  QMatrix d = safe_boundary(k, degree);
  QMatrix proj(n_bad, static_cast<int>(allow.size()));
  for (int j = 0; j < static_cast<int>(allow.size()); ++j) {
    SparseVec col;
    for (const auto& [r, v] : d.col(allow[j]))
      if (bad_row[r] >= 0) col.emplace(bad_row[r], v);
    proj.set_col(j, std::move(col));
  }
  Subspace local = kernel_basis(proj);
  QMatrix embedded(n_here, 0);
  for (int j = 0; j < local.rank(); ++j) {
    SparseVec col;
    for (const auto& [i, v] : local.basis().col(j)) col.emplace(allow[i], v);
    embedded.append_col(std::move(col));
  }
  return Subspace::span(embedded);
}

IHSpace intersection_homology(const Stratification& s, const Perversity& p, int degree) {
  const SimplicialComplex& k = *s.complex();
  IHSpace out;
  out.degree = degree;
  if (degree < 0 || degree > k.dim()) return out;

  QMatrix ic_here = ic_chains(s, p, degree).basis();
  QMatrix ic_above = ic_chains(s, p, degree + 1).basis();
  QMatrix d_here = safe_boundary(k, degree);
  QMatrix d_above = safe_boundary(k, degree + 1);

  QMatrix cycles = ic_here * kernel_basis(d_here * ic_here).basis();
  QMatrix boundaries = d_above * ic_above;

  QMatrix stacked = boundaries.hstack(cycles);
  ColumnReduction red = column_reduce(stacked, false, false);
  for (int i = 0; i < red.rank; ++i) {
    int j = red.pivot_cols[i];
    if (j < boundaries.cols()) continue;
    out.representatives.push_back(cycles.col(j - boundaries.cols()));
  }
  out.rank = static_cast<int>(out.representatives.size());
  return out;
}

std::vector<int> ih_ranks(const Stratification& s, const Perversity& p) {
  std::vector<int> out;
  for (int d = 0; d <= s.complex()->dim(); ++d)
    out.push_back(intersection_homology(s, p, d).rank);
  return out;
}

Subspace iota_image(const Stratification& s, const Perversity& p, const HomologySpace& h) {
  IHSpace ih = intersection_homology(s, p, h.degree());
  return h.span_of_classes(ih.representatives);
}

std::vector<std::set<Simplex>> irreducible_components(const SimplicialComplex& k) {
  std::vector<Simplex> maximal = k.maximal_simplices();
  std::map<int, std::vector<Simplex>, std::greater<int>> by_dim;
  for (const Simplex& s : maximal) by_dim[static_cast<int>(s.size()) - 1].push_back(s);

  std::vector<std::set<Simplex>> out;
  for (auto& [d, group] : by_dim) {
    std::sort(group.begin(), group.end());
    Dsu dsu(static_cast<int>(group.size()));
    if (d >= 1) {
      std::map<Simplex, std::vector<int>> face_members;
      for (int i = 0; i < static_cast<int>(group.size()); ++i) {
        for (int drop = 0; drop <= d; ++drop) {
          Simplex face = group[i];
          face.erase(face.begin() + drop);
          face_members[face].push_back(i);
        }
      }
      for (const auto& [face, members] : face_members) {
        if (members.size() != 2) continue;
        // regular gluing face: its link is exactly two points
        ComplexPtr lk = link(k, face);
        if (lk->dim() == 0 && lk->num_vertices() == 2)
          dsu.unite(members[0], members[1]);
      }
    }
    std::map<int, std::set<Simplex>> groups;
    for (int i = 0; i < static_cast<int>(group.size()); ++i) {
      std::set<Simplex>& comp = groups[dsu.find(i)];
      const Simplex& s = group[i];
      int m = static_cast<int>(s.size());
      for (int mask = 1; mask < (1 << m); ++mask) {
        Simplex face;
        for (int b = 0; b < m; ++b)
          if (mask & (1 << b)) face.push_back(s[b]);
        comp.insert(std::move(face));
      }
    }
    for (auto& [root, comp] : groups) out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(),
            [](const std::set<Simplex>& a, const std::set<Simplex>& b) {
              return *a.begin() < *b.begin();
            });
  return out;
}

ImAnalysis::ImAnalysis(ComplexPtr k) : complex_(std::move(k)) {
  components_ = irreducible_components(*complex_);
}

void ImAnalysis::ensure_components() {
  if (comps_ready_) return;
  for (const std::set<Simplex>& simplices : components_) {
    Component c{extract_subcomplex(complex_, simplices), {}, std::nullopt, std::nullopt,
                {}, {}};
    ComplexPtr cur = c.ext.complex;
    for (int round = 0;; ++round) {
      try {
        c.strat = canonical_stratification(cur, /*auto_subdivide=*/false);
        break;
      } catch (const std::invalid_argument& e) {
        if (round >= 3 || std::string(e.what()).find("not full") == std::string::npos)
          throw;
        SubdivisionResult sub = barycentric_subdivision(cur);
        c.sds.push_back(sub.sd);
        cur = sub.complex;
      }
    }
    c.perv = Perversity::middle(c.strat->formal_dim());
    comps_.push_back(std::move(c));
  }
  comps_ready_ = true;
}

const HomologySpace& ImAnalysis::h(int degree) {
  auto it = h_.find(degree);
  if (it == h_.end()) it = h_.emplace(degree, HomologySpace(complex_, degree)).first;
  return it->second;
}

const CohomologySpace& ImAnalysis::hc(int degree) {
  auto it = hc_.find(degree);
  if (it == hc_.end()) it = hc_.emplace(degree, CohomologySpace(complex_, degree)).first;
  return it->second;
}

Subspace ImAnalysis::component_image(Component& c, int degree, QMatrix& iota_cols) {
  const HomologySpace& ambient = h(degree);
  IHSpace ih = intersection_homology(*c.strat, *c.perv, degree);
  if (ih.rank == 0) return Subspace::zero(ambient.rank());

  std::vector<SparseVec> base_chains;
  if (c.sds.empty()) {
    base_chains = ih.representatives;
  } else {
    // transfer classes back along the subdivision isomorphism on homology
    auto hl = c.h_local.find(degree);
    if (hl == c.h_local.end())
      hl = c.h_local.emplace(degree, HomologySpace(c.strat->complex(), degree)).first;
    auto hb = c.h_base.find(degree);
    if (hb == c.h_base.end())
      hb = c.h_base.emplace(degree, HomologySpace(c.ext.complex, degree)).first;
    const HomologySpace& local = hl->second;
    const HomologySpace& base = hb->second;

    QMatrix m(local.rank(), base.rank());
    for (int j = 0; j < base.rank(); ++j) {
      SparseVec chain = base.representatives()[j];
      for (const ChainMap& sd : c.sds) chain = sd.matrix(degree).apply(chain);
      m.set_col(j, coords_to_sparse(local.coordinates(chain)));
    }
    Subspace local_span = local.span_of_classes(ih.representatives);
    Subspace base_span = preimage(m, local_span);
    for (int j = 0; j < base_span.rank(); ++j) {
      SparseVec chain;
      for (const auto& [i, coef] : base_span.basis().col(j))
        axpy(chain, coef, base.representatives()[i]);
      base_chains.push_back(std::move(chain));
    }
  }

  QMatrix inc = c.ext.inclusion.chain_matrix(degree);
  QMatrix cols(ambient.rank(), 0);
  for (const SparseVec& chain : base_chains) {
    SparseVec col = coords_to_sparse(ambient.coordinates(inc.apply(chain)));
    iota_cols.append_col(col);
    cols.append_col(std::move(col));
  }
  return image_basis(cols);
}

const ImageHomology& ImAnalysis::image(int degree) {
  auto it = image_.find(degree);
  if (it != image_.end()) return it->second;
  ensure_components();
  ImageHomology out;
  out.degree = degree;
  out.subspace = Subspace::zero(h(degree).rank());
  QMatrix iota_cols(h(degree).rank(), 0);
  for (Component& c : comps_) {
    Subspace img = component_image(c, degree, iota_cols);
    out.subspace = out.subspace.sum(img);
    out.per_component.push_back(std::move(img));
  }
  iota_.emplace(degree, std::move(iota_cols));
  return image_.emplace(degree, std::move(out)).first->second;
}

const QMatrix& ImAnalysis::iota_matrix(int degree) {
  image(degree);
  return iota_.at(degree);
}

const Subspace& ImAnalysis::kernel(int degree) {
  auto it = kernel_.find(degree);
  if (it != kernel_.end()) return it->second;
  QMatrix p = pairing_matrix(hc(degree), h(degree));
  Subspace ker = kernel_basis((p * image(degree).subspace.basis()).transpose());
  return kernel_.emplace(degree, std::move(ker)).first->second;
}

std::vector<int> ImAnalysis::h_ranks() {
  std::vector<int> out;
  for (int d = 0; d <= complex_->dim(); ++d) out.push_back(h(d).rank());
  return out;
}

std::vector<int> ImAnalysis::im_ranks() {
  std::vector<int> out;
  for (int d = 0; d <= complex_->dim(); ++d) out.push_back(image(d).subspace.rank());
  return out;
}

std::vector<int> ImAnalysis::ker_ranks() {
  std::vector<int> out;
  for (int d = 0; d <= complex_->dim(); ++d) out.push_back(kernel(d).rank());
  return out;
}

ImageHomology image_homology(const ComplexPtr& k, int degree) {
  ImAnalysis a(k);
  return a.image(degree);
}

Subspace kernel_cohomology(const ComplexPtr& k, int degree) {
  ImAnalysis a(k);
  return a.kernel(degree);
}

MapCheck check_pushforward(const SimplicialMap& f, int degree, ImAnalysis& dom,
                           ImAnalysis& cod) {
  f.validate();
  QMatrix m = induced_map(f, dom.h(degree), cod.h(degree));
  Subspace moved = image_basis(m * dom.image(degree).subspace.basis());
  const Subspace& target = cod.image(degree).subspace;
  MapCheck out;
  out.contained = target.contains(moved);
  out.equal = out.contained && moved.contains(target);
  out.moved_rank = moved.rank();
  out.target_rank = target.rank();
  return out;
}

MapCheck check_pushforward(const SimplicialMap& f, int degree) {
  ImAnalysis dom(f.domain), cod(f.codomain);
  return check_pushforward(f, degree, dom, cod);
}

MapCheck check_ker_pullback(const SimplicialMap& f, int degree, ImAnalysis& dom,
                            ImAnalysis& cod) {
  f.validate();
  QMatrix m = induced_cohomology_map(f, cod.hc(degree), dom.hc(degree));
  Subspace moved = image_basis(m * cod.kernel(degree).basis());
  MapCheck out;
  out.contained = dom.kernel(degree).contains(moved);
  out.equal = preimage(m, dom.kernel(degree)) == cod.kernel(degree);
  out.moved_rank = moved.rank();
  out.target_rank = dom.kernel(degree).rank();
  return out;
}

MapCheck check_ker_pullback(const SimplicialMap& f, int degree) {
  ImAnalysis dom(f.domain), cod(f.codomain);
  return check_ker_pullback(f, degree, dom, cod);
}

bool CheckReport::all_pass() const {
  for (const CheckItem& item : items)
    if (!item.pass) return false;
  return true;
}

namespace {

std::string ranks_to_string(const std::vector<int>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

CheckItem rank_item(const std::string& name, const std::vector<int>& got,
                    const std::vector<int>& want) {
  CheckItem item;
  item.name = name;
  item.pass = got == want;
  item.detail = ranks_to_string(want) + " vs " + ranks_to_string(got);
  return item;
}

}  // namespace

CheckReport check_invariance(const ComplexPtr& k) {
  CheckReport report;
  ImAnalysis base(k);
  SubdivisionResult sub = barycentric_subdivision(k);
  ImAnalysis subd(sub.complex);

  report.items.push_back(
      rank_item("homology ranks stable under subdivision", subd.h_ranks(), base.h_ranks()));
  report.items.push_back(
      rank_item("image ranks stable under subdivision", subd.im_ranks(), base.im_ranks()));
  report.items.push_back(
      rank_item("kernel ranks stable under subdivision", subd.ker_ranks(), base.ker_ranks()));

  CheckItem refine;
  refine.name = "intersection ranks stable under stratification refinement";
  if (k->dim() < 2) {
    refine.pass = true;
    refine.detail = "skipped (dimension < 2)";
  } else {
    Stratification strat = canonical_stratification(k, /*auto_subdivide=*/true);
    int n = strat.formal_dim();
    Perversity p = Perversity::middle(n);
    std::vector<int> before = ih_ranks(strat, p);

    // refine by declaring one regular vertex a deepest-codimension skeleton
    const std::set<int>& covered = strat.skeleton_vertices(2);
    int pick = -1;
    for (int v = 0; v < strat.complex()->num_vertices() && pick < 0; ++v) {
      if (covered.count(v)) continue;
      bool near = false;
      for (int w : covered) {
        int dist = strat.complex()->graph_distance(v, w);
        if (dist >= 0 && dist < 2) near = true;
      }
      if (!near) pick = v;
    }
    if (pick < 0) {
      for (int v = 0; v < strat.complex()->num_vertices() && pick < 0; ++v)
        if (!covered.count(v)) pick = v;
    }
    if (pick < 0) {
      refine.pass = false;
      refine.detail = "no regular vertex available";
    } else {
      std::map<int, std::set<Simplex>> skeleta = strat.stored_skeleta();
      skeleta[n].insert(Simplex{pick});
      // the refinement may need a subdivision of its own (e.g. when the new
      // point is adjacent to the singular set); ranks stay comparable
      Stratification refined =
          Stratification::make(strat.complex(), n, std::move(skeleta), true);
      std::vector<int> after = ih_ranks(refined, p);
      refine.pass = before == after;
      refine.detail = ranks_to_string(before) + " vs " + ranks_to_string(after);
    }
  }
  report.items.push_back(std::move(refine));
  return report;
}

MvImCheck mv_im_check(const ComplexPtr& k, const std::string& a, const std::string& b,
                      int degree) {
  MayerVietoris mv(k, a, b);
  ImAnalysis ax(k);
  ImAnalysis aab(mv.intersection().complex);

  QMatrix conn = mv.connecting(degree);
  Subspace moved = image_basis(conn * ax.image(degree).subspace.basis());
  const Subspace& im_ab = aab.image(degree - 1).subspace;

  MvImCheck out;
  out.contained = im_ab.contains(moved);
  Subspace ker = kernel_basis(mv.to_sum(degree - 1)).intersect(im_ab);
  out.kernel_rank = ker.rank();
  out.image_rank = moved.rank();
  out.defect = out.kernel_rank - out.image_rank;
  return out;
}

bool FundamentalClassReport::all_pass() const {
  for (const Item& item : items)
    if (item.orientable && !item.in_image) return false;
  return true;
}

FundamentalClassReport fundamental_class_membership(const ComplexPtr& k) {
  FundamentalClassReport report;
  ImAnalysis a(k);
  for (int ci = 0; ci < static_cast<int>(a.components().size()); ++ci) {
    SubcomplexResult ext = extract_subcomplex(k, a.components()[ci]);
    int d = ext.complex->dim();
    FundamentalClassReport::Item item;
    item.component = ci;
    item.dim = d;
    Subspace top_cycles = kernel_basis(safe_boundary(*ext.complex, d));
    SparseVec fundamental;
    for (int j = 0; j < top_cycles.rank() && !item.orientable; ++j) {
      SparseVec z = top_cycles.basis().col(j);
      if (static_cast<int>(z.size()) == ext.complex->num_simplices(d)) {
        item.orientable = true;
        fundamental = std::move(z);
      }
    }
    if (item.orientable) {
      SparseVec pushed = ext.inclusion.chain_matrix(d).apply(fundamental);
      SparseVec coords = coords_to_sparse(a.h(d).coordinates(pushed));
      item.in_image = a.image(d).subspace.contains(coords);
    }
    report.items.push_back(item);
  }
  return report;
}

}  // namespace imh
