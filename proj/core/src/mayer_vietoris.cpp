#include "imhom/mayer_vietoris.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace imh {

namespace {

std::set<Simplex> intersect_sets(const std::set<Simplex>& x, const std::set<Simplex>& y) {
  std::set<Simplex> out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                        std::inserter(out, out.begin()));
  return out;
}

const HomologySpace& cached(std::map<int, HomologySpace>& cache, const ComplexPtr& k,
                            int degree) {
  auto it = cache.find(degree);
  if (it == cache.end()) it = cache.emplace(degree, HomologySpace(k, degree)).first;
  return it->second;
}

}  // namespace

MayerVietoris::MayerVietoris(ComplexPtr k, std::string a_name, std::string b_name)
    : total_(std::move(k)), a_name_(std::move(a_name)), b_name_(std::move(b_name)) {
  const auto& sa = total_->subcomplex(a_name_);
  const auto& sb = total_->subcomplex(b_name_);
  for (int d = 0; d <= total_->dim(); ++d) {
    for (const Simplex& s : total_->simplices(d)) {
      if (!sa.count(s) && !sb.count(s))
        throw std::invalid_argument("MayerVietoris: cover condition fails (a simplex "
                                    "lies in neither subcomplex)");
    }
  }
  a_ = extract_subcomplex(total_, sa);
  b_ = extract_subcomplex(total_, sb);
  ab_ = extract_subcomplex(total_, intersect_sets(sa, sb));
}

const HomologySpace& MayerVietoris::h_total(int degree) {
  return cached(h_total_, total_, degree);
}
const HomologySpace& MayerVietoris::h_a(int degree) {
  return cached(h_a_, a_.complex, degree);
}
const HomologySpace& MayerVietoris::h_b(int degree) {
  return cached(h_b_, b_.complex, degree);
}
const HomologySpace& MayerVietoris::h_ab(int degree) {
  return cached(h_ab_, ab_.complex, degree);
}

SparseVec MayerVietoris::connect_cycle(const SparseVec& z, int degree, bool to_b) {
  const auto& first = to_b ? total_->subcomplex(b_name_) : total_->subcomplex(a_name_);
  SparseVec part;  // portion of z assigned to the first cover member
  for (const auto& [idx, coef] : z) {
    if (first.count(total_->simplex_at(degree, idx))) part.emplace(idx, coef);
  }
  SparseVec boundary = boundary_matrix(*total_, degree).apply(part);
  // reindex the boundary into the intersection complex
  SparseVec out;
  const SimplicialComplex& ab = *ab_.complex;
  std::vector<int> to_sub(total_->num_vertices(), -1);
  for (int v = 0; v < ab.num_vertices(); ++v) to_sub[ab_.inclusion.vertex_map[v]] = v;
  for (const auto& [idx, coef] : boundary) {
    Simplex s = total_->simplex_at(degree - 1, idx);
    for (int& v : s) {
      v = to_sub[v];
      if (v < 0)
        throw std::logic_error("MayerVietoris: split boundary leaves the intersection");
    }
    int target = ab.index_of(s);
    if (target < 0)
      throw std::logic_error("MayerVietoris: split boundary leaves the intersection");
    out.emplace(target, coef);
  }
  return out;
}

QMatrix MayerVietoris::connecting(int degree, bool to_b) {
  const HomologySpace& hx = h_total(degree);
  const HomologySpace& hab = h_ab(degree - 1);
  QMatrix m(hab.rank(), hx.rank());
  for (int j = 0; j < hx.rank(); ++j) {
    SparseVec d = connect_cycle(hx.representatives()[j], degree, to_b);
    auto coords = hab.coordinates(d);
    for (int i = 0; i < hab.rank(); ++i) m.set(i, j, coords[i]);
  }
  return m;
}

QMatrix MayerVietoris::to_sum(int degree) {
  SimplicialMap into_a;
  into_a.domain = ab_.complex;
  into_a.codomain = a_.complex;
  // reroute the ambient inclusion through A's vertex numbering
  std::vector<int> to_a(total_->num_vertices(), -1);
  for (int v = 0; v < a_.complex->num_vertices(); ++v)
    to_a[a_.inclusion.vertex_map[v]] = v;
  for (int v = 0; v < ab_.complex->num_vertices(); ++v)
    into_a.vertex_map.push_back(to_a[ab_.inclusion.vertex_map[v]]);

  SimplicialMap into_b;
  into_b.domain = ab_.complex;
  into_b.codomain = b_.complex;
  std::vector<int> to_b(total_->num_vertices(), -1);
  for (int v = 0; v < b_.complex->num_vertices(); ++v)
    to_b[b_.inclusion.vertex_map[v]] = v;
  for (int v = 0; v < ab_.complex->num_vertices(); ++v)
    into_b.vertex_map.push_back(to_b[ab_.inclusion.vertex_map[v]]);

  QMatrix ia = induced_map(into_a, h_ab(degree), h_a(degree));
  QMatrix ib = induced_map(into_b, h_ab(degree), h_b(degree)).scaled(Rational(-1));
  QMatrix out(ia.rows() + ib.rows(), h_ab(degree).rank());
  for (int j = 0; j < out.cols(); ++j) {
    SparseVec col = ia.col(j);
    for (const auto& [i, v] : ib.col(j)) col.emplace(i + ia.rows(), v);
    out.set_col(j, std::move(col));
  }
  return out;
}

QMatrix MayerVietoris::from_sum(int degree) {
  QMatrix ua = induced_map(a_.inclusion, h_a(degree), h_total(degree));
  QMatrix ub = induced_map(b_.inclusion, h_b(degree), h_total(degree));
  return ua.hstack(ub);
}

}  // namespace imh
