#pragma once

#include <map>
#include <string>

#include "imhom/homology.hpp"

namespace imh {

// Mayer-Vietoris machinery for a simplex-wise closed cover X = A u B given
// by two named subcomplexes. The connecting homomorphism comes from an
// explicit chain splitting, with shared simplices assigned greedily to A.
class MayerVietoris {
 public:
  MayerVietoris(ComplexPtr k, std::string a_name, std::string b_name);

  const SubcomplexResult& a() const { return a_; }
  const SubcomplexResult& b() const { return b_; }
  const SubcomplexResult& intersection() const { return ab_; }
  const ComplexPtr& total() const { return total_; }

  const HomologySpace& h_total(int degree);
  const HomologySpace& h_a(int degree);
  const HomologySpace& h_b(int degree);
  const HomologySpace& h_ab(int degree);

  // Boundary of the A-part of a split cycle, as a chain of the intersection
  // complex. `to_b` flips the greedy assignment, for splitting-independence
  // checks.
  SparseVec connect_cycle(const SparseVec& z, int degree, bool to_b = false);

  // H_degree(X) -> H_{degree-1}(A n B) in representative bases.
  QMatrix connecting(int degree, bool to_b = false);

  // H_d(AB) -> H_d(A) + H_d(B)  (block column [i*, -j*])
  QMatrix to_sum(int degree);
  // H_d(A) + H_d(B) -> H_d(X)  (block row [u*, v*])
  QMatrix from_sum(int degree);

 private:
  ComplexPtr total_;
  std::string a_name_, b_name_;
  SubcomplexResult a_, b_, ab_;
  std::map<int, HomologySpace> h_total_, h_a_, h_b_, h_ab_;
};

}  // namespace imh
