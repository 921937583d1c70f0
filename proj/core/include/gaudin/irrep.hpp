#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "gaudin/group_algebra.hpp"
#include "gaudin/matrix.hpp"
#include "gaudin/partition.hpp"
#include "gaudin/perm.hpp"
#include "gaudin/poly.hpp"

namespace gaudin {

// Exact rational matrix model of the irreducible S_n module labeled by a
// partition shape, in the seminormal basis indexed by the standard tableaux
// of that shape (in their canonical order). Matrix columns are images of
// basis vectors. The defining relations of the adjacent transpositions are
// verified at construction time.
class IrrepModel {
 public:
  explicit IrrepModel(Partition shape);

  const Partition& shape() const { return shape_; }
  size_t letters() const { return n_; }
  size_t dim() const { return tabs_.size(); }
  const std::vector<std::vector<std::vector<int>>>& tableaux() const { return tabs_; }

  // Matrix of the adjacent transposition swapping letters i and i+1,
  // 1 <= i <= n-1.
  const Matrix<Rat>& adjacent(size_t i) const;

  // Matrix of an arbitrary permutation (reduced-word product, memoized).
  const Matrix<Rat>& act(const Perm& p) const;

  // Matrix of a group algebra element with exact coefficients.
  Matrix<Rat> act_on(const GroupElemQ& g) const;
  Matrix<PolyQ> act_on(const GroupElemPolyQ& g) const;

 private:
  void verify_relations() const;

  Partition shape_;
  size_t n_ = 0;
  std::vector<std::vector<std::vector<int>>> tabs_;
  std::vector<Matrix<Rat>> gens_;
  mutable std::map<Perm, Matrix<Rat>> cache_;
};

}  // namespace gaudin
