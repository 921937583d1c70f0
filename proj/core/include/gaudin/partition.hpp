#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gaudin/rat.hpp"

namespace gaudin {

// Integer partition: weakly decreasing positive parts. The empty partition
// is allowed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Number of boxes (sum of parts).
  int size() const;
  size_t rows() const { return parts_.size(); }
  // Part i (0-based), zero beyond the last row.
  int part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;

  // Shapes obtained by removing one corner box.
  std::vector<Partition> corners_removed() const;

  // Number of standard tableaux (hook length formula).
  unsigned long tableau_count() const;

  // All standard tableaux of this shape: row i of a tableau lists its
  // entries (1-based letters) left to right. Sorted by row-reading word.
  std::vector<std::vector<std::vector<int>>> standard_tableaux() const;

  std::string to_string() const;  // e.g. "(2,1)"

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  // Lexicographic on the part lists (so for fixed n, (n) is largest).
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
};

// All partitions of n, lexicographically decreasing: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

// The normalized central character vector (c_0, ..., c_n), n = size of the
// shape: c_k is dim/n! times the scalar through which the k-th central
// antisymmetrizer sum acts. Recurrence: c_0 = [shape is a single column],
// c_k = (1/k) * sum of c_{k-1} over all shapes obtained by removing one
// corner box; the empty shape has c_0 = 1.
std::vector<Rat> central_character(const Partition& shape);

// Scalar of the antisymmetrized generator of index n-k on the module of
// this shape: (n! / tableau_count) * central_character[k].
Rat central_scalar(const Partition& shape, int k);

}  // namespace gaudin
