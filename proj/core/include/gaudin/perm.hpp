#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gaudin {

// Permutation of {0, ..., n-1}, stored as the image array.
// Composition convention: (a * b)(i) = a(b(i)), i.e. b acts first.
class Perm {
 public:
  Perm() = default;
  static Perm identity(size_t n);
  // images[i] = image of i (0-based); must be a bijection.
  static Perm from_images(std::vector<uint8_t> images);
  static Perm transposition(size_t n, int a, int b);
  // cycle (c0 c1 ... ck-1): c0 -> c1 -> ... -> c0, everything else fixed.
  static Perm from_cycle(size_t n, const std::vector<int>& cyc);

  size_t n() const { return img_.size(); }
  int operator()(int i) const { return img_[static_cast<size_t>(i)]; }

  Perm inverse() const;
  int sign() const;  // +1 or -1
  bool is_identity() const;

  // Non-trivial cycles; each starts at its smallest element, cycles sorted
  // by that element.
  std::vector<std::vector<int>> cycles() const;

  // Cycle type on the point set `mask` (fixed points inside mask count as
  // 1-cycles); the permutation must map mask into itself.
  std::vector<int> cycle_type_on(uint32_t mask) const;

  // Bitmask of moved points.
  uint32_t support() const;

  // One-line notation with 1-based entries, e.g. identity on 3 -> [1,2,3].
  std::vector<int> one_line() const;
  static Perm from_one_line(const std::vector<int>& images_one_based);
  std::string to_string() const;  // "2 1 3"

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

 private:
  std::vector<uint8_t> img_;
};

// ---- subset helpers (bitmask convention, points 0-based) -------------------

std::vector<int> mask_elements(uint32_t mask);
uint32_t full_mask(size_t n);

// All k-element subsets of `mask`, ascending as integers (deterministic).
std::vector<uint32_t> k_subsets_of(uint32_t mask, int k);

// All subsets of `mask` (including 0 and mask itself), ascending as integers.
std::vector<uint32_t> all_submasks(uint32_t mask);

// All permutations of {0..n-1}; lexicographic by image array.
std::vector<Perm> all_perms(size_t n);

// All permutations fixing every point outside `mask` (the group S_mask),
// lexicographic by image array.
std::vector<Perm> perms_moving_within(size_t n, uint32_t mask);

// Permutation with an explicitly tracked support set Z: sigma lies in S_Z
// (it may fix points of Z, but moves nothing outside).
struct SupportedPerm {
  Perm sigma;
  uint32_t z = 0;

  friend bool operator==(const SupportedPerm& a, const SupportedPerm& b) {
    return a.z == b.z && a.sigma == b.sigma;
  }
  friend bool operator<(const SupportedPerm& a, const SupportedPerm& b) {
    if (a.z != b.z) return a.z < b.z;
    return a.sigma < b.sigma;
  }
};

// Every (Z, sigma in S_Z) pair, Z over all subsets of {0..n-1}.
std::vector<SupportedPerm> all_supported_perms(size_t n);

}  // namespace gaudin
