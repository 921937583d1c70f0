#pragma once

#include <utility>
#include <vector>

#include "gaudin/perm.hpp"

namespace gaudin {

// Image of a point set under a permutation.
uint32_t apply_to_mask(const Perm& p, uint32_t mask);

// A permutation pi moving only points outside z_mask, such that (a) every
// fixed point of tau is fixed by pi, and (b) every cycle of pi*tau contains
// at most one point outside z_mask. Deterministic rule: walk each cycle of
// tau from its smallest element; if the outside points met along it are
// b1..br (r >= 2), multiply by the cycle b1 -> br -> ... -> b2 -> b1.
Perm break_cycles(const Perm& tau, uint32_t z_mask);

// An involution xi moving only points of z_mask with xi * tau_hat^{-1} * xi
// = tau_hat. Precondition: every cycle of tau_hat has at most one point
// outside z_mask. Deterministic rule: reverse each cycle about its anchor
// (the unique outside point, else the smallest point of the cycle).
Perm reflect_involution(const Perm& tau_hat, uint32_t z_mask);

// One term (sigma_X, Y) of a Bethe generator expansion: a permutation with
// support set X = sx.z and a disjoint spectator set Y.
struct IndexedTerm {
  SupportedPerm sx;
  uint32_t y = 0;

  friend bool operator==(const IndexedTerm& a, const IndexedTerm& b) {
    return a.y == b.y && a.sx == b.sx;
  }
  friend bool operator<(const IndexedTerm& a, const IndexedTerm& b) {
    if (a.y != b.y) return a.y < b.y;
    return a.sx < b.sx;
  }
};

// All terms with |X| = k and |Y| = l, deterministic order.
std::vector<IndexedTerm> enumerate_terms(size_t n, int k, int l);

// The weight-preserving reindexing behind commutativity of the generators.
// Input: a with any spectator set, b with full spectator set (b.y must be
// the complement of b.sx.z). Output (b_bar, a_bar) with
//   sigma*sigma' == sigma_bar' * sigma_bar,  z_Y z_Y' == z_{Ybar} z_{Ybar'},
// and componentwise preserved signs. Injective on its domain.
std::pair<IndexedTerm, IndexedTerm> commutation_bijection(const IndexedTerm& a,
                                                          const IndexedTerm& b);

// Two-sided inverse of commutation_bijection (same choice functions, run
// through the transposed formulas).
std::pair<IndexedTerm, IndexedTerm> commutation_bijection_inverse(const IndexedTerm& b_bar,
                                                                  const IndexedTerm& a_bar);

}  // namespace gaudin
