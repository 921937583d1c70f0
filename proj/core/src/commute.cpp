#include "gaudin/commute.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gaudin {

namespace {

bool moves_only_within(const Perm& p, uint32_t mask) {
  return (p.support() & ~mask) == 0;
}

}  // namespace

uint32_t apply_to_mask(const Perm& p, uint32_t mask) {
  uint32_t out = 0;
  for (size_t i = 0; i < p.n(); ++i) {
    if (mask & (uint32_t{1} << i)) out |= uint32_t{1} << p(i);
  }
  return out;
}

Perm break_cycles(const Perm& tau, uint32_t z_mask) {
  const size_t n = tau.n();
  Perm pi = Perm::identity(n);
  for (const auto& cycle : tau.cycles()) {
    std::vector<int> outside;
    for (int a : cycle) {
      if (!(z_mask & (uint32_t{1} << a))) outside.push_back(a);
    }
    if (outside.size() < 2) continue;
    // b1 -> br -> b_{r-1} -> ... -> b2 -> b1
    std::vector<int> reversed;
    reversed.push_back(outside.front());
    for (size_t i = outside.size(); i-- > 1;) reversed.push_back(outside[i]);
    pi = pi * Perm::from_cycle(n, reversed);
  }
  return pi;
}

Perm reflect_involution(const Perm& tau_hat, uint32_t z_mask) {
  const size_t n = tau_hat.n();
  Perm xi = Perm::identity(n);
  for (const auto& cycle : tau_hat.cycles()) {
    size_t anchor_index = 0;
    size_t outside_count = 0;
    for (size_t i = 0; i < cycle.size(); ++i) {
      if (!(z_mask & (uint32_t{1} << cycle[i]))) {
        anchor_index = i;
        ++outside_count;
      }
    }
    if (outside_count > 1) {
      throw std::invalid_argument(
          "reflect_involution: a cycle has more than one point outside the given set");
    }
    // Reverse the cycle about the anchor (cycles start at their smallest
    // point, so anchor_index stays 0 when the whole cycle lies inside).
    const size_t k = cycle.size();
    for (size_t i = 1; 2 * i < k; ++i) {
      const int a = cycle[(anchor_index + i) % k];
      const int b = cycle[(anchor_index + k - i) % k];
      xi = xi * Perm::transposition(n, a, b);
    }
  }
  if (!moves_only_within(xi, z_mask)) {
    throw std::invalid_argument("reflect_involution: result moves a point outside the given set");
  }
  return xi;
}

std::vector<IndexedTerm> enumerate_terms(size_t n, int k, int l) {
  if (n > 16) throw std::invalid_argument("enumerate_terms: n too large");
  if (k < 0 || l < 0 || static_cast<size_t>(k) + static_cast<size_t>(l) > n) {
    return {};
  }
  std::vector<IndexedTerm> out;
  const uint32_t full = full_mask(n);
  for (uint32_t x : k_subsets_of(full, k)) {
    for (const Perm& sigma : perms_moving_within(n, x)) {
      for (uint32_t y : k_subsets_of(full & ~x, l)) {
        out.push_back(IndexedTerm{SupportedPerm{sigma, x}, y});
      }
    }
  }
  return out;
}

namespace {

struct BijectionFrame {
  Perm xi_hat;
  uint32_t z_mask = 0;
};

// Shared choice functions: from the joint permutation and the union of the
// spectator sets, build the conjugating element used by both directions.
BijectionFrame make_frame(const Perm& tau, uint32_t z_mask) {
  const Perm pi = break_cycles(tau, z_mask);
  const Perm tau_hat = pi * tau;
  const Perm xi = reflect_involution(tau_hat, z_mask);
  return BijectionFrame{pi * xi, z_mask};
}

void check_term(const IndexedTerm& t, const char* where) {
  if ((t.sx.z & t.y) != 0) {
    throw std::invalid_argument(std::string(where) + ": support and spectator sets overlap");
  }
  if (!moves_only_within(t.sx.sigma, t.sx.z)) {
    throw std::invalid_argument(std::string(where) +
                                ": permutation moves a point outside its support set");
  }
}

void check_full_spectators(const IndexedTerm& t, const char* where) {
  const uint32_t full = full_mask(t.sx.sigma.n());
  if (t.y != (full & ~t.sx.z)) {
    throw std::invalid_argument(std::string(where) +
                                ": spectator set must be the complement of the support set");
  }
}

}  // namespace

std::pair<IndexedTerm, IndexedTerm> commutation_bijection(const IndexedTerm& a,
                                                          const IndexedTerm& b) {
  if (a.sx.sigma.n() != b.sx.sigma.n()) {
    throw std::invalid_argument("commutation_bijection: mismatched point counts");
  }
  check_term(a, "commutation_bijection");
  check_term(b, "commutation_bijection");
  check_full_spectators(b, "commutation_bijection");

  const Perm& sigma = a.sx.sigma;
  const Perm& sigma_p = b.sx.sigma;
  const Perm tau = sigma * sigma_p;
  const BijectionFrame frame = make_frame(tau, a.y | b.y);
  const Perm xi_hat_inv = frame.xi_hat.inverse();

  const Perm sigma_p_bar = xi_hat_inv * sigma_p.inverse() * xi_hat_inv;
  const Perm sigma_bar = frame.xi_hat * sigma.inverse() * xi_hat_inv;

  IndexedTerm b_bar{SupportedPerm{sigma_p_bar, apply_to_mask(frame.xi_hat, b.sx.z)},
                    apply_to_mask(frame.xi_hat, b.y)};
  IndexedTerm a_bar{SupportedPerm{sigma_bar, apply_to_mask(frame.xi_hat, a.sx.z)},
                    apply_to_mask(frame.xi_hat, a.y)};

  if (!moves_only_within(b_bar.sx.sigma, b_bar.sx.z) ||
      !moves_only_within(a_bar.sx.sigma, a_bar.sx.z) ||
      !(b_bar.sx.sigma * a_bar.sx.sigma == tau)) {
    throw std::logic_error("commutation_bijection: internal invariant violated");
  }
  return {b_bar, a_bar};
}

std::pair<IndexedTerm, IndexedTerm> commutation_bijection_inverse(const IndexedTerm& b_bar,
                                                                  const IndexedTerm& a_bar) {
  if (a_bar.sx.sigma.n() != b_bar.sx.sigma.n()) {
    throw std::invalid_argument("commutation_bijection_inverse: mismatched point counts");
  }
  check_term(a_bar, "commutation_bijection_inverse");
  check_term(b_bar, "commutation_bijection_inverse");
  check_full_spectators(b_bar, "commutation_bijection_inverse");

  const Perm& sigma_p_bar = b_bar.sx.sigma;
  const Perm& sigma_bar = a_bar.sx.sigma;
  const Perm tau = sigma_p_bar * sigma_bar;
  const BijectionFrame frame = make_frame(tau, a_bar.y | b_bar.y);
  const Perm xi_hat_inv = frame.xi_hat.inverse();

  const Perm sigma_p = xi_hat_inv * sigma_p_bar.inverse() * xi_hat_inv;
  const Perm sigma = xi_hat_inv * sigma_bar.inverse() * frame.xi_hat;

  IndexedTerm a{SupportedPerm{sigma, apply_to_mask(xi_hat_inv, a_bar.sx.z)},
                apply_to_mask(xi_hat_inv, a_bar.y)};
  IndexedTerm b{SupportedPerm{sigma_p, apply_to_mask(xi_hat_inv, b_bar.sx.z)},
                apply_to_mask(xi_hat_inv, b_bar.y)};

  if (!moves_only_within(a.sx.sigma, a.sx.z) || !moves_only_within(b.sx.sigma, b.sx.z) ||
      !(a.sx.sigma * b.sx.sigma == tau)) {
    throw std::logic_error("commutation_bijection_inverse: internal invariant violated");
  }
  return {a, b};
}

}  // namespace gaudin
