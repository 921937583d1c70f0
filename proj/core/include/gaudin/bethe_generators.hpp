#pragma once

#include <stdexcept>

#include "gaudin/bethe_config.hpp"
#include "gaudin/group_algebra.hpp"
#include "gaudin/perm.hpp"

namespace gaudin {

enum class Sign { plus, minus };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline const char* sign_name(Sign s) { return s == Sign::plus ? "+" : "-"; }

// Symmetrizer (plus) / antisymmetrizer (minus) over the subgroup permuting
// the points of x_mask: sum over sigma in S_X of sigma resp. sgn(sigma)*sigma.
template <class S>
GroupAlgebraElement<S> set_symmetrizer(size_t n, uint32_t x_mask, Sign sign) {
  GroupAlgebraElement<S> out(n);
  for (const Perm& p : perms_moving_within(n, x_mask))
    out.add_term(p, (sign == Sign::minus && p.sign() < 0) ? S(-1) : S(1));
  return out;
}

namespace detail {
// e_l of the values indexed by mask (dynamic programming, no division).
template <class S>
S elementary_symmetric(const std::vector<S>& z, uint32_t mask, int l) {
  std::vector<int> idx = mask_elements(mask);
  if (l < 0 || l > static_cast<int>(idx.size())) return S();
  std::vector<S> e(static_cast<size_t>(l) + 1);
  e[0] = S(1);
  int used = 0;
  for (int i : idx) {
    ++used;
    for (int j = std::min(l, used); j >= 1; --j)
      e[static_cast<size_t>(j)] += z[static_cast<size_t>(i)] * e[static_cast<size_t>(j - 1)];
  }
  return e[static_cast<size_t>(l)];
}

// prod_{i in mask} (u + z_i) as a polynomial in u.
template <class S>
Poly<S> root_product(const std::vector<S>& z, uint32_t mask) {
  Poly<S> w(1);
  for (int i : mask_elements(mask))
    w *= Poly<S>(std::vector<S>{z[static_cast<size_t>(i)], S(1)});
  return w;
}
}  // namespace detail

// The Bethe algebra generator with k permuted points and l spectator points:
//   sum over disjoint X (|X|=k), Y (|Y|=l) of (anti)symmetrizer over X times
//   the monomial z_Y. Zero when k + l > n. Scalar type S is Rat for exact
//   configurations or BigComplex for numeric ones.
template <class S>
GroupAlgebraElement<S> bethe_generator(const BetheConfig& cfg, int k, int l, Sign sign) {
  const size_t n = cfg.n();
  if (k < 0 || l < 0) throw std::invalid_argument("bethe_generator: negative index");
  GroupAlgebraElement<S> out(n);
  if (k + l > static_cast<int>(n)) return out;  // no disjoint pair exists
  const std::vector<S> z = config_points<S>(cfg);
  for (uint32_t x : k_subsets_of(full_mask(n), k)) {
    // Sum of z_Y over Y in the complement of X is e_l of the complement.
    S weight = detail::elementary_symmetric<S>(z, full_mask(n) & ~x, l);
    using gaudin::is_zero;
    if (is_zero(weight)) continue;
    out += weight * set_symmetrizer<S>(n, x, sign);
  }
  return out;
}

// Generating polynomial in the spectral variable:
//   beta_{k,n-k}(u) = sum_l beta_{k,l} u^{n-k-l}
//                   = sum_{|X|=k} alpha_X * prod_{i not in X} (u + z_i).
template <class S>
GroupAlgebraElement<Poly<S>> bethe_generator_poly(const BetheConfig& cfg, int k, Sign sign) {
  const size_t n = cfg.n();
  if (k < 0 || k > static_cast<int>(n))
    throw std::invalid_argument("bethe_generator_poly: index out of range");
  const std::vector<S> z = config_points<S>(cfg);
  GroupAlgebraElement<Poly<S>> out(n);
  for (uint32_t x : k_subsets_of(full_mask(n), k)) {
    Poly<S> w = detail::root_product<S>(z, full_mask(n) & ~x);
    out += w * set_symmetrizer<Poly<S>>(n, x, sign);
  }
  return out;
}

}  // namespace gaudin
