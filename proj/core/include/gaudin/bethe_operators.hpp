#pragma once

#include <vector>

#include "gaudin/bethe_config.hpp"
#include "gaudin/bethe_generators.hpp"
#include "gaudin/diff_op.hpp"
#include "gaudin/group_algebra.hpp"
#include "gaudin/perm.hpp"
#include "gaudin/poly.hpp"
#include "gaudin/ratfunc.hpp"

namespace gaudin {

// Differential operators whose coefficients live in the group algebra of
// S_n over rational functions of u.
template <class S>
using GroupDiffOp = DiffOp<GroupAlgebraElement<RatFunc<S>>>;

using GroupDiffOpQ = GroupDiffOp<Rat>;

// unit * d^k.
template <class S>
GroupDiffOp<S> group_d_power(size_t n, size_t k) {
  return GroupDiffOp<S>::d_power(GroupAlgebraElement<RatFunc<S>>::unit(n), k);
}

// The lowering member of the operator pair:
//   (1/w) * sum_{k=0}^{n} (-1)^k G^-_k(u) d^{n-k},
// where G^-_k(u) is the antisymmetrized generator polynomial of index k and
// w(u) is the product of (u + z_i) over all points.
template <class S>
GroupDiffOp<S> lowering_operator(const BetheConfig& cfg) {
  const size_t n = cfg.n();
  const std::vector<S> z = config_points<S>(cfg);
  const Poly<S> w = detail::root_product<S>(z, full_mask(n));
  GroupDiffOp<S> op;
  for (size_t k = 0; k <= n; ++k) {
    GroupAlgebraElement<Poly<S>> gen = bethe_generator_poly<S>(cfg, static_cast<int>(k), Sign::minus);
    GroupAlgebraElement<RatFunc<S>> coeff = gen.map_coeffs([&](const Poly<S>& p) {
      return RatFunc<S>(k % 2 == 1 ? -p : p, w);
    });
    op += GroupDiffOp<S>(coeff).shifted_up(n - k);
  }
  return op;
}

// The raising member of the operator pair:
//   (sum_{k=0}^{n} d^{n-k} G^+_k(u)) * (1/w),
// with the symmetrized generator polynomials on the right of the powers
// of d and the 1/w factor rightmost.
template <class S>
GroupDiffOp<S> raising_operator(const BetheConfig& cfg) {
  const size_t n = cfg.n();
  const std::vector<S> z = config_points<S>(cfg);
  const Poly<S> w = detail::root_product<S>(z, full_mask(n));
  GroupDiffOp<S> acc;
  for (size_t k = 0; k <= n; ++k) {
    GroupAlgebraElement<Poly<S>> gen = bethe_generator_poly<S>(cfg, static_cast<int>(k), Sign::plus);
    GroupAlgebraElement<RatFunc<S>> coeff =
        gen.map_coeffs([](const Poly<S>& p) { return RatFunc<S>(p); });
    acc += GroupDiffOp<S>(coeff).d_mul(n - k);
  }
  GroupAlgebraElement<RatFunc<S>> inv_w =
      GroupAlgebraElement<RatFunc<S>>::single(Perm::identity(n), RatFunc<S>(Poly<S>(1), w));
  return acc * GroupDiffOp<S>(inv_w);
}

// Coefficient-wise tensoring with the sign character; swaps the roles of
// the two generator families.
template <class S>
GroupDiffOp<S> sign_twist_op(const GroupDiffOp<S>& op) {
  return op.map_coeffs(
      [](const GroupAlgebraElement<RatFunc<S>>& c) { return c.sign_twist(); });
}

// Full formal adjoint: d -> -d on the operator part together with
// sigma -> sgn(sigma) sigma^{-1} on the group part.
template <class S>
GroupDiffOp<S> formal_adjoint_op(const GroupDiffOp<S>& op) {
  return op.formal_adjoint(
      [](const GroupAlgebraElement<RatFunc<S>>& c) { return c.adjoint_group_part(); });
}

// Exact witness for the central identity: raising * lowering - d^{2n}.
// The zero operator if and only if the identity holds at this configuration.
inline GroupDiffOpQ identity_defect(const BetheConfig& cfg) {
  const size_t n = cfg.n();
  return raising_operator<Rat>(cfg) * lowering_operator<Rat>(cfg) - group_d_power<Rat>(n, 2 * n);
}

}  // namespace gaudin
