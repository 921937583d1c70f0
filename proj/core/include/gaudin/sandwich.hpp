#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gaudin/bethe_config.hpp"
#include "gaudin/diff_op.hpp"
#include "gaudin/group_algebra.hpp"
#include "gaudin/perm.hpp"
#include "gaudin/ratfunc.hpp"

namespace gaudin {

// Polynomial in two commuting formal variables s, t with rational
// coefficients, used to encode two-sided multiplication patterns
// s^i t^j  ~->  d^i * g * d^j.
class BiPoly {
 public:
  BiPoly() = default;

  static BiPoly monomial(int s_deg, int t_deg, const Rat& c) {
    BiPoly p;
    p.add_term(s_deg, t_deg, c);
    return p;
  }
  static BiPoly one() { return monomial(0, 0, Rat(1)); }

  void add_term(int s_deg, int t_deg, const Rat& c) {
    if (s_deg < 0 || t_deg < 0) throw std::invalid_argument("BiPoly: negative exponent");
    auto key = std::make_pair(s_deg, t_deg);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      if (!gaudin::is_zero(c)) terms_.emplace(key, c);
    } else {
      it->second += c;
      if (gaudin::is_zero(it->second)) terms_.erase(it);
    }
  }

  const std::map<std::pair<int, int>, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
    return r;
  }
  BiPoly operator-() const {
    BiPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }
  friend BiPoly operator*(const Rat& s, const BiPoly& b) {
    BiPoly r;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, s * c);
    return r;
  }
  BiPoly& operator+=(const BiPoly& b) { return *this = *this + b; }
  BiPoly& operator-=(const BiPoly& b) { return *this = *this - b; }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  // Exact quotient by (s - t); throws if the division leaves a remainder.
  BiPoly divided_by_s_minus_t() const {
    BiPoly q;
    BiPoly r = *this;
    while (!r.terms_.empty()) {
      int top = 0;
      for (const auto& [k, c] : r.terms_) top = std::max(top, k.first);
      if (top == 0) throw std::domain_error("BiPoly: not divisible by s - t");
      std::vector<std::pair<std::pair<int, int>, Rat>> level;
      for (const auto& [k, c] : r.terms_)
        if (k.first == top) level.emplace_back(k, c);
      for (const auto& [k, c] : level) {
        q.add_term(k.first - 1, k.second, c);
        r.add_term(k.first, k.second, -c);
        r.add_term(k.first - 1, k.second + 1, c);
      }
    }
    return q;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + rat_to_string(c) + ")";
      if (k.first > 0) out += " s" + (k.first > 1 ? "^" + std::to_string(k.first) : "");
      if (k.second > 0) out += " t" + (k.second > 1 ? "^" + std::to_string(k.second) : "");
    }
    return out;
  }

 private:
  std::map<std::pair<int, int>, Rat> terms_;
};

inline bool is_zero(const BiPoly& p) { return p.is_zero(); }

// The two-variable polynomial attached to a supported permutation sigma (on
// the point set z_mask) and an overlap set a_mask: the signed generating
// function of the ways to factor sigma = delta * eps with delta supported in
// X, eps in Y, X union Y = z_mask and X intersect Y = a_mask. Each
// factorization contributes (-1)^{|Y|} sgn(eps) s^{|Y|-|A|} t^{|X|-|A|}.
inline BiPoly factorization_poly(const Perm& sigma, uint32_t z_mask, uint32_t a_mask) {
  if ((a_mask & ~z_mask) != 0) {
    throw std::invalid_argument("factorization_poly: overlap set not inside point set");
  }
  if ((sigma.support() & ~z_mask) != 0) {
    throw std::invalid_argument("factorization_poly: permutation moves a point outside the set");
  }
  const size_t n = sigma.n();
  const int a_size = static_cast<int>(mask_elements(a_mask).size());
  const std::vector<int> split = mask_elements(z_mask & ~a_mask);
  BiPoly p;
  // Each point outside the overlap goes to exactly one side.
  for (uint32_t pick = 0; pick < (uint32_t{1} << split.size()); ++pick) {
    uint32_t x_mask = a_mask;
    uint32_t y_mask = a_mask;
    for (size_t i = 0; i < split.size(); ++i) {
      if (pick & (uint32_t{1} << i)) x_mask |= uint32_t{1} << split[i];
      else y_mask |= uint32_t{1} << split[i];
    }
    const int x_size = static_cast<int>(mask_elements(x_mask).size());
    const int y_size = static_cast<int>(mask_elements(y_mask).size());
    for (const Perm& delta : perms_moving_within(n, x_mask)) {
      const Perm eps = delta.inverse() * sigma;
      if ((eps.support() & ~y_mask) != 0) continue;
      Rat c(((y_size % 2 == 1) ? -1 : 1) * eps.sign());
      p.add_term(y_size - a_size, x_size - a_size, c);
    }
  }
  return p;
}

// Bilinear extension of s^i t^j |-> d^i * g * d^j to polynomial patterns.
inline DiffOp<RatFuncQ> sandwich(const BiPoly& p, const RatFuncQ& g) {
  DiffOp<RatFuncQ> r;
  for (const auto& [k, c] : p.terms()) {
    DiffOp<RatFuncQ> piece = DiffOp<RatFuncQ>(g).shifted_up(k.second).d_mul(k.first);
    r += RatFuncQ(c) * piece;
  }
  return r;
}

// The coefficient operator attached to one supported permutation in the
// expansion of the product of the raising and lowering operators. For a
// non-empty point set these all vanish identically; the empty one gives the
// identity operator.
inline DiffOp<RatFuncQ> expansion_coefficient_operator(const std::vector<Rat>& z,
                                                       const SupportedPerm& sp) {
  const size_t n = z.size();
  if (sp.sigma.n() != n) {
    throw std::invalid_argument("expansion_coefficient_operator: rank mismatch");
  }
  auto simple_pole = [&](int a) {
    return RatFuncQ(PolyQ(1), PolyQ(std::vector<Rat>{z[static_cast<size_t>(a)], Rat(1)}));
  };
  RatFuncQ q_z(1);
  for (int a : mask_elements(sp.z)) q_z = q_z * simple_pole(a);

  DiffOp<RatFuncQ> total;
  for (uint32_t a_mask : all_submasks(sp.z)) {
    BiPoly p = factorization_poly(sp.sigma, sp.z, a_mask);
    if (p.is_zero()) continue;
    RatFuncQ g = q_z;
    for (int a : mask_elements(a_mask)) g = g * simple_pole(a);
    total += sandwich(p, g);
  }
  return total;
}

// The full two-sided expansion: the sum over all supported permutations
// (sigma, Z) of d^{n-|Z|} * (coefficient operator) * sigma * d^{n-|Z|},
// assembled in the algebra of differential operators with group-algebra
// coefficients. Equals the product of the raising and lowering operators.
inline DiffOp<GroupElemRatFuncQ> operator_product_expansion(const BetheConfig& cfg) {
  const size_t n = cfg.n();
  const std::vector<Rat>& z = cfg.z_exact();
  DiffOp<GroupElemRatFuncQ> total;
  for (const SupportedPerm& sp : all_supported_perms(n)) {
    DiffOp<RatFuncQ> f = expansion_coefficient_operator(z, sp);
    if (f.is_zero()) continue;
    DiffOp<GroupElemRatFuncQ> embedded =
        f.map_coeffs([&](const RatFuncQ& c) { return GroupElemRatFuncQ::single(sp.sigma, c); });
    const size_t shift = n - mask_elements(sp.z).size();
    total += embedded.shifted_up(shift).d_mul(shift);
  }
  return total;
}

}  // namespace gaudin
