#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "gaudin/perm.hpp"
#include "gaudin/poly.hpp"
#include "gaudin/ratfunc.hpp"

namespace gaudin {

// Sparse element of the group algebra of S_n with coefficients in S.
// Zero coefficients are never stored, so structural equality of the term
// maps is equality of elements (exact coefficient types).
template <class S>
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(size_t n) : n_(n) {}

  static GroupAlgebraElement unit(size_t n) {
    GroupAlgebraElement g(n);
    g.add_term(Perm::identity(n), S(1));
    return g;
  }
  static GroupAlgebraElement single(const Perm& p, S coeff) {
    GroupAlgebraElement g(p.n());
    g.add_term(p, std::move(coeff));
    return g;
  }

  size_t n() const { return n_; }
  const std::map<Perm, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t support_size() const { return terms_.size(); }

  void add_term(const Perm& p, S c) {
    if (p.n() != n_) throw std::invalid_argument("GroupAlgebraElement: rank mismatch");
    auto it = terms_.find(p);
    if (it == terms_.end()) {
      using gaudin::is_zero;
      if (!is_zero(c)) terms_.emplace(p, std::move(c));
    } else {
      it->second += c;
      using gaudin::is_zero;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  S coeff(const Perm& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? S() : it->second;
  }

  friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    a.check(b);
    GroupAlgebraElement r = a;
    for (const auto& [p, c] : b.terms_) r.add_term(p, c);
    return r;
  }
  friend GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a + (-b);
  }
  GroupAlgebraElement operator-() const {
    GroupAlgebraElement r(n_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
  }

  // Convolution product; coefficients multiply in left-to-right order so a
  // non-commutative coefficient ring would also be handled correctly.
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    a.check(b);
    GroupAlgebraElement r(a.n_);
    for (const auto& [p, c] : a.terms_)
      for (const auto& [q, d] : b.terms_) r.add_term(p * q, c * d);
    return r;
  }

  friend GroupAlgebraElement operator*(const S& s, const GroupAlgebraElement& g) {
    GroupAlgebraElement r(g.n_);
    for (const auto& [p, c] : g.terms_) r.add_term(p, s * c);
    return r;
  }

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& b) { return *this = *this + b; }
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& b) { return *this = *this - b; }
  GroupAlgebraElement& operator*=(const GroupAlgebraElement& b) { return *this = *this * b; }

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return !(a == b);
  }

  // sigma -> sgn(sigma) * sigma. An algebra automorphism (tensoring with
  // the sign character).
  GroupAlgebraElement sign_twist() const {
    GroupAlgebraElement r(n_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, p.sign() < 0 ? -c : c);
    return r;
  }

  // sigma -> sgn(sigma) * sigma^{-1}: the group-algebra half of the formal
  // adjoint anti-automorphism (coefficients untouched).
  GroupAlgebraElement adjoint_group_part() const {
    GroupAlgebraElement r(n_);
    for (const auto& [p, c] : terms_) r.add_term(p.inverse(), p.sign() < 0 ? -c : c);
    return r;
  }

  // Coefficient-wise derivative (S must provide one).
  GroupAlgebraElement derivative() const {
    GroupAlgebraElement r(n_);
    for (const auto& [p, c] : terms_) r.add_term(p, c.derivative());
    return r;
  }

  template <class F>
  auto map_coeffs(F&& f) const {
    using T = decltype(f(std::declval<const S&>()));
    GroupAlgebraElement<T> r(n_);
    for (const auto& [p, c] : terms_) r.add_term(p, f(c));
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : terms_) {
      if (!out.empty()) out += "  +  ";
      if constexpr (std::is_same_v<S, Rat>) out += "(" + rat_to_string(c) + ")";
      else out += "(" + c.to_string() + ")";
      out += "*[" + p.to_string() + "]";
    }
    return out;
  }

 private:
  void check(const GroupAlgebraElement& b) const {
    if (n_ != b.n_) throw std::invalid_argument("GroupAlgebraElement: rank mismatch");
  }

  size_t n_;
  std::map<Perm, S> terms_;
};

template <class S>
bool is_zero(const GroupAlgebraElement<S>& g) {
  return g.is_zero();
}

using GroupElemQ = GroupAlgebraElement<Rat>;
using GroupElemPolyQ = GroupAlgebraElement<PolyQ>;
using GroupElemRatFuncQ = GroupAlgebraElement<RatFuncQ>;

}  // namespace gaudin
