#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gaudin {

// A differential operator in canonical form: sum_j c_j * d^j with the
// coefficients written to the left of the powers of d (= d/du). The
// coefficient ring C only needs +, unary -, *, derivative(), is_zero and
// exact ==; it may be non-commutative (e.g. a group algebra over rational
// functions). The zero operator is the empty coefficient list, so no zero
// element of C is ever required out of thin air.
template <class C>
class DiffOp {
 public:
  DiffOp() = default;  // the zero operator
  explicit DiffOp(C c) {
    c_.push_back(std::move(c));
    normalize();
  }

  static DiffOp from_coeffs(std::vector<C> coeffs) {
    DiffOp r;
    r.c_ = std::move(coeffs);
    r.normalize();
    return r;
  }

  // one * d^k ("one" supplies the multiplicative unit of C).
  static DiffOp d_power(const C& one, size_t k) {
    return DiffOp(one).shifted_up(k);
  }

  // Order of the operator; -1 encodes the zero operator (order minus
  // infinity).
  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<C>& coeffs() const { return c_; }
  const C& coeff(size_t j) const {
    if (j >= c_.size()) throw std::out_of_range("DiffOp::coeff: beyond operator order");
    return c_[j];
  }
  const C& leading() const {
    if (c_.empty()) throw std::logic_error("DiffOp::leading: zero operator");
    return c_.back();
  }

  friend DiffOp operator+(const DiffOp& a, const DiffOp& b) {
    const DiffOp& longer = a.c_.size() >= b.c_.size() ? a : b;
    const DiffOp& shorter = a.c_.size() >= b.c_.size() ? b : a;
    DiffOp r = longer;
    for (size_t j = 0; j < shorter.c_.size(); ++j) r.c_[j] += shorter.c_[j];
    r.normalize();
    return r;
  }
  DiffOp operator-() const {
    DiffOp r;
    r.c_.reserve(c_.size());
    for (const C& c : c_) r.c_.push_back(-c);
    return r;
  }
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + (-b); }

  // d * (this), applied k times: d * sum c_j d^j = sum (c_j' d^j + c_j d^{j+1}).
  DiffOp d_mul(size_t k = 1) const {
    DiffOp r = *this;
    for (size_t step = 0; step < k && !r.c_.empty(); ++step) {
      std::vector<C> next;
      next.reserve(r.c_.size() + 1);
      next.push_back(r.c_[0].derivative());
      for (size_t j = 1; j < r.c_.size(); ++j) next.push_back(r.c_[j].derivative() + r.c_[j - 1]);
      next.push_back(r.c_.back());
      r.c_ = std::move(next);
      r.normalize();
    }
    return r;
  }

  // (this) * d^k: pure shift of the coefficient list.
  DiffOp shifted_up(size_t k) const {
    if (c_.empty() || k == 0) return *this;
    C zero = c_.front() + (-c_.front());
    DiffOp r;
    r.c_.reserve(c_.size() + k);
    for (size_t j = 0; j < k; ++j) r.c_.push_back(zero);
    for (const C& c : c_) r.c_.push_back(c);
    return r;
  }

  friend DiffOp operator*(const C& scalar, const DiffOp& op) {
    DiffOp r;
    r.c_.reserve(op.c_.size());
    for (const C& c : op.c_) r.c_.push_back(scalar * c);
    r.normalize();
    return r;
  }

  friend DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    DiffOp r;
    if (a.c_.empty() || b.c_.empty()) return r;
    // In sum_i a_i d^i * B, expand d^i * B by repeated premultiplication
    // with d; t holds d^i * B at step i.
    DiffOp t = b;
    for (size_t i = 0; i < a.c_.size(); ++i) {
      using gaudin::is_zero;
      if (!is_zero(a.c_[i])) r = r + a.c_[i] * t;
      if (i + 1 < a.c_.size()) t = t.d_mul();
    }
    return r;
  }

  DiffOp& operator+=(const DiffOp& b) { return *this = *this + b; }
  DiffOp& operator-=(const DiffOp& b) { return *this = *this - b; }
  DiffOp& operator*=(const DiffOp& b) { return *this = *this * b; }

  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.c_ == b.c_; }
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

  // Evaluate on a function living in the same ring as the coefficients.
  C apply(const C& g) const {
    if (c_.empty()) return g + (-g);
    C acc = c_[0] * g;
    C gj = g;
    for (size_t j = 1; j < c_.size(); ++j) {
      gj = gj.derivative();
      acc += c_[j] * gj;
    }
    return acc;
  }

  // Formal adjoint: sum c_j d^j -> sum (-d)^j adj(c_j), where adj is the
  // coefficient-ring half of the anti-automorphism (identity for plain
  // function coefficients).
  template <class F>
  DiffOp formal_adjoint(F&& adj) const {
    DiffOp r;
    for (size_t j = 0; j < c_.size(); ++j) {
      using gaudin::is_zero;
      if (is_zero(c_[j])) continue;
      DiffOp piece = DiffOp(adj(c_[j])).d_mul(j);
      if (j % 2 == 1) piece = -piece;
      r = r + piece;
    }
    return r;
  }
  DiffOp formal_adjoint() const {
    return formal_adjoint([](const C& c) { return c; });
  }

  template <class F>
  auto map_coeffs(F&& f) const {
    using T = decltype(f(std::declval<const C&>()));
    DiffOp<T> r;
    std::vector<T> coeffs;
    coeffs.reserve(c_.size());
    for (const C& c : c_) coeffs.push_back(f(c));
    return DiffOp<T>::from_coeffs(std::move(coeffs));
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t j = 0; j < c_.size(); ++j) {
      using gaudin::is_zero;
      if (is_zero(c_[j]) && c_.size() > 1) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c_[j].to_string() + ")";
      if (j == 1) out += " d";
      else if (j > 1) out += " d^" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
  }

 private:
  void normalize() {
    using gaudin::is_zero;
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

template <class C>
bool is_zero(const DiffOp<C>& op) {
  return op.is_zero();
}

}  // namespace gaudin
