#pragma once

#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "gaudin/bigcomplex.hpp"
#include "gaudin/rat.hpp"

namespace gaudin {

// Dense univariate polynomial with ascending coefficients and no stored
// trailing zeros. degree() of the zero polynomial is the sentinel -1
// (standing in for "minus infinity": it is smaller than every true degree).
template <class S>
class Poly {
 public:
  Poly() = default;
  explicit Poly(long c) {
    c_.push_back(S(c));
    normalize();
  }
  explicit Poly(S c) {
    c_.push_back(std::move(c));
    normalize();
  }
  explicit Poly(std::vector<S> ascending) : c_(std::move(ascending)) { normalize(); }

  static Poly monomial(S coeff, int deg) {
    if (deg < 0) throw std::invalid_argument("Poly::monomial: negative degree");
    std::vector<S> c(static_cast<size_t>(deg) + 1);
    c.back() = std::move(coeff);
    Poly p;
    p.c_ = std::move(c);
    p.normalize();
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<S>& coeffs() const { return c_; }

  // Coefficient of u^k (zero beyond the stored range).
  S coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return S();
    return c_[static_cast<size_t>(k)];
  }

  S leading() const {
    if (is_zero()) throw std::domain_error("Poly::leading of zero polynomial");
    return c_.back();
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<S> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
      if (i < a.c_.size()) c[i] += a.c_[i];
      if (i < b.c_.size()) c[i] += b.c_[i];
    }
    Poly r;
    r.c_ = std::move(c);
    r.normalize();
    return r;
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<S> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    Poly r;
    r.c_ = std::move(c);
    r.normalize();
    return r;
  }

  friend Poly operator*(const S& s, const Poly& p) {
    Poly r = p;
    for (auto& x : r.c_) x = s * x;
    r.normalize();
    return r;
  }

  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<S> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = S(static_cast<long>(i)) * c_[i];
    Poly r;
    r.c_ = std::move(c);
    r.normalize();
    return r;
  }

  // Antiderivative with zero constant term; needs division by integers.
  Poly antiderivative() const {
    if (is_zero()) return Poly();
    std::vector<S> c(c_.size() + 1);
    for (size_t i = 0; i < c_.size(); ++i)
      c[i + 1] = c_[i] / S(static_cast<long>(i) + 1);
    Poly r;
    r.c_ = std::move(c);
    r.normalize();
    return r;
  }

  S eval(const S& x) const {
    S acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly monic() const {
    if (is_zero()) throw std::domain_error("Poly::monic of zero polynomial");
    S inv = S(1) / c_.back();
    return inv * *this;
  }

  // Euclidean division over a field: a = q*b + r with deg r < deg b.
  friend std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly division by zero");
    Poly r = a;
    std::vector<S> q;
    if (a.degree() >= b.degree()) q.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, S());
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int shift = r.degree() - b.degree();
      S factor = r.c_.back() / b.c_.back();
      q[static_cast<size_t>(shift)] = factor;
      // r -= factor * u^shift * b, dropping the (now cancelled) top term.
      for (size_t i = 0; i < b.c_.size(); ++i)
        r.c_[static_cast<size_t>(shift) + i] -= factor * b.c_[i];
      r.c_[static_cast<size_t>(r.degree())] = S();  // force exact cancellation
      r.normalize();
    }
    Poly qq;
    qq.c_ = std::move(q);
    qq.normalize();
    return {qq, r};
  }

  std::string to_string(const std::string& var = "u") const;

 private:
  void normalize() {
    using gaudin::is_zero;
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  std::vector<S> c_;
};

template <class S>
bool is_zero(const Poly<S>& p) {
  return p.is_zero();
}

using PolyQ = Poly<Rat>;
using PolyC = Poly<BigComplex>;

// Monic gcd over the rationals (Euclid). gcd(0,0) = 0.
inline PolyQ poly_gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    PolyQ r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

template <class S>
std::string Poly<S>::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const S c = coeff(k);
    using gaudin::is_zero;
    if (is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    std::string cs;
    if constexpr (std::is_same_v<S, Rat>) {
      cs = rat_to_string(c);
    } else {
      cs = c.to_string();
    }
    if (k == 0) {
      out += cs;
    } else {
      out += "(" + cs + ")*" + var + (k == 1 ? "" : "^" + std::to_string(k));
    }
  }
  return out;
}

// Scalar promotions used when an exact configuration feeds the numeric path.
inline BigComplex promote(const Rat& r, mpfr_prec_t prec = 0) {
  return BigComplex::from_rat(r, prec);
}
inline PolyC promote(const PolyQ& p, mpfr_prec_t prec = 0) {
  std::vector<BigComplex> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.push_back(BigComplex::from_rat(x, prec));
  return PolyC(std::move(c));
}

}  // namespace gaudin
