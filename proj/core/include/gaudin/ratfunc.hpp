#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "gaudin/poly.hpp"

namespace gaudin {

// Rational function num/den. Over the rationals the representation is
// canonical: gcd(num, den) = 1 and den monic, so == is structural equality.
// Over big-float scalars no gcd is attempted (numerically meaningless);
// only the denominator is normalized monic, and comparisons go through
// ratfunc_close() instead.
template <class S>
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  explicit RatFunc(long c) : num_(c), den_(1) {}
  explicit RatFunc(S c) : num_(std::move(c)), den_(1) {}
  explicit RatFunc(Poly<S> p) : num_(std::move(p)), den_(1) {}
  RatFunc(Poly<S> num, Poly<S> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    reduce();
  }

  const Poly<S>& num() const { return num_; }
  const Poly<S>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  // The polynomial value when den is a (monic) constant.
  Poly<S> as_polynomial() const {
    if (!is_polynomial()) throw std::domain_error("RatFunc: not a polynomial");
    return num_;
  }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }

  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  // Leading coefficient lc(num)/lc(den): the unique scalar c with f/c a
  // ratio of monic polynomials. Zero for the zero function.
  S leading() const {
    if (is_zero()) return S();
    return num_.leading() / den_.leading();
  }

  RatFunc monic() const {
    if (is_zero()) throw std::domain_error("RatFunc::monic of zero");
    S inv = S(1) / leading();
    RatFunc r = *this;
    r.num_ = inv * r.num_;
    r.reduce();
    return r;
  }

  std::string to_string(const std::string& var = "u") const {
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = Poly<S>(1);
      return;
    }
    if constexpr (std::is_same_v<S, Rat>) {
      PolyQ g = poly_gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = divrem(num_, g).first;
        den_ = divrem(den_, g).first;
      }
    }
    if (!(den_.leading() == S(1))) {
      S inv = S(1) / den_.leading();
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }

  Poly<S> num_, den_;
};

using RatFuncQ = RatFunc<Rat>;
using RatFuncC = RatFunc<BigComplex>;

inline RatFuncC promote(const RatFuncQ& f, mpfr_prec_t prec = 0) {
  return RatFuncC(promote(f.num(), prec), promote(f.den(), prec));
}

template <class S>
bool is_zero(const RatFunc<S>& f) {
  return f.is_zero();
}

// ---- numeric comparison helpers -------------------------------------------

// Sup-norm of the coefficient vector (exact modulus per coefficient).
inline BigFloat coeff_norm(const PolyC& p) {
  BigFloat m(0);
  for (const auto& c : p.coeffs()) m = max(m, c.abs());
  return m;
}

inline bool poly_close(const PolyC& a, const PolyC& b, const BigFloat& tol) {
  BigFloat scale = max(max(coeff_norm(a), coeff_norm(b)), BigFloat(1));
  return coeff_norm(a - b) <= tol * scale;
}

// Cross-multiplied comparison, independent of common factors: a ~ b iff
// num_a*den_b - num_b*den_a vanishes relative to scale.
inline bool ratfunc_close(const RatFuncC& a, const RatFuncC& b, const BigFloat& tol) {
  PolyC lhs = a.num() * b.den();
  PolyC rhs = b.num() * a.den();
  return poly_close(lhs, rhs, tol);
}

// Relative residual of "f = 0" that ignores the denominator scale.
inline BigFloat ratfunc_residual(const RatFuncC& f) {
  BigFloat dn = coeff_norm(f.den());
  return coeff_norm(f.num()) / max(dn, BigFloat(1));
}

}  // namespace gaudin
