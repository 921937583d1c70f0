#pragma once

#include <string>

#include "gaudin/bigfloat.hpp"

namespace gaudin {

// Arbitrary-precision complex scalar as a re/im pair of BigFloat.
class BigComplex {
 public:
  BigComplex() = default;
  explicit BigComplex(long re, mpfr_prec_t prec = 0) : re_(re, prec), im_(0, prec) {}
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit BigComplex(BigFloat re) : re_(std::move(re)), im_(0, re_.prec()) {}

  static BigComplex from_rat(const Rat& r, mpfr_prec_t prec = 0) {
    return BigComplex(BigFloat::from_rat(r, prec));
  }

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  BigComplex conj() const { return BigComplex(re_, -im_); }
  BigFloat abs() const { return hypot(re_, im_); }
  // |re| + |im|; cheap magnitude bound used for pivot/threshold scans.
  BigFloat abs1() const { return re_.abs() + im_.abs(); }

  BigComplex operator-() const { return BigComplex(-re_, -im_); }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);

  BigComplex& operator+=(const BigComplex& b) { return *this = *this + b; }
  BigComplex& operator-=(const BigComplex& b) { return *this = *this - b; }
  BigComplex& operator*=(const BigComplex& b) { return *this = *this * b; }
  BigComplex& operator/=(const BigComplex& b) { return *this = *this / b; }

  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const BigComplex& a, const BigComplex& b) { return !(a == b); }

  // Principal square root.
  BigComplex sqrt() const;

  std::string to_string() const;

 private:
  BigFloat re_, im_;
};

inline bool is_zero(const BigComplex& z) { return z.is_zero(); }

}  // namespace gaudin
