#include "gaudin/bigcomplex.hpp"

#include <stdexcept>

namespace gaudin {

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  // Smith's algorithm is unnecessary at 256-bit precision; plain formula.
  BigFloat d = b.re_ * b.re_ + b.im_ * b.im_;
  if (d.is_zero()) throw std::domain_error("BigComplex: division by zero");
  return BigComplex((a.re_ * b.re_ + a.im_ * b.im_) / d,
                    (a.im_ * b.re_ - a.re_ * b.im_) / d);
}

BigComplex BigComplex::sqrt() const {
  if (is_zero()) return BigComplex(0, prec());
  BigFloat r = abs();
  BigFloat two(2, prec());
  // sqrt(z) = t + i*im/(2t) with t = sqrt((r+|re|)/2), reflected when re < 0.
  BigFloat t = ((r + re_.abs()) / two).sqrt();
  if (re_.sign() >= 0) {
    return BigComplex(t, im_ / (two * t));
  }
  BigFloat u = im_.abs() / (two * t);
  return im_.sign() >= 0 ? BigComplex(u, t) : BigComplex(u, -t);
}

std::string BigComplex::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  return re_.to_string() + (im_.sign() < 0 ? "-" : "+") + im_.abs().to_string() + "i";
}

}  // namespace gaudin
