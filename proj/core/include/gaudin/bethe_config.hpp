#pragma once

#include <stdexcept>
#include <vector>

#include "gaudin/bigcomplex.hpp"
#include "gaudin/poly.hpp"

namespace gaudin {

// Problem data: the n marked points z_1..z_n (roots of -w), either exact
// rationals or big-float complex numbers, plus the working precision.
class BetheConfig {
 public:
  static BetheConfig from_exact(std::vector<Rat> z, mpfr_prec_t precision_bits = 256);
  static BetheConfig from_numeric(std::vector<BigComplex> z, mpfr_prec_t precision_bits = 256);

  size_t n() const { return n_; }
  bool exact() const { return exact_; }
  mpfr_prec_t precision_bits() const { return precision_bits_; }

  const std::vector<Rat>& z_exact() const {
    if (!exact_) throw std::logic_error("BetheConfig: numeric configuration has no exact points");
    return z_exact_;
  }
  // Numeric view; exact points are promoted at the configured precision.
  std::vector<BigComplex> z_numeric() const;

  bool all_real() const;

  // w(u) = (u+z_1)...(u+z_n), exact mode only.
  PolyQ w_exact() const;
  PolyC w_numeric() const;

  // Every z_i shifted by t (exact mode).
  BetheConfig translated(const Rat& t) const;

  // Default pipeline tolerance 1e-(bits/10) and eigenvalue grouping
  // tolerance 1e-(bits/8).
  BigFloat default_tolerance() const;
  BigFloat default_grouping_tolerance() const;

 private:
  BetheConfig() = default;
  size_t n_ = 0;
  bool exact_ = true;
  std::vector<Rat> z_exact_;
  std::vector<BigComplex> z_numeric_;
  mpfr_prec_t precision_bits_ = 256;
};

// Uniform access to the points at a chosen scalar type (Rat requires an
// exact configuration).
template <class S>
std::vector<S> config_points(const BetheConfig& cfg);

template <>
inline std::vector<Rat> config_points<Rat>(const BetheConfig& cfg) {
  return cfg.z_exact();
}
template <>
inline std::vector<BigComplex> config_points<BigComplex>(const BetheConfig& cfg) {
  return cfg.z_numeric();
}

}  // namespace gaudin
