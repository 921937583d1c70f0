#pragma once

#include <mpfr.h>

#include <string>

#include "gaudin/rat.hpp"

namespace gaudin {

// Arbitrary-precision real scalar (MPFR-backed). Every value carries its
// precision; binary operations compute at max(operand precisions), so
// precision is never silently downgraded.
class BigFloat {
 public:
  // Precision (bits) used when none is given explicitly. Thread-local so
  // pipelines can scope it; see PrecisionScope.
  static mpfr_prec_t default_precision();
  static void set_default_precision(mpfr_prec_t bits);

  BigFloat();  // zero at default precision
  explicit BigFloat(long value, mpfr_prec_t prec = 0);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat from_rat(const Rat& r, mpfr_prec_t prec = 0);
  // Parses a decimal string ("-1.25", "3e-7", ...).
  static BigFloat from_string(const std::string& s, mpfr_prec_t prec = 0);
  static BigFloat sqrt_of_long(long x, mpfr_prec_t prec = 0);  // x >= 0
  // 10^e at the given precision; e may be negative. Handy for tolerances.
  static BigFloat pow10(long e, mpfr_prec_t prec = 0);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  const mpfr_t& raw() const { return v_; }
  mpfr_t& raw() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Deterministic round-trippable decimal form ("-1.732...e+0").
  std::string to_string() const;

  BigFloat operator-() const;
  BigFloat abs() const;
  BigFloat sqrt() const;  // requires *this >= 0

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat& operator+=(const BigFloat& b) { return *this = *this + b; }
  BigFloat& operator-=(const BigFloat& b) { return *this = *this - b; }
  BigFloat& operator*=(const BigFloat& b) { return *this = *this * b; }
  BigFloat& operator/=(const BigFloat& b) { return *this = *this / b; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  friend BigFloat hypot(const BigFloat& a, const BigFloat& b);
  friend BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

 private:
  mpfr_t v_;
};

inline bool is_zero(const BigFloat& x) { return x.is_zero(); }

// RAII guard: sets the thread-local default precision for a scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(mpfr_prec_t bits)
      : saved_(BigFloat::default_precision()) {
    BigFloat::set_default_precision(bits);
  }
  ~PrecisionScope() { BigFloat::set_default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  mpfr_prec_t saved_;
};

}  // namespace gaudin
