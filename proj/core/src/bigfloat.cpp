#include "gaudin/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace gaudin {

namespace {
thread_local mpfr_prec_t g_default_prec = 256;

mpfr_prec_t pick(mpfr_prec_t requested) {
  return requested > 0 ? requested : g_default_prec;
}
}  // namespace

mpfr_prec_t BigFloat::default_precision() { return g_default_prec; }

void BigFloat::set_default_precision(mpfr_prec_t bits) {
  if (bits < MPFR_PREC_MIN) throw std::invalid_argument("precision too small");
  g_default_prec = bits;
}

BigFloat::BigFloat() {
  mpfr_init2(v_, g_default_prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t prec) {
  mpfr_init2(v_, pick(prec));
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_rat(const Rat& r, mpfr_prec_t prec) {
  BigFloat x(0, pick(prec));
  mpfr_set_q(x.v_, r.get_mpq_t(), MPFR_RNDN);
  return x;
}

BigFloat BigFloat::from_string(const std::string& s, mpfr_prec_t prec) {
  BigFloat x(0, pick(prec));
  if (mpfr_set_str(x.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("BigFloat::from_string: cannot parse '" + s + "'");
  return x;
}

BigFloat BigFloat::sqrt_of_long(long x, mpfr_prec_t prec) {
  if (x < 0) throw std::invalid_argument("sqrt_of_long: negative argument");
  BigFloat r(0, pick(prec));
  mpfr_sqrt_ui(r.v_, static_cast<unsigned long>(x), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow10(long e, mpfr_prec_t prec) {
  BigFloat r(0, pick(prec));
  mpfr_set_ui(r.v_, 10, MPFR_RNDN);
  mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string() const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(v_)) return "0";
  // Enough digits to round-trip: ceil(prec * log10(2)) + 2.
  size_t digits = static_cast<size_t>(static_cast<double>(prec()) * 0.30103) + 3;
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, digits, v_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant = mant.substr(1);
  }
  // Strip trailing zeros of the mantissa (keeps output canonical).
  size_t last = mant.find_last_not_of('0');
  mant = mant.substr(0, std::max<size_t>(last + 1, 1));
  // mpfr mantissa is 0.d1d2... * 10^exp; emit d1.d2...e(exp-1).
  std::string out = sign + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  long e10 = static_cast<long>(exp) - 1;
  out += "e" + std::string(e10 >= 0 ? "+" : "") + std::to_string(e10);
  return out;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(0, prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(0, prec());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  if (sign() < 0) throw std::domain_error("BigFloat::sqrt of negative value");
  BigFloat r(0, prec());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

#define GAUDIN_BF_BINOP(op, fn)                                  \
  BigFloat operator op(const BigFloat& a, const BigFloat& b) {   \
    BigFloat r(0, std::max(a.prec(), b.prec()));                 \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                             \
    return r;                                                    \
  }

GAUDIN_BF_BINOP(+, mpfr_add)
GAUDIN_BF_BINOP(-, mpfr_sub)
GAUDIN_BF_BINOP(*, mpfr_mul)
GAUDIN_BF_BINOP(/, mpfr_div)

#undef GAUDIN_BF_BINOP

BigFloat hypot(const BigFloat& a, const BigFloat& b) {
  BigFloat r(0, std::max(a.prec(), b.prec()));
  mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

}  // namespace gaudin
