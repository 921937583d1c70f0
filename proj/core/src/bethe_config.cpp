#include "gaudin/bethe_config.hpp"

namespace gaudin {

BetheConfig BetheConfig::from_exact(std::vector<Rat> z, mpfr_prec_t precision_bits) {
  if (z.size() > 16) throw std::invalid_argument("BetheConfig: n too large");
  BetheConfig c;
  c.n_ = z.size();
  c.exact_ = true;
  c.z_exact_ = std::move(z);
  c.precision_bits_ = precision_bits;
  return c;
}

BetheConfig BetheConfig::from_numeric(std::vector<BigComplex> z, mpfr_prec_t precision_bits) {
  if (z.size() > 16) throw std::invalid_argument("BetheConfig: n too large");
  BetheConfig c;
  c.n_ = z.size();
  c.exact_ = false;
  c.z_numeric_ = std::move(z);
  c.precision_bits_ = precision_bits;
  return c;
}

std::vector<BigComplex> BetheConfig::z_numeric() const {
  if (!exact_) return z_numeric_;
  std::vector<BigComplex> out;
  out.reserve(z_exact_.size());
  for (const Rat& r : z_exact_) out.push_back(BigComplex::from_rat(r, precision_bits_));
  return out;
}

bool BetheConfig::all_real() const {
  if (exact_) return true;
  for (const auto& z : z_numeric_)
    if (!z.is_real()) return false;
  return true;
}

PolyQ BetheConfig::w_exact() const {
  PolyQ w(1);
  for (const Rat& zi : z_exact()) w *= PolyQ(std::vector<Rat>{zi, Rat(1)});
  return w;
}

PolyC BetheConfig::w_numeric() const {
  PolyC w(1);
  for (const BigComplex& zi : z_numeric())
    w *= PolyC(std::vector<BigComplex>{zi, BigComplex(1, precision_bits_)});
  return w;
}

BetheConfig BetheConfig::translated(const Rat& t) const {
  std::vector<Rat> z = z_exact();
  for (Rat& zi : z) zi += t;
  return from_exact(std::move(z), precision_bits_);
}

namespace {
BigFloat tol_from_bits(mpfr_prec_t bits, int divisor) {
  return BigFloat::pow10(-static_cast<long>(bits) / divisor, bits);
}
}  // namespace

BigFloat BetheConfig::default_tolerance() const { return tol_from_bits(precision_bits_, 10); }

BigFloat BetheConfig::default_grouping_tolerance() const { return tol_from_bits(precision_bits_, 8); }

}  // namespace gaudin
