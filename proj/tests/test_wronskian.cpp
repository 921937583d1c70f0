#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "gaudin/poly.hpp"
#include "gaudin/ratfunc.hpp"
#include "gaudin/wronskian.hpp"

using namespace gaudin;

namespace {
PolyQ mono(long c, int d) { return PolyQ::monomial(Rat(c), d); }

// span{u^4 + 4u^3, u^2 - 2u, 1}: a space with monic Wronskian u^3 - 3u.
std::vector<PolyQ> sample_basis() {
  return {mono(1, 4) + mono(4, 3), mono(1, 2) + mono(-2, 1), PolyQ(1)};
}
}  // namespace

TEST_CASE("wronskian determinants of monomial triples") {
  PolyQ wr = wronskian<Rat>({mono(1, 2), mono(1, 1), PolyQ(1)});
  CHECK(wr == PolyQ(-2));
  CHECK(monic_wronskian<Rat>({mono(1, 2), mono(1, 1), PolyQ(1)}) == PolyQ(1));

  // One-element and two-element cases.
  CHECK(wronskian<Rat>({mono(3, 2)}) == mono(3, 2));
  CHECK(wronskian<Rat>({mono(1, 3), mono(1, 1)}) == mono(-2, 3));
}

TEST_CASE("wronskian of the sample space") {
  CHECK(wronskian<Rat>(sample_basis()) == mono(-16, 3) + mono(48, 1));
  CHECK(monic_wronskian<Rat>(sample_basis()) == mono(1, 3) + mono(-3, 1));
}

TEST_CASE("multiplying every entry by a common factor scales the wronskian by its power") {
  PolyQ g = mono(1, 2) + PolyQ(1);
  std::vector<PolyQ> fs{mono(1, 2), mono(1, 1), PolyQ(1)};
  std::vector<PolyQ> gfs;
  for (const auto& f : fs) gfs.push_back(g * f);
  CHECK(wronskian<Rat>(gfs) == g * g * g * wronskian<Rat>(fs));
}

TEST_CASE("dependent families are rejected") {
  CHECK_THROWS_AS(monic_wronskian<Rat>({mono(1, 1), mono(2, 1)}), std::domain_error);
  CHECK(wronskian<Rat>({mono(1, 1), mono(2, 1)}).is_zero());
}

TEST_CASE("subspace canonical form removes redundancy") {
  std::vector<PolyQ> gens = sample_basis();
  gens.push_back(gens[0] + Rat(7) * gens[2]);        // dependent
  gens.push_back(Rat(2) * gens[1]);                  // dependent
  PolySubspaceQ v = PolySubspaceQ::from_span(gens);
  CHECK(v.dim() == 3);
  CHECK(v.degrees() == std::vector<int>{4, 2, 0});
  CHECK(v == PolySubspaceQ::from_span(sample_basis()));
  CHECK(v.contains(sample_basis()[0] - Rat(5) * sample_basis()[1]));
  CHECK_FALSE(v.contains(mono(1, 1)));

  // Canonical representatives are monic with echelon degrees.
  for (const auto& b : v.basis()) CHECK(b.leading() == Rat(1));
}

TEST_CASE("numeric subspaces compare up to tolerance") {
  PrecisionScope scope(256);
  BigFloat tol = BigFloat::pow10(-40);
  PolySubspaceC v = promote(PolySubspaceQ::from_span(sample_basis()), 256, tol);
  CHECK(v.dim() == 3);

  // Perturb a generator by far less than the tolerance.
  std::vector<PolyC> gens;
  for (const auto& b : v.basis()) gens.push_back(b);
  gens[0] += PolyC(BigComplex(BigFloat::pow10(-60), BigFloat(0)));
  PolySubspaceC w = PolySubspaceC::from_span(gens, tol);
  CHECK(v.approx_equals(w, tol));

  // A genuinely different space fails.
  gens[0] += PolyC::monomial(BigComplex(1), 1);
  PolySubspaceC x = PolySubspaceC::from_span(gens, tol);
  CHECK_FALSE(v.approx_equals(x, tol));
}

TEST_CASE("clipping suppresses sub-tolerance coefficients") {
  PolyC p = PolyC::monomial(BigComplex(1), 2) +
            PolyC(BigComplex(BigFloat::pow10(-50), BigFloat(0)));
  PolyC q = clip_small(p, BigFloat::pow10(-30));
  CHECK(q == PolyC::monomial(BigComplex(1), 2));
  CHECK(clip_small(p, BigFloat::pow10(-60)) == p);
}

TEST_CASE("the monic annihilator of the sample space has the expected coefficients") {
  PolySubspaceQ v = PolySubspaceQ::from_span(sample_basis());
  DiffOp<RatFuncQ> op = fundamental_operator(v);
  REQUIRE(op.order() == 3);
  PolyQ w = mono(1, 3) + mono(-3, 1);
  CHECK(op.coeff(3) == RatFuncQ(1));
  CHECK(op.coeff(2) == RatFuncQ(mono(-3, 2) + PolyQ(3), w));
  CHECK(op.coeff(1) == RatFuncQ(mono(3, 1) + PolyQ(3), w));
  CHECK(op.coeff(0).is_zero());

  // It annihilates the space it came from.
  for (const auto& f : v.basis()) CHECK(op.apply(RatFuncQ(f)).is_zero());
  // And not other polynomials.
  CHECK_FALSE(op.apply(RatFuncQ(mono(1, 1))).is_zero());
}

TEST_CASE("exact polynomial kernels recover the space") {
  PolySubspaceQ v = PolySubspaceQ::from_span(sample_basis());
  DiffOp<RatFuncQ> op = fundamental_operator(v);
  PolyKernel<Rat> ker = poly_kernel(op, 5);
  REQUIRE(ker.basis.size() == 3);
  CHECK(PolySubspaceQ::from_span(ker.basis) == v);

  // A tighter degree bound cuts the kernel down to what fits.
  PolyKernel<Rat> small = poly_kernel(op, 2);
  CHECK(small.basis.size() == 2);
}

TEST_CASE("numeric polynomial kernels match the exact ones") {
  PrecisionScope scope(256);
  BigFloat tol = BigFloat::pow10(-40);
  PolySubspaceQ v = PolySubspaceQ::from_span(sample_basis());
  DiffOp<RatFuncC> op =
      fundamental_operator(v).map_coeffs([](const RatFuncQ& c) { return promote(c, 256); });
  PolyKernel<BigComplex> ker = poly_kernel(op, 5, tol);
  REQUIRE(ker.basis.size() == 3);
  CHECK_FALSE(ker.ill_conditioned);
  PolySubspaceC got = PolySubspaceC::from_span(ker.basis, tol);
  CHECK(got.approx_equals(promote(v, 256, tol), tol));
}

TEST_CASE("numeric wronskians agree with promoted exact ones") {
  PrecisionScope scope(256);
  std::vector<PolyC> fs;
  for (const auto& f : sample_basis()) fs.push_back(promote(f, 256));
  PolyC wr = monic_wronskian<BigComplex>(fs);
  CHECK(poly_close(wr, promote(monic_wronskian<Rat>(sample_basis()), 256), BigFloat::pow10(-60)));
}
