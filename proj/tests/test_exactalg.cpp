#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "gaudin/bigcomplex.hpp"
#include "gaudin/bigfloat.hpp"
#include "gaudin/linalg.hpp"
#include "gaudin/matrix.hpp"
#include "gaudin/poly.hpp"
#include "gaudin/rat.hpp"
#include "gaudin/ratfunc.hpp"

using namespace gaudin;

TEST_CASE("rational parsing and formatting") {
  CHECK(rat_from_string("3/6") == rat_of(1, 2));
  CHECK(rat_from_string("-14") == rat_of(-14));
  CHECK(rat_to_string(rat_of(5)) == "5/1");
  CHECK(rat_to_string(rat_of(-2, 4)) == "-1/2");
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(rat_of(1, 0), std::invalid_argument);
}

TEST_CASE("big float basics and precision scoping") {
  BigFloat third = BigFloat::from_rat(rat_of(1, 3), 256);
  CHECK(third.prec() == 256);
  BigFloat three(3);
  // 1/3 * 3 differs from 1 by at most one ulp at 256 bits.
  BigFloat err = (third * three - BigFloat(1)).abs();
  CHECK(err < BigFloat::pow10(-70, 256));

  BigFloat r2 = BigFloat::sqrt_of_long(2, 256);
  CHECK((r2 * r2 - BigFloat(2, 256)).abs() < BigFloat::pow10(-70, 256));

  CHECK(BigFloat::pow10(-3, 64).to_double() == doctest::Approx(1e-3));
  CHECK(BigFloat::from_string("-1.25").to_double() == doctest::Approx(-1.25));

  mpfr_prec_t before = BigFloat::default_precision();
  {
    PrecisionScope scope(333);
    CHECK(BigFloat::default_precision() == 333);
    CHECK(BigFloat(1).prec() == 333);
  }
  CHECK(BigFloat::default_precision() == before);

  // Round-trip through the decimal string form.
  BigFloat x = BigFloat::from_rat(rat_of(-7, 11), 128);
  BigFloat y = BigFloat::from_string(x.to_string(), 128);
  CHECK((x - y).abs() < BigFloat::pow10(-35, 128));
}

TEST_CASE("big complex arithmetic") {
  BigComplex i(BigFloat(0), BigFloat(1));
  CHECK((i * i) == BigComplex(-1));
  BigComplex z(BigFloat(3), BigFloat(4));
  CHECK((z.abs() - BigFloat(5)).abs() < BigFloat::pow10(-60));
  CHECK(z.conj() == BigComplex(BigFloat(3), BigFloat(-4)));
  CHECK((z * z.conj()).im().is_zero());
  BigComplex q = z / BigComplex(2);
  CHECK(q.re().to_double() == doctest::Approx(1.5));
  // sqrt(-1) = i on the principal branch.
  BigComplex s = BigComplex(-1).sqrt();
  CHECK((s - i).abs() < BigFloat::pow10(-60));
}

TEST_CASE("polynomial ring operations") {
  PolyQ u = PolyQ::monomial(Rat(1), 1);
  PolyQ p = u * u - PolyQ(1);           // u^2 - 1
  PolyQ q = u - PolyQ(1);               // u - 1
  auto [quo, rem] = divrem(p, q);
  CHECK(rem.is_zero());
  CHECK(quo == u + PolyQ(1));

  CHECK(p.derivative() == Rat(2) * u);
  CHECK(p.derivative().antiderivative() == u * u);
  CHECK(p.eval(Rat(3)) == Rat(8));
  CHECK((Rat(4) * p).monic() == p);
  CHECK(PolyQ().degree() == -1);
  CHECK(p.coeff(2) == Rat(1));
  CHECK(p.coeff(5) == Rat(0));

  PolyQ g = poly_gcd(p, q * q);
  CHECK(g == q);  // gcd(u^2-1, (u-1)^2) = u - 1, monic

  // Exact cancellation keeps representations normalized.
  CHECK((p - p).is_zero());
  CHECK(PolyQ(std::vector<Rat>{Rat(1), Rat(0), Rat(0)}).degree() == 0);
}

TEST_CASE("promotion from exact to floating scalars") {
  PolyQ p = PolyQ(std::vector<Rat>{rat_of(-1, 3), Rat(0), Rat(2)});
  PolyC pc = promote(p, 256);
  CHECK(pc.degree() == 2);
  CHECK((pc.coeff(0).re() - BigFloat::from_rat(rat_of(-1, 3), 256)).abs().is_zero());
  CHECK(pc.coeff(1).is_zero());
}

TEST_CASE("rational function reduction and calculus") {
  PolyQ u = PolyQ::monomial(Rat(1), 1);
  RatFuncQ f(u * u - PolyQ(1), u - PolyQ(1));
  CHECK(f.is_polynomial());
  CHECK(f.as_polynomial() == u + PolyQ(1));

  RatFuncQ g(PolyQ(1), u);  // 1/u
  RatFuncQ prod = g * RatFuncQ(u);
  CHECK(prod == RatFuncQ(1));

  // Quotient rule: (1/u)' = -1/u^2.
  CHECK(g.derivative() == RatFuncQ(-PolyQ(1), u * u));

  // Denominators stay monic after reduction.
  RatFuncQ h(PolyQ(3), Rat(2) * u);
  CHECK(h.den() == u);
  CHECK(h.num() == PolyQ(std::vector<Rat>{rat_of(3, 2)}));

  CHECK_THROWS_AS(RatFuncQ(PolyQ(1), PolyQ()), std::domain_error);
  CHECK_THROWS_AS(f / RatFuncQ(0), std::domain_error);
}

TEST_CASE("approximate polynomial comparison helpers") {
  PolyC a = promote(PolyQ(std::vector<Rat>{Rat(1), Rat(2), Rat(3)}));
  PolyC b = a;
  CHECK(poly_close(a, b, BigFloat::pow10(-50)));
  PolyC c = a + PolyC(BigComplex(BigFloat::pow10(-20), BigFloat(0)));
  CHECK(poly_close(a, c, BigFloat::pow10(-15)));
  CHECK_FALSE(poly_close(a, c, BigFloat::pow10(-25)));

  RatFuncC f(promote(PolyQ(std::vector<Rat>{Rat(0), Rat(2)})), promote(PolyQ(std::vector<Rat>{Rat(0), Rat(0), Rat(2)})));
  RatFuncC g(PolyC(BigComplex(1)), promote(PolyQ::monomial(Rat(1), 1)));
  CHECK(ratfunc_close(f, g, BigFloat::pow10(-50)));
}

TEST_CASE("exact determinants") {
  // Vandermonde at 1,2,3,4: product of pairwise differences = 12.
  std::vector<Rat> pts{Rat(1), Rat(2), Rat(3), Rat(4)};
  Matrix<Rat> v(4, 4);
  for (size_t i = 0; i < 4; ++i) {
    Rat p(1);
    for (size_t j = 0; j < 4; ++j) {
      v.at(i, j) = p;
      p *= pts[i];
    }
  }
  CHECK(determinant(v) == Rat(12));

  Matrix<Rat> id = Matrix<Rat>::identity(5);
  CHECK(determinant(id) == Rat(1));
  CHECK(determinant(Matrix<Rat>(0, 0)) == Rat(1));
}

TEST_CASE("exact nullspace") {
  // Rank-1 matrix [[1,2],[2,4]]: nullspace spanned by (-2,1).
  Matrix<Rat> m(2, 2);
  m.at(0, 0) = Rat(1); m.at(0, 1) = Rat(2);
  m.at(1, 0) = Rat(2); m.at(1, 1) = Rat(4);
  auto ns = nullspace_exact(m);
  REQUIRE(ns.size() == 1);
  CHECK(m.at(0, 0) * ns[0][0] + m.at(0, 1) * ns[0][1] == Rat(0));

  CHECK(nullspace_exact(Matrix<Rat>::identity(3)).empty());
}

TEST_CASE("numeric nullspace finds the kernel of a rank-deficient matrix") {
  PrecisionScope scope(256);
  // Rows: (1, 1, 0), (0, 1, 1), (1, 2, 1) -- third = first + second.
  Matrix<BigComplex> m(3, 3);
  m.at(0, 0) = BigComplex(1); m.at(0, 1) = BigComplex(1);
  m.at(1, 1) = BigComplex(1); m.at(1, 2) = BigComplex(1);
  m.at(2, 0) = BigComplex(1); m.at(2, 1) = BigComplex(2); m.at(2, 2) = BigComplex(1);
  auto r = nullspace_numeric(m, BigFloat::pow10(-30));
  REQUIRE(r.basis.size() == 1);
  CHECK_FALSE(r.ill_conditioned);
  // Residual of the claimed null vector.
  auto img = matvec(m, r.basis[0]);
  CHECK(vec_norm(img) < BigFloat::pow10(-60));
  // Direction is (1, -1, 1) up to phase.
  const auto& v = r.basis[0];
  CHECK((v[0] + v[1]).abs() < BigFloat::pow10(-60));
  CHECK((v[0] - v[2]).abs() < BigFloat::pow10(-60));
}

TEST_CASE("numeric eigensolver on a companion matrix") {
  PrecisionScope scope(256);
  // Companion matrix of (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6.
  Matrix<BigComplex> m(3, 3);
  m.at(0, 2) = BigComplex(6);
  m.at(1, 0) = BigComplex(1); m.at(1, 2) = BigComplex(-11);
  m.at(2, 1) = BigComplex(1); m.at(2, 2) = BigComplex(6);
  auto r = eig_numeric(m, BigFloat::pow10(-40));
  REQUIRE(r.pairs.size() == 3);
  CHECK_FALSE(r.defective);
  for (long k = 0; k < 3; ++k) {
    CHECK((r.pairs[static_cast<size_t>(k)].value - BigComplex(k + 1)).abs() <
          BigFloat::pow10(-60));
    CHECK(r.pairs[static_cast<size_t>(k)].multiplicity == 1);
  }
}

TEST_CASE("numeric eigensolver groups repeated eigenvalues") {
  PrecisionScope scope(256);
  Matrix<BigComplex> m(3, 3);
  m.at(0, 0) = BigComplex(2);
  m.at(1, 1) = BigComplex(2);
  m.at(2, 2) = BigComplex(5);
  auto r = eig_numeric(m, BigFloat::pow10(-40));
  REQUIRE(r.pairs.size() == 2);
  CHECK(r.pairs[0].multiplicity == 2);
  CHECK(r.pairs[0].basis.size() == 2);
  CHECK(r.pairs[1].multiplicity == 1);
  CHECK_FALSE(r.defective);
}

TEST_CASE("numeric eigensolver flags a defective matrix") {
  PrecisionScope scope(256);
  // Jordan block: algebraic multiplicity 2, geometric 1.
  Matrix<BigComplex> m(2, 2);
  m.at(0, 0) = BigComplex(3); m.at(0, 1) = BigComplex(1);
  m.at(1, 1) = BigComplex(3);
  auto r = eig_numeric(m, BigFloat::pow10(-30));
  CHECK(r.defective);
}

TEST_CASE("matrix-vector helpers") {
  Matrix<BigComplex> m(2, 2);
  m.at(0, 0) = BigComplex(1); m.at(0, 1) = BigComplex(2);
  m.at(1, 0) = BigComplex(3); m.at(1, 1) = BigComplex(4);
  std::vector<BigComplex> v{BigComplex(1), BigComplex(-1)};
  auto w = matvec(m, v);
  CHECK((w[0] - BigComplex(-1)).abs().is_zero());
  CHECK((w[1] - BigComplex(-1)).abs().is_zero());
  CHECK(entry_norm(m) == BigFloat(4));
  CHECK(vec_norm(v) == BigFloat(1));
}
