#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "gaudin/bigcomplex.hpp"
#include "gaudin/bigfloat.hpp"
#include "gaudin/diff_op.hpp"
#include "gaudin/linalg.hpp"
#include "gaudin/matrix.hpp"
#include "gaudin/poly.hpp"
#include "gaudin/ratfunc.hpp"

namespace gaudin {

// Replace by exact zero every coefficient that is tiny relative to the
// largest one (numeric polynomials accumulate dust that would otherwise
// inflate degrees).
inline PolyC clip_small(const PolyC& p, const BigFloat& tol) {
  if (p.degree() < 0) return p;
  BigFloat scale = coeff_norm(p);
  if (scale.is_zero()) return PolyC();
  std::vector<BigComplex> c;
  c.reserve(static_cast<size_t>(p.degree()) + 1);
  for (int j = 0; j <= p.degree(); ++j) {
    BigComplex v = p.coeff(j);
    if (v.abs() <= tol * scale) v = BigComplex();
    c.push_back(std::move(v));
  }
  return PolyC(std::move(c));
}

// Wronskian determinant det[ f_i^{(j)} ], i, j = 0..m-1.
template <class S>
Poly<S> wronskian(const std::vector<Poly<S>>& fs) {
  const size_t m = fs.size();
  if (m == 0) return Poly<S>(1);
  Matrix<Poly<S>> a(m, m);
  for (size_t i = 0; i < m; ++i) {
    Poly<S> d = fs[i];
    for (size_t j = 0; j < m; ++j) {
      a.at(i, j) = d;
      d = d.derivative();
    }
  }
  return determinant(a);
}

template <class S>
Poly<S> monic_wronskian(const std::vector<Poly<S>>& fs) {
  Poly<S> w = wronskian(fs);
  if (w.degree() < 0) throw std::domain_error("monic_wronskian: dependent family");
  return w.monic();
}

// A finite-dimensional space of polynomials held in canonical reduced
// echelon form: basis elements are monic of strictly decreasing degrees
// d_1 > d_2 > ... > d_m, and element i has coefficient zero at every other
// basis degree d_j. Two spans are equal iff their canonical bases match,
// which is what all deduplication and comparison in the solver relies on.
template <class S>
class PolySubspace {
 public:
  PolySubspace() = default;

  // Exact scalars: plain Gaussian elimination.
  static PolySubspace from_span(std::vector<Poly<S>> gens) {
    static_assert(std::is_same_v<S, Rat>, "exact from_span requires rational scalars");
    return reduce(std::move(gens), nullptr);
  }

  // Numeric scalars: eliminate with relative threshold `tol` for rank
  // decisions and clip residual dust from the canonical coefficients.
  static PolySubspace from_span(std::vector<Poly<S>> gens, const BigFloat& tol) {
    static_assert(!std::is_same_v<S, Rat>, "tolerance only applies to numeric scalars");
    return reduce(std::move(gens), &tol);
  }

  size_t dim() const { return basis_.size(); }
  const std::vector<Poly<S>>& basis() const { return basis_; }
  std::vector<int> degrees() const {
    std::vector<int> d;
    d.reserve(basis_.size());
    for (const auto& f : basis_) d.push_back(f.degree());
    return d;
  }

  friend bool operator==(const PolySubspace& a, const PolySubspace& b) {
    return a.basis_ == b.basis_;
  }
  friend bool operator!=(const PolySubspace& a, const PolySubspace& b) { return !(a == b); }

  // Comparison of canonical bases coefficient-wise with relative tolerance.
  bool approx_equals(const PolySubspace& other, const BigFloat& tol) const {
    static_assert(std::is_same_v<S, BigComplex>);
    if (basis_.size() != other.basis_.size()) return false;
    for (size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i].degree() != other.basis_[i].degree()) return false;
      if (!poly_close(basis_[i], other.basis_[i], tol)) return false;
    }
    return true;
  }

  bool contains(const Poly<S>& p) const {
    static_assert(std::is_same_v<S, Rat>);
    Poly<S> r = reduce_against(p, nullptr);
    return r.degree() < 0;
  }
  bool contains(const Poly<S>& p, const BigFloat& tol) const {
    static_assert(std::is_same_v<S, BigComplex>);
    Poly<S> r = reduce_against(p, &tol);
    BigFloat scale = max(coeff_norm(p), BigFloat(1));
    return coeff_norm(r) <= tol * scale;
  }

 private:
  // Subtract basis multiples to kill the coefficients of p at the pivot
  // degrees (no rank decisions involved).
  Poly<S> reduce_against(Poly<S> p, const BigFloat* tol) const {
    if (tol != nullptr) p = clip_poly(p, *tol);
    for (const auto& f : basis_) {
      int d = f.degree();
      if (p.degree() < d) continue;
      S c = p.coeff(d);
      using gaudin::is_zero;
      if (is_zero(c)) continue;
      p -= c * f;
      if (tol != nullptr) p = clip_poly(p, *tol);
    }
    return p;
  }

  static Poly<S> clip_poly(const Poly<S>& p, const BigFloat& tol) {
    if constexpr (std::is_same_v<S, BigComplex>) return clip_small(p, tol);
    else return p;
  }

  static PolySubspace reduce(std::vector<Poly<S>> gens, const BigFloat* tol) {
    std::vector<Poly<S>> rows;
    for (auto& g : gens) {
      Poly<S> p = (tol != nullptr) ? clip_poly(g, *tol) : g;
      if (p.degree() >= 0) rows.push_back(std::move(p));
    }
    std::vector<Poly<S>> picked;
    while (!rows.empty()) {
      // Highest remaining degree; among candidates prefer the largest
      // leading coefficient magnitude for numeric stability.
      int best = -1;
      int best_deg = -1;
      for (size_t i = 0; i < rows.size(); ++i) {
        int d = rows[i].degree();
        if (d > best_deg) {
          best_deg = d;
          best = static_cast<int>(i);
        } else if (d == best_deg && best >= 0) {
          if constexpr (std::is_same_v<S, BigComplex>) {
            if (rows[i].leading().abs() > rows[static_cast<size_t>(best)].leading().abs())
              best = static_cast<int>(i);
          }
        }
      }
      Poly<S> pivot = rows[static_cast<size_t>(best)].monic();
      rows.erase(rows.begin() + best);
      for (auto& r : rows) {
        if (r.degree() == best_deg) {
          r -= r.leading() * pivot;
          if (tol != nullptr) r = clip_poly(r, *tol);
          if (r.degree() == best_deg) {
            // Leading terms must cancel; force it (numeric rounding).
            std::vector<S> c;
            for (int j = 0; j < r.degree(); ++j) c.push_back(r.coeff(j));
            r = Poly<S>(std::move(c));
          }
        }
      }
      rows.erase(std::remove_if(rows.begin(), rows.end(),
                                [](const Poly<S>& p) { return p.degree() < 0; }),
                 rows.end());
      picked.push_back(std::move(pivot));
    }
    // Back-substitution: clear pivot degrees from the other elements.
    for (size_t i = picked.size(); i-- > 0;) {
      for (size_t j = 0; j < picked.size(); ++j) {
        if (j == i) continue;
        S c = picked[j].coeff(picked[i].degree());
        using gaudin::is_zero;
        if (!is_zero(c)) picked[j] -= c * picked[i];
      }
      if (tol != nullptr) picked[i] = clip_poly(picked[i], *tol);
    }
    PolySubspace out;
    out.basis_ = std::move(picked);
    return out;
  }

  std::vector<Poly<S>> basis_;
};

using PolySubspaceQ = PolySubspace<Rat>;
using PolySubspaceC = PolySubspace<BigComplex>;

inline PolySubspaceC promote(const PolySubspaceQ& v, mpfr_prec_t prec, const BigFloat& tol) {
  std::vector<PolyC> gens;
  gens.reserve(v.dim());
  for (const auto& f : v.basis()) gens.push_back(promote(f, prec));
  return PolySubspaceC::from_span(std::move(gens), tol);
}

// The monic differential operator of order m = dim V whose kernel is V,
// assembled from the bordered-determinant expansion: coefficient of d^j is
// (-1)^{m+j} * (minor omitting derivative order j) / (Wronskian of V).
template <class S>
DiffOp<RatFunc<S>> fundamental_operator(const PolySubspace<S>& v) {
  const size_t m = v.dim();
  if (m == 0) throw std::invalid_argument("fundamental_operator: empty space");
  Matrix<Poly<S>> rows(m, m + 1);
  for (size_t i = 0; i < m; ++i) {
    Poly<S> d = v.basis()[i];
    for (size_t j = 0; j <= m; ++j) {
      rows.at(i, j) = d;
      d = d.derivative();
    }
  }
  std::vector<size_t> all_cols(m + 1);
  for (size_t j = 0; j <= m; ++j) all_cols[j] = j;
  Poly<S> wr;
  std::vector<Poly<S>> minors;
  for (size_t j = 0; j <= m; ++j) {
    std::vector<size_t> cols;
    for (size_t r = 0; r <= m; ++r)
      if (r != j) cols.push_back(r);
    Poly<S> mj = determinant(rows.select_columns(cols));
    if (j == m) wr = mj;
    minors.push_back(std::move(mj));
  }
  if (wr.degree() < 0) throw std::domain_error("fundamental_operator: dependent basis");
  std::vector<RatFunc<S>> coeffs;
  coeffs.reserve(m + 1);
  for (size_t j = 0; j <= m; ++j) {
    Poly<S> num = ((m + j) % 2 == 1) ? -minors[j] : minors[j];
    coeffs.emplace_back(std::move(num), wr);
  }
  return DiffOp<RatFunc<S>>::from_coeffs(std::move(coeffs));
}

template <class S>
struct PolyKernel {
  std::vector<Poly<S>> basis;
  bool ill_conditioned = false;
};

namespace detail {

// Clear denominators: a polynomial multiple L of every coefficient
// denominator, built greedily (largest degrees first, skipping exact
// divisors), and the polynomial coefficients L * c_j.
template <class S>
std::vector<Poly<S>> cleared_coefficients(const DiffOp<RatFunc<S>>& op, const BigFloat* tol) {
  std::vector<Poly<S>> dens;
  for (const auto& c : op.coeffs())
    if (!c.is_zero() && c.den().degree() > 0) dens.push_back(c.den());
  std::sort(dens.begin(), dens.end(),
            [](const Poly<S>& a, const Poly<S>& b) { return a.degree() > b.degree(); });
  Poly<S> l(1);
  auto divides = [&](const Poly<S>& d, const Poly<S>& target) {
    if (target.degree() < d.degree()) return false;
    auto [q, r] = divrem(target, d);
    (void)q;
    if constexpr (std::is_same_v<S, Rat>) {
      return r.degree() < 0;
    } else {
      BigFloat scale = max(coeff_norm(target), BigFloat(1));
      return coeff_norm(r) <= (tol != nullptr ? *tol : BigFloat::pow10(-30)) * scale;
    }
  };
  for (const auto& d : dens)
    if (!divides(d, l)) l = l * d;

  std::vector<Poly<S>> cleared;
  for (const auto& c : op.coeffs()) {
    if (c.is_zero()) {
      cleared.push_back(Poly<S>());
      continue;
    }
    auto [q, r] = divrem(l, c.den());
    cleared.push_back(c.num() * q);
    if constexpr (std::is_same_v<S, Rat>) {
      if (!(r.degree() < 0))
        throw std::logic_error("cleared_coefficients: denominator does not divide the multiple");
    }
  }
  return cleared;
}

}  // namespace detail

// Basis of the space of polynomial solutions g (deg g <= degree_bound) of
// op(g) = 0, computed from the coefficient matrix of the linear map
// g |-> op(g) after clearing denominators. Exact scalars.
inline PolyKernel<Rat> poly_kernel(const DiffOp<RatFuncQ>& op, int degree_bound) {
  if (op.is_zero()) throw std::invalid_argument("poly_kernel: zero operator");
  std::vector<PolyQ> cleared = detail::cleared_coefficients<Rat>(op, nullptr);
  int max_deg = 0;
  for (const auto& p : cleared) max_deg = std::max(max_deg, p.degree());
  const size_t rows = static_cast<size_t>(max_deg + degree_bound + 1);
  const size_t cols = static_cast<size_t>(degree_bound + 1);
  Matrix<Rat> a(rows, cols);
  for (size_t e = 0; e < cols; ++e) {
    PolyQ image;
    PolyQ g = PolyQ::monomial(Rat(1), static_cast<int>(e));
    for (size_t j = 0; j < cleared.size(); ++j) {
      image += cleared[j] * g;
      g = g.derivative();
    }
    for (int r = 0; r <= image.degree(); ++r) a.at(static_cast<size_t>(r), e) = image.coeff(r);
  }
  PolyKernel<Rat> out;
  for (const auto& col : nullspace_exact(a)) {
    std::vector<Rat> c(col.size());
    for (size_t i = 0; i < col.size(); ++i) c[i] = col[i];
    out.basis.emplace_back(std::move(c));
  }
  return out;
}

// Numeric variant; `tol` is the relative singular-value cutoff.
inline PolyKernel<BigComplex> poly_kernel(const DiffOp<RatFuncC>& op, int degree_bound,
                                          const BigFloat& tol) {
  if (op.is_zero()) throw std::invalid_argument("poly_kernel: zero operator");
  std::vector<PolyC> cleared = detail::cleared_coefficients<BigComplex>(op, &tol);
  int max_deg = 0;
  for (const auto& p : cleared) max_deg = std::max(max_deg, p.degree());
  const size_t rows = static_cast<size_t>(max_deg + degree_bound + 1);
  const size_t cols = static_cast<size_t>(degree_bound + 1);
  Matrix<BigComplex> a(rows, cols);
  for (size_t e = 0; e < cols; ++e) {
    PolyC image;
    PolyC g = PolyC::monomial(BigComplex(1), static_cast<int>(e));
    for (size_t j = 0; j < cleared.size(); ++j) {
      image += cleared[j] * g;
      g = g.derivative();
    }
    for (int r = 0; r <= image.degree(); ++r) a.at(static_cast<size_t>(r), e) = image.coeff(r);
  }
  NullspaceResult ns = nullspace_numeric(a, tol);
  PolyKernel<BigComplex> out;
  out.ill_conditioned = ns.ill_conditioned;
  for (const auto& col : ns.basis) out.basis.emplace_back(std::vector<BigComplex>(col));
  return out;
}

}  // namespace gaudin
