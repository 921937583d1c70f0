#pragma once

// Classification of finite-dimensional polynomial subspaces by the shape of
// their degree sequence, affine coordinates on the matching cell of spaces,
// transposition duality on those coordinates, and the transport of a
// fundamental operator through that duality. Also the indicial data of an
// operator with polynomial coefficients, whose integer roots recover the
// kernel degrees.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "gaudin/bigcomplex.hpp"
#include "gaudin/bigfloat.hpp"
#include "gaudin/diff_op.hpp"
#include "gaudin/matrix.hpp"
#include "gaudin/partition.hpp"
#include "gaudin/poly.hpp"
#include "gaudin/rat.hpp"
#include "gaudin/ratfunc.hpp"
#include "gaudin/wronskian.hpp"

namespace gaudin {

namespace detail {

// a! / b! as an exact rational, for any non-negative pair.
inline Rat factorial_quotient(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("factorial_quotient: negative argument");
  mpz_class p = 1;
  if (a >= b) {
    for (int t = b + 1; t <= a; ++t) p *= t;
    return Rat(p);
  }
  for (int t = a + 1; t <= b; ++t) p *= t;
  Rat r(mpz_class(1), p);
  r.canonicalize();
  return r;
}

template <class S>
S scalar_of(const Rat& r) {
  if constexpr (std::is_same_v<S, Rat>) {
    return r;
  } else {
    return promote(r);
  }
}

// Sign attached to the cell coordinate at box (i, j), 1-based, of a
// dim-dimensional space whose j-th degree gap is e.
inline int coordinate_sign(size_t dim, size_t i, size_t j, int e) {
  long x = 1 + static_cast<long>(dim) - static_cast<long>(i) - static_cast<long>(j) + e;
  return ((x % 2) + 2) % 2 == 0 ? 1 : -1;
}

}  // namespace detail

// The shape attached to a set of distinct non-negative degrees: sorted
// descending d_1 > ... > d_m, the i-th part is d_i - (m - i).
inline Partition schubert_type(std::vector<int> degrees) {
  std::sort(degrees.begin(), degrees.end(), std::greater<int>());
  const int m = static_cast<int>(degrees.size());
  std::vector<int> parts;
  parts.reserve(degrees.size());
  for (int i = 0; i < m; ++i) {
    if (degrees[i] < 0) throw std::invalid_argument("schubert_type: negative degree");
    if (i > 0 && degrees[i] == degrees[i - 1])
      throw std::invalid_argument("schubert_type: repeated degree");
    parts.push_back(degrees[i] - (m - 1 - i));
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(parts);
}

template <class S>
Partition schubert_type_of(const PolySubspace<S>& v) {
  return schubert_type(v.degrees());
}

// Degrees d_i = shape_i + dim - i (1-based rows, zero parts padded) of the
// canonical basis of a dim-dimensional space in the cell of this shape.
inline std::vector<int> cell_degrees(const Partition& shape, size_t dim) {
  if (shape.rows() > dim)
    throw std::invalid_argument("cell_degrees: shape has more rows than the dimension");
  std::vector<int> d(dim);
  for (size_t i = 0; i < dim; ++i)
    d[i] = shape.part(i) + static_cast<int>(dim) - 1 - static_cast<int>(i);
  return d;
}

// The smallest non-negative integers that are not degrees; there are
// exactly shape_1 of them below the top degree, listed ascending.
inline std::vector<int> cell_gaps(const Partition& shape, size_t dim) {
  const std::vector<int> d = cell_degrees(shape, dim);
  const int count = shape.part(0);
  std::vector<int> gaps;
  if (count == 0) return gaps;
  std::vector<char> taken(static_cast<size_t>(d[0]) + 1, 0);
  for (int x : d) taken[static_cast<size_t>(x)] = 1;
  for (int x = 0; x < d[0] && static_cast<int>(gaps.size()) < count; ++x)
    if (!taken[static_cast<size_t>(x)]) gaps.push_back(x);
  if (static_cast<int>(gaps.size()) != count)
    throw std::logic_error("cell_gaps: miscounted degree gaps");
  return gaps;
}

// Affine coordinates of a space within its cell: one scalar per box of the
// shape, row i holding shape_i entries. `dim` records the dimension of the
// space the coordinates describe, which may exceed the number of rows.
template <class S>
struct CanonicalCoords {
  Partition shape;
  size_t dim = 0;
  std::vector<std::vector<S>> entries;

  friend bool operator==(const CanonicalCoords& a, const CanonicalCoords& b) {
    return a.shape == b.shape && a.dim == b.dim && a.entries == b.entries;
  }
  friend bool operator!=(const CanonicalCoords& a, const CanonicalCoords& b) { return !(a == b); }
};

// Entry-wise comparison with relative tolerance.
inline bool coords_close(const CanonicalCoords<BigComplex>& a, const CanonicalCoords<BigComplex>& b,
                         const BigFloat& tol) {
  if (a.shape != b.shape || a.dim != b.dim || a.entries.size() != b.entries.size()) return false;
  for (size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i].size() != b.entries[i].size()) return false;
    for (size_t j = 0; j < a.entries[i].size(); ++j) {
      BigFloat scale = max(BigFloat(1), max(a.entries[i][j].abs(), b.entries[i][j].abs()));
      if ((a.entries[i][j] - b.entries[i][j]).abs() > tol * scale) return false;
    }
  }
  return true;
}

// Read the coordinates off the canonical monic basis: the coordinate at box
// (i, j) is a signed factorial rescaling of the coefficient of the j-th gap
// power in the i-th basis element.
template <class S>
CanonicalCoords<S> canonical_coords(const PolySubspace<S>& v) {
  CanonicalCoords<S> c;
  c.dim = v.dim();
  c.shape = schubert_type(v.degrees());
  const std::vector<int> degrees = cell_degrees(c.shape, c.dim);
  const std::vector<int> gaps = cell_gaps(c.shape, c.dim);
  c.entries.resize(c.shape.rows());
  for (size_t i = 0; i < c.shape.rows(); ++i) {
    for (size_t j = 0; j < static_cast<size_t>(c.shape.part(i)); ++j) {
      const int d = degrees[i];
      const int e = gaps[j];
      S val = detail::scalar_of<S>(detail::factorial_quotient(e, d)) * v.basis()[i].coeff(e);
      if (detail::coordinate_sign(c.dim, i + 1, j + 1, e) < 0) val = -val;
      c.entries[i].push_back(std::move(val));
    }
  }
  return c;
}

// The canonical monic basis of the space with these coordinates.
template <class S>
std::vector<Poly<S>> canonical_basis(const CanonicalCoords<S>& c) {
  if (c.shape.rows() > c.dim)
    throw std::invalid_argument("canonical_basis: shape has more rows than the dimension");
  if (c.entries.size() != c.shape.rows())
    throw std::invalid_argument("canonical_basis: row count does not match the shape");
  const std::vector<int> degrees = cell_degrees(c.shape, c.dim);
  const std::vector<int> gaps = cell_gaps(c.shape, c.dim);
  std::vector<Poly<S>> out;
  out.reserve(c.dim);
  for (size_t i = 0; i < c.dim; ++i) {
    const int d = degrees[i];
    std::vector<S> coeffs(static_cast<size_t>(d) + 1, S());
    coeffs[static_cast<size_t>(d)] = detail::scalar_of<S>(Rat(1));
    if (i < c.shape.rows()) {
      if (c.entries[i].size() != static_cast<size_t>(c.shape.part(i)))
        throw std::invalid_argument("canonical_basis: row length does not match the shape");
      for (size_t j = 0; j < c.entries[i].size(); ++j) {
        const int e = gaps[j];
        S val = detail::scalar_of<S>(detail::factorial_quotient(d, e)) * c.entries[i][j];
        if (detail::coordinate_sign(c.dim, i + 1, j + 1, e) < 0) val = -val;
        coeffs[static_cast<size_t>(e)] = std::move(val);
      }
    }
    out.push_back(Poly<S>(std::move(coeffs)));
  }
  return out;
}

template <class S>
PolySubspace<S> coords_to_subspace(const CanonicalCoords<S>& c, const BigFloat& tol = BigFloat()) {
  std::vector<Poly<S>> gens = canonical_basis(c);
  if constexpr (std::is_same_v<S, Rat>) {
    (void)tol;
    return PolySubspace<S>::from_span(std::move(gens));
  } else {
    return PolySubspace<S>::from_span(std::move(gens), tol);
  }
}

// Transposition duality on cell coordinates: the dual shape is the
// conjugate and the entry at box (i, j) moves to box (j, i). Defined only
// when the first part does not exceed the dimension, so the conjugate
// shape still fits into `dim` rows.
template <class S>
CanonicalCoords<S> grassmann_dual(const CanonicalCoords<S>& c) {
  if (static_cast<size_t>(c.shape.part(0)) > c.dim)
    throw std::invalid_argument("grassmann_dual: first part exceeds the space dimension");
  CanonicalCoords<S> d;
  d.dim = c.dim;
  d.shape = c.shape.conjugate();
  d.entries.resize(d.shape.rows());
  for (size_t i = 0; i < d.shape.rows(); ++i)
    for (size_t j = 0; j < static_cast<size_t>(d.shape.part(i)); ++j)
      d.entries[i].push_back(c.entries[j][i]);
  return d;
}

// The unique operator annihilating the space whose coefficients are
// polynomials with monic top: the coefficient at the j-th derivative is the
// signed maximal minor of the derivative matrix of the canonical basis,
// scaled so the top coefficient is the monic Wronskian.
template <class S>
DiffOp<Poly<S>> normalized_fundamental_operator(const PolySubspace<S>& v) {
  const size_t m = v.dim();
  if (m == 0)
    throw std::invalid_argument("normalized_fundamental_operator: zero-dimensional space");
  Matrix<Poly<S>> rows(m, m + 1);
  for (size_t i = 0; i < m; ++i) {
    Poly<S> f = v.basis()[i];
    for (size_t j = 0; j <= m; ++j) {
      rows.at(i, j) = f;
      f = f.derivative();
    }
  }
  std::vector<Poly<S>> minors(m + 1);
  for (size_t j = 0; j <= m; ++j) {
    std::vector<size_t> cols;
    for (size_t t = 0; t <= m; ++t)
      if (t != j) cols.push_back(t);
    minors[j] = determinant(rows.select_columns(cols));
  }
  if (minors[m].degree() < 0)
    throw std::domain_error("normalized_fundamental_operator: linearly dependent basis");
  const S inv_lc = detail::scalar_of<S>(Rat(1)) / minors[m].leading();
  std::vector<Poly<S>> coeffs(m + 1);
  for (size_t j = 0; j <= m; ++j) {
    Poly<S> c = inv_lc * minors[j];
    if ((m + j) % 2 != 0) c = -c;
    coeffs[j] = std::move(c);
  }
  return DiffOp<Poly<S>>::from_coeffs(std::move(coeffs));
}

// Strip an operator with rational-function coefficients down to polynomial
// coefficients, refusing anything with a genuine denominator.
template <class S>
DiffOp<Poly<S>> require_polynomial(const DiffOp<RatFunc<S>>& op) {
  std::vector<Poly<S>> cs;
  for (int j = 0; j <= op.order(); ++j) {
    if (!op.coeff(static_cast<size_t>(j)).is_polynomial())
      throw std::invalid_argument("require_polynomial: non-polynomial coefficient");
    cs.push_back(op.coeff(static_cast<size_t>(j)).as_polynomial());
  }
  return DiffOp<Poly<S>>::from_coeffs(std::move(cs));
}

// Read cell coordinates off an operator with polynomial coefficients whose
// kernel lies in the cell of the given shape. The operator is normalized so
// its top coefficient is monic; its polynomial kernel is then recovered and
// the coordinates are read off the kernel's canonical monic basis. An
// operator whose kernel does not have full order dimension, or whose kernel
// lies in a different cell, does not describe a point of this cell and
// raises logic_error.
template <class S>
CanonicalCoords<S> upsilon_map(const Partition& shape, const DiffOp<Poly<S>>& op,
                               const BigFloat& tol = BigFloat()) {
  const int n = op.order();
  if (n <= 0) throw std::invalid_argument("upsilon_map: operator must have positive order");
  if (shape.rows() > static_cast<size_t>(n))
    throw std::invalid_argument("upsilon_map: shape has more rows than the operator order");
  const Poly<S>& top = op.coeff(static_cast<size_t>(n));
  if (top.degree() != shape.size())
    throw std::invalid_argument("upsilon_map: top coefficient degree does not match the shape");
  const S inv_lc = detail::scalar_of<S>(Rat(1)) / top.leading();
  std::vector<Poly<S>> cs;
  cs.reserve(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    Poly<S> c = inv_lc * op.coeff(static_cast<size_t>(j));
    if (c.degree() > shape.size() - n + j)
      throw std::invalid_argument("upsilon_map: coefficient degree too large for the cell");
    cs.push_back(std::move(c));
  }
  const DiffOp<Poly<S>> psi = DiffOp<Poly<S>>::from_coeffs(std::move(cs));

  // Kernel elements in this cell have degree at most shape_1 + n - 1.
  const int bound = shape.part(0) + n - 1;
  const DiffOp<RatFunc<S>> lifted =
      psi.map_coeffs([](const Poly<S>& c) { return RatFunc<S>(c); });
  PolySubspace<S> v;
  if constexpr (std::is_same_v<S, Rat>) {
    v = PolySubspace<S>::from_span(poly_kernel(lifted, bound).basis);
  } else {
    v = PolySubspace<S>::from_span(poly_kernel(lifted, bound, tol).basis, tol);
  }
  if (static_cast<int>(v.dim()) != n || schubert_type_of(v) != shape)
    throw std::logic_error("upsilon_map: coordinate system is singular at this operator");
  return canonical_coords(v);
}

// Transport an operator through transposition duality: read off its cell
// coordinates, transpose them onto the conjugate shape, and return the
// normalized fundamental operator of the rebuilt space.
template <class S>
DiffOp<Poly<S>> theta_map(const Partition& shape, const DiffOp<Poly<S>>& op,
                          const BigFloat& tol = BigFloat()) {
  CanonicalCoords<S> coords = upsilon_map(shape, op, tol);
  return normalized_fundamental_operator(coords_to_subspace(grassmann_dual(coords), tol));
}

// Alternating diagonal coefficients of an operator with polynomial
// coefficients: entry k is (-1)^(n-k) times the coefficient of the k-th
// power in the k-th derivative's coefficient, and the vector is scaled so
// its last (numerically) nonzero entry is one.
template <class S>
std::vector<S> indicial_vector(const DiffOp<Poly<S>>& op, const BigFloat& tol = BigFloat()) {
  const int n = op.order();
  if (n < 0) throw std::invalid_argument("indicial_vector: zero operator");
  std::vector<S> ind;
  ind.reserve(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    S c = op.coeff(static_cast<size_t>(k)).coeff(k);
    if ((n - k) % 2 != 0) c = -c;
    ind.push_back(std::move(c));
  }
  int last = -1;
  if constexpr (std::is_same_v<S, Rat>) {
    (void)tol;
    for (int k = n; k >= 0; --k)
      if (!is_zero(ind[static_cast<size_t>(k)])) {
        last = k;
        break;
      }
  } else {
    BigFloat maxabs(0);
    for (const S& x : ind) maxabs = max(maxabs, x.abs());
    for (int k = n; k >= 0; --k)
      if (ind[static_cast<size_t>(k)].abs() > tol * maxabs &&
          !ind[static_cast<size_t>(k)].is_zero()) {
        last = k;
        break;
      }
  }
  if (last < 0) throw std::domain_error("indicial_vector: identically zero diagonal");
  const S pivot = ind[static_cast<size_t>(last)];
  for (S& x : ind) x = x / pivot;
  return ind;
}

// Non-negative integer roots of the indicial equation built from such a
// vector, found by direct trial up to max_exponent: x is a root when the
// falling-factorial combination of the entries vanishes at x.
template <class S>
std::vector<long> indicial_roots(const std::vector<S>& ind, long max_exponent,
                                 const BigFloat& tol = BigFloat()) {
  if (ind.empty()) throw std::invalid_argument("indicial_roots: empty vector");
  const int n = static_cast<int>(ind.size()) - 1;
  std::vector<long> roots;
  for (long x = 0; x <= max_exponent; ++x) {
    S acc = S();
    S falling = detail::scalar_of<S>(Rat(1));
    BigFloat scale(1);
    for (int k = 0; k <= n; ++k) {
      S term = ind[static_cast<size_t>(k)] * falling;
      if ((n - k) % 2 != 0) term = -term;
      acc = acc + term;
      if constexpr (!std::is_same_v<S, Rat>) scale = max(scale, term.abs());
      falling = falling * detail::scalar_of<S>(Rat(x - k));
    }
    if constexpr (std::is_same_v<S, Rat>) {
      if (is_zero(acc)) roots.push_back(x);
    } else {
      if (acc.abs() <= tol * scale) roots.push_back(x);
    }
  }
  return roots;
}

}  // namespace gaudin
