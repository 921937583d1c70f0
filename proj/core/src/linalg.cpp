#include "gaudin/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gaudin {

BigFloat entry_norm(const Matrix<BigComplex>& m) {
  BigFloat r(0);
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r = max(r, m.at(i, j).abs());
  return r;
}

std::vector<BigComplex> matvec(const Matrix<BigComplex>& m, const std::vector<BigComplex>& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matvec: shape mismatch");
  std::vector<BigComplex> r(m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r[i] += m.at(i, j) * v[j];
  return r;
}

BigFloat vec_norm(const std::vector<BigComplex>& v) {
  BigFloat r(0);
  for (const auto& x : v) r = max(r, x.abs());
  return r;
}

namespace {

// Machine-epsilon-like threshold a few bits above the working precision.
BigFloat eps_for(mpfr_prec_t prec, int slack_bits) {
  BigFloat one(1, prec);
  mpfr_mul_2si(one.raw(), one.raw(), -(prec - slack_bits), MPFR_RNDN);
  return one;
}

mpfr_prec_t matrix_prec(const Matrix<BigComplex>& m) {
  mpfr_prec_t p = MPFR_PREC_MIN;
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) p = std::max(p, m.at(i, j).prec());
  return std::max<mpfr_prec_t>(p, BigFloat::default_precision());
}

}  // namespace

NullspaceResult nullspace_numeric(const Matrix<BigComplex>& m, const BigFloat& tol) {
  const size_t rows = m.rows(), cols = m.cols();
  NullspaceResult out;
  if (cols == 0) return out;
  const mpfr_prec_t prec = matrix_prec(m);
  const BigFloat eps = eps_for(prec, 8);

  // One-sided Jacobi: orthogonalize column pairs of A, accumulating the
  // rotations in V. At convergence A = U*Sigma with V the right factor.
  Matrix<BigComplex> a = m;
  Matrix<BigComplex> v = Matrix<BigComplex>::identity(cols);

  auto col_dot = [&](const Matrix<BigComplex>& x, size_t p, size_t q) {
    BigComplex acc(0, prec);
    for (size_t i = 0; i < x.rows(); ++i) acc += x.at(i, p).conj() * x.at(i, q);
    return acc;
  };

  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool rotated = false;
    // Columns whose norm has collapsed to the roundoff floor (relative to
    // the largest column) are numerically zero: rotating a pair of them only
    // churns on noise, since the angle between noise columns stays O(1).
    BigFloat scale2(0, prec);
    for (size_t j = 0; j < cols; ++j) scale2 = max(scale2, col_dot(a, j, j).re());
    const BigFloat floor2 = eps * eps * scale2;
    for (size_t p = 0; p + 1 < cols; ++p) {
      for (size_t q = p + 1; q < cols; ++q) {
        BigComplex c = col_dot(a, p, q);
        BigFloat ca = c.abs();
        BigFloat na = col_dot(a, p, p).re();  // ||A_p||^2 (real, >= 0)
        BigFloat nb = col_dot(a, q, q).re();
        if (na <= floor2 || nb <= floor2) continue;
        if (ca * ca <= eps * eps * na * nb || ca.is_zero()) continue;
        rotated = true;
        // Phase e = c/|c| reduces the 2x2 Gram block to the real case.
        BigComplex e = c / BigComplex(ca);
        BigFloat tau = (nb - na) / (BigFloat(2) * ca);
        BigFloat root = (BigFloat(1) + tau * tau).sqrt();
        BigFloat t = tau.sign() >= 0 ? BigFloat(1) / (tau + root) : BigFloat(1) / (tau - root);
        BigFloat cs = BigFloat(1) / (BigFloat(1) + t * t).sqrt();
        BigFloat sn = t * cs;
        BigComplex csx(cs), snx(sn);
        BigComplex se = snx * e, sec = snx * e.conj();
        for (size_t i = 0; i < rows; ++i) {
          BigComplex ap = a.at(i, p), aq = a.at(i, q);
          a.at(i, p) = csx * ap - sec * aq;
          a.at(i, q) = se * ap + csx * aq;
        }
        for (size_t i = 0; i < cols; ++i) {
          BigComplex vp = v.at(i, p), vq = v.at(i, q);
          v.at(i, p) = csx * vp - sec * vq;
          v.at(i, q) = se * vp + csx * vq;
        }
      }
    }
    if (!rotated) break;
    if (sweep == max_sweeps - 1)
      throw std::runtime_error("nullspace_numeric: Jacobi sweep cap exceeded");
  }

  std::vector<std::pair<BigFloat, size_t>> sigma;
  sigma.reserve(cols);
  for (size_t j = 0; j < cols; ++j) {
    BigFloat s = col_dot(a, j, j).re();
    sigma.emplace_back(s.sign() > 0 ? s.sqrt() : BigFloat(0), j);
  }
  std::sort(sigma.begin(), sigma.end(),
            [](const auto& x, const auto& y) { return y.first < x.first; });

  const BigFloat smax = sigma.front().first;
  for (const auto& [s, j] : sigma) out.singular_values.push_back(s);

  BigFloat cut = tol * smax;
  for (const auto& [s, j] : sigma) {
    if (smax.is_zero() || s < cut) out.basis.push_back(v.col(j));
    if (!smax.is_zero() && !s.is_zero() && s >= cut / BigFloat(10) && s <= cut * BigFloat(10))
      out.ill_conditioned = true;
  }
  return out;
}

namespace {

// Unitary similarity reduction to upper Hessenberg form via Householder
// reflectors (entries below the first subdiagonal eliminated).
Matrix<BigComplex> hessenberg(Matrix<BigComplex> h, mpfr_prec_t prec) {
  const size_t n = h.rows();
  for (size_t k = 0; k + 2 < n; ++k) {
    // Build the reflector for column k, rows k+1..n-1.
    BigFloat norm(0, prec);
    for (size_t i = k + 1; i < n; ++i) norm = hypot(norm, h.at(i, k).abs());
    if (norm.is_zero()) continue;
    BigComplex x = h.at(k + 1, k);
    BigComplex alpha = x.is_zero() ? BigComplex(BigFloat(norm)) : (x / BigComplex(x.abs())) * BigComplex(norm);
    // v = x + alpha*e1 (choose sign to avoid cancellation: alpha aligned with x).
    std::vector<BigComplex> vvec(n - k - 1);
    vvec[0] = x + alpha;
    for (size_t i = k + 2; i < n; ++i) vvec[i - k - 1] = h.at(i, k);
    BigFloat vnorm2(0, prec);
    for (const auto& c : vvec) vnorm2 += c.abs() * c.abs();
    if (vnorm2.is_zero()) continue;
    BigComplex beta(BigFloat(2) / vnorm2);
    // H := P H P with P = I - beta v v^H (restricted to trailing block).
    // Left: rows k+1.., all cols.
    for (size_t j = 0; j < n; ++j) {
      BigComplex dot(0, prec);
      for (size_t i = 0; i < vvec.size(); ++i) dot += vvec[i].conj() * h.at(k + 1 + i, j);
      dot = beta * dot;
      for (size_t i = 0; i < vvec.size(); ++i) h.at(k + 1 + i, j) -= vvec[i] * dot;
    }
    // Right: all rows, cols k+1..
    for (size_t i = 0; i < n; ++i) {
      BigComplex dot(0, prec);
      for (size_t j = 0; j < vvec.size(); ++j) dot += h.at(i, k + 1 + j) * vvec[j];
      dot = beta * dot;
      for (size_t j = 0; j < vvec.size(); ++j) h.at(i, k + 1 + j) -= dot * vvec[j].conj();
    }
    // Entries below the subdiagonal in column k are now zero by construction.
    for (size_t i = k + 2; i < n; ++i) h.at(i, k) = BigComplex(0, prec);
  }
  return h;
}

// Eigenvalues of a 2x2 block, numerically safe enough at high precision.
std::pair<BigComplex, BigComplex> eig2(const BigComplex& a, const BigComplex& b,
                                       const BigComplex& c, const BigComplex& d) {
  BigComplex half(BigFloat(1) / BigFloat(2));
  BigComplex tr = a + d;
  BigComplex mid = tr * half;
  BigComplex disc = ((a - d) * half) * ((a - d) * half) + b * c;
  BigComplex root = disc.sqrt();
  BigComplex l1 = mid + root, l2 = mid - root;
  // Recompute the smaller root from the determinant when possible.
  BigComplex det = a * d - b * c;
  if (l1.abs() > l2.abs() && !l1.is_zero()) l2 = det / l1;
  else if (!l2.is_zero()) l1 = det / l2;
  return {l1, l2};
}

std::vector<BigComplex> qr_eigenvalues(Matrix<BigComplex> h, mpfr_prec_t prec) {
  const size_t n = h.rows();
  std::vector<BigComplex> ev;
  ev.reserve(n);
  if (n == 0) return ev;
  const BigFloat eps = eps_for(prec, 10);

  size_t hi = n;  // active window is [0, hi)
  int iter_since_deflate = 0;
  const int iter_cap = 300;
  while (hi > 0) {
    if (hi == 1) {
      ev.push_back(h.at(0, 0));
      break;
    }
    // Deflate any negligible subdiagonal inside the window.
    size_t lo = hi - 1;
    while (lo > 0) {
      BigFloat s = h.at(lo - 1, lo - 1).abs() + h.at(lo, lo).abs();
      if (s.is_zero()) s = BigFloat(1);
      if (h.at(lo, lo - 1).abs() <= eps * s) {
        h.at(lo, lo - 1) = BigComplex(0, prec);
        break;
      }
      --lo;
    }
    if (lo == hi - 1) {  // 1x1 converged at the bottom
      ev.push_back(h.at(hi - 1, hi - 1));
      --hi;
      iter_since_deflate = 0;
      continue;
    }
    if (lo == hi - 2) {  // 2x2 block: solve directly
      auto [l1, l2] = eig2(h.at(hi - 2, hi - 2), h.at(hi - 2, hi - 1),
                           h.at(hi - 1, hi - 2), h.at(hi - 1, hi - 1));
      ev.push_back(l1);
      ev.push_back(l2);
      hi -= 2;
      iter_since_deflate = 0;
      continue;
    }

    if (++iter_since_deflate > iter_cap)
      throw std::runtime_error("eig_numeric: QR iteration cap exceeded");

    // Wilkinson shift: eigenvalue of the trailing 2x2 closest to the corner.
    auto [l1, l2] = eig2(h.at(hi - 2, hi - 2), h.at(hi - 2, hi - 1),
                         h.at(hi - 1, hi - 2), h.at(hi - 1, hi - 1));
    BigComplex corner = h.at(hi - 1, hi - 1);
    BigComplex mu = (l1 - corner).abs() <= (l2 - corner).abs() ? l1 : l2;
    // Occasional exceptional shift breaks symmetry stalls.
    if (iter_since_deflate % 30 == 0 && iter_since_deflate > 0)
      mu = mu + BigComplex(BigFloat(1), BigFloat(1)) * BigComplex(h.at(hi - 1, hi - 2).abs());

    // Explicit shifted QR step on the window [lo, hi) via Givens rotations.
    for (size_t i = lo; i < hi; ++i) h.at(i, i) -= mu;
    struct Rot { BigFloat c; BigComplex s; size_t k; };
    std::vector<Rot> rots;
    for (size_t k = lo; k + 1 < hi; ++k) {
      BigComplex f = h.at(k, k), g = h.at(k + 1, k);
      if (g.is_zero()) {
        rots.push_back({BigFloat(1), BigComplex(0, prec), k});
        continue;
      }
      BigFloat r = hypot(f.abs(), g.abs());
      BigFloat c = f.abs() / r;
      BigComplex fs = f.is_zero() ? BigComplex(1, prec) : f / BigComplex(f.abs());
      BigComplex s = fs * g.conj() * BigComplex(BigFloat(1) / r);
      // Apply [c, s; -conj(s), c] from the left to rows k, k+1.
      for (size_t j = k; j < hi; ++j) {
        BigComplex hk = h.at(k, j), hk1 = h.at(k + 1, j);
        h.at(k, j) = BigComplex(c) * hk + s * hk1;
        h.at(k + 1, j) = BigComplex(c) * hk1 - s.conj() * hk;
      }
      h.at(k + 1, k) = BigComplex(0, prec);
      rots.push_back({c, s, k});
    }
    // Multiply the transposes back on the right: H := R Q + mu I.
    for (const auto& rot : rots) {
      size_t k = rot.k;
      size_t top = lo;  // column update touches rows lo..k+1
      for (size_t i = top; i <= k + 1 && i < hi; ++i) {
        BigComplex hk = h.at(i, k), hk1 = h.at(i, k + 1);
        h.at(i, k) = BigComplex(rot.c) * hk + rot.s.conj() * hk1;
        h.at(i, k + 1) = BigComplex(rot.c) * hk1 - rot.s * hk;
      }
    }
    for (size_t i = lo; i < hi; ++i) h.at(i, i) += mu;
  }
  return ev;
}

}  // namespace

EigResult eig_numeric(const Matrix<BigComplex>& m, const BigFloat& tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eig_numeric: non-square matrix");
  const size_t n = m.rows();
  EigResult out;
  if (n == 0) return out;
  const mpfr_prec_t prec = matrix_prec(m);

  Matrix<BigComplex> h = hessenberg(m, prec);
  std::vector<BigComplex> ev = qr_eigenvalues(std::move(h), prec);

  // Deterministic order, then greedy clustering within tol * scale.
  std::sort(ev.begin(), ev.end(), [](const BigComplex& x, const BigComplex& y) {
    if (x.re() != y.re()) return x.re() < y.re();
    return x.im() < y.im();
  });
  BigFloat scale(1);
  for (const auto& l : ev) scale = max(scale, l.abs());
  const BigFloat group_cut = tol * scale;

  std::vector<std::vector<BigComplex>> clusters;
  for (const auto& l : ev) {
    if (!clusters.empty()) {
      const BigComplex& last = clusters.back().back();
      if ((l - last).abs() <= group_cut) {
        clusters.back().push_back(l);
        continue;
      }
    }
    clusters.push_back({l});
  }

  for (const auto& cl : clusters) {
    BigComplex mean(0, prec);
    for (const auto& l : cl) mean += l;
    mean = mean / BigComplex(static_cast<long>(cl.size()), prec);
    Matrix<BigComplex> shifted = m;
    for (size_t i = 0; i < n; ++i) shifted.at(i, i) -= mean;
    NullspaceResult ns = nullspace_numeric(shifted, tol);
    Eigenpair pair;
    pair.value = mean;
    pair.multiplicity = cl.size();
    pair.basis = std::move(ns.basis);
    if (pair.basis.size() < cl.size()) {
      out.defective = true;
      out.diagnostic += "eigenvalue " + mean.to_string() + ": geometric " +
                        std::to_string(pair.basis.size()) + " < algebraic " +
                        std::to_string(cl.size()) + "; ";
    }
    out.pairs.push_back(std::move(pair));
  }
  return out;
}

}  // namespace gaudin
