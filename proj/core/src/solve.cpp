#include "gaudin/solve.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "gaudin/irrep.hpp"
#include "gaudin/schubert.hpp"

namespace gaudin {

namespace {

const BigComplex& eigenvalue_at(const EigenspaceRecord& rec, Sign sign, int k, int l) {
  auto it = rec.eigenvalues.find(GeneratorKey{sign, k, l});
  if (it == rec.eigenvalues.end())
    throw std::logic_error("eigenspace record is missing a generator eigenvalue");
  return it->second;
}

bool value_close(const BigComplex& a, const BigComplex& b, const BigFloat& tol) {
  BigFloat scale = max(BigFloat(1), max(a.abs(), b.abs()));
  return (a - b).abs() <= tol * scale;
}

// Row j of Pascal's triangle: C(j, 0..j).
std::vector<long> binomial_row(int j) {
  std::vector<long> row{1};
  for (int i = 0; i < j; ++i) {
    std::vector<long> next(row.size() + 1, 1);
    for (size_t t = 1; t < row.size(); ++t) next[t] = row[t - 1] + row[t];
    row = std::move(next);
  }
  return row;
}

// Numerators of the successive derivatives of seed / w^p: the m-th
// derivative equals num[m] / w^(p+m), with num[0] = seed and
// num[m+1] = num[m]' * w - (p + m) * num[m] * w'.
std::vector<PolyC> scaled_derivative_numerators(const PolyC& seed, const PolyC& w, int p,
                                                int count) {
  std::vector<PolyC> num(static_cast<size_t>(count) + 1);
  num[0] = seed;
  const PolyC wp = w.derivative();
  for (int m = 0; m < count; ++m)
    num[static_cast<size_t>(m) + 1] =
        num[static_cast<size_t>(m)].derivative() * w -
        BigComplex(p + m) * num[static_cast<size_t>(m)] * wp;
  return num;
}

// w^(n+p) * sum_k d^(n-k) (lambda_k(u) * w^(-p) * .), expanded by the
// Leibniz rule into polynomial coefficients (derivative powers act on the
// left of the eigenvalue polynomials). Keeping the coefficients polynomial
// (instead of composing rational functions, whose unreduced denominators
// compound under differentiation) keeps the kernel system small and well
// scaled.
DiffOp<PolyC> composed_with_inverse_power(const BetheConfig& cfg, const EigenspaceRecord& rec,
                                          int p) {
  const int n = static_cast<int>(cfg.n());
  const PolyC w = cfg.w_numeric();
  std::vector<PolyC> wpow(static_cast<size_t>(n) + 1);
  wpow[0] = PolyC(1);
  for (int i = 1; i <= n; ++i)
    wpow[static_cast<size_t>(i)] = wpow[static_cast<size_t>(i) - 1] * w;
  std::vector<PolyC> coeffs(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const int j = n - k;
    const std::vector<long> binom = binomial_row(j);
    // d^j (lambda_k f / w^p) contributes C(j, m) * (lambda_k/w^p)^(m) * f^(j-m);
    // multiplying the whole operator by w^(n+p) turns the denominator
    // w^(p+m) of the m-th derivative into the factor w^(n-m).
    const std::vector<PolyC> dnum = scaled_derivative_numerators(
        eigenvalue_polynomial(cfg, rec, k, Sign::plus), w, p, j);
    for (int m = 0; m <= j; ++m) {
      PolyC term = dnum[static_cast<size_t>(m)] * wpow[static_cast<size_t>(n - m)];
      coeffs[static_cast<size_t>(j - m)] +=
          BigComplex(binom[static_cast<size_t>(m)]) * term;
    }
  }
  return DiffOp<PolyC>::from_coeffs(std::move(coeffs));
}

}  // namespace

PolyC eigenvalue_polynomial(const BetheConfig& cfg, const EigenspaceRecord& rec, int k,
                            Sign sign) {
  const int n = static_cast<int>(cfg.n());
  if (k < 0 || k > n) throw std::invalid_argument("eigenvalue_polynomial: index out of range");
  std::vector<BigComplex> coeffs(static_cast<size_t>(n - k) + 1);
  for (int l = 0; l <= n - k; ++l)
    coeffs[static_cast<size_t>(n - k - l)] = eigenvalue_at(rec, sign, k, l);
  return PolyC(std::move(coeffs));
}

DiffOp<PolyC> monic_lowering_restriction(const BetheConfig& cfg, const EigenspaceRecord& rec) {
  const int n = static_cast<int>(cfg.n());
  std::vector<PolyC> coeffs(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    PolyC lam = eigenvalue_polynomial(cfg, rec, k, Sign::minus);
    coeffs[static_cast<size_t>(n - k)] = (k % 2 == 1) ? -lam : lam;
  }
  return DiffOp<PolyC>::from_coeffs(std::move(coeffs));
}

DiffOp<RatFuncC> lowering_restriction(const BetheConfig& cfg, const EigenspaceRecord& rec) {
  const PolyC w = cfg.w_numeric();
  return monic_lowering_restriction(cfg, rec).map_coeffs(
      [&](const PolyC& c) { return RatFuncC(c, w); });
}

DiffOp<RatFuncC> raising_restriction(const BetheConfig& cfg, const EigenspaceRecord& rec) {
  const int n = static_cast<int>(cfg.n());
  const PolyC w = cfg.w_numeric();
  PolyC den(1);
  for (int i = 0; i <= n; ++i) den = den * w;
  // Present every coefficient over the uniform denominator w^(n+1), so that
  // later denominator clearing divides exactly.
  return composed_with_inverse_power(cfg, rec, 1).map_coeffs([&](const PolyC& c) {
    return c.is_zero() ? RatFuncC() : RatFuncC(c, den);
  });
}

DiffOp<RatFuncC> scaled_raising_restriction(const BetheConfig& cfg, const EigenspaceRecord& rec) {
  return composed_with_inverse_power(cfg, rec, 2).map_coeffs(
      [](const PolyC& c) { return RatFuncC(c); });
}

size_t SolveResult::total_multiplicity() const {
  size_t t = 0;
  for (const auto& s : solutions) t += s.multiplicity;
  return t;
}

size_t SolveResult::count_of_shape(const Partition& shape) const {
  size_t t = 0;
  for (const auto& s : solutions)
    if (s.shape == shape) t += s.multiplicity;
  return t;
}

SolveResult solve_inverse_wronskian(const BetheConfig& cfg, const SolveOptions& opt) {
  PrecisionScope scope(cfg.precision_bits());
  const int n = static_cast<int>(cfg.n());
  const BigFloat tol = opt.tolerance.is_zero() ? cfg.default_tolerance() : opt.tolerance;
  const BigFloat gtol =
      opt.grouping_tolerance.is_zero() ? cfg.default_grouping_tolerance() : opt.grouping_tolerance;
  const PolyC w = cfg.w_numeric();

  SolveResult res;
  for (const Partition& shape : partitions_of(n)) {
    IrrepModel model(shape);
    EigenspaceAnalysis an = simultaneous_eigenspaces(model, cfg, opt.seed, tol, gtol);
    if (an.ill_conditioned) res.ill_conditioned = true;
    if (an.defective) {
      res.defective = true;
      res.diagnostic += shape.to_string() + ": " + an.diagnostic + "; ";
      continue;
    }
    for (const EigenspaceRecord& rec : an.records) {
      SolutionRecord s;
      s.shape = shape;
      s.eigenvalues = rec.eigenvalues;
      s.multiplicity = rec.multiplicity;
      s.monic_lowering = monic_lowering_restriction(cfg, rec);
      std::ostringstream issues;

      PolyKernel<BigComplex> pk = poly_kernel(lowering_restriction(cfg, rec), 2 * n - 1, tol);
      s.kernel_ill_conditioned = pk.ill_conditioned;
      s.kernel = PolySubspaceC::from_span(pk.basis, tol);
      if (static_cast<int>(s.kernel.dim()) != n) {
        issues << "kernel dimension " << s.kernel.dim() << " instead of " << n << "; ";
      } else {
        if (schubert_type_of(s.kernel) != shape)
          issues << "kernel degree type " << schubert_type_of(s.kernel).to_string()
                 << " does not match the module shape; ";
        PolyC wr = clip_small(wronskian(s.kernel.basis()), tol);
        if (wr.degree() < 0 || !poly_close(wr.monic(), w, tol))
          issues << "kernel Wronskian does not match the root product; ";
      }

      PolyKernel<BigComplex> dk = poly_kernel(scaled_raising_restriction(cfg, rec), 2 * n, tol);
      s.kernel_ill_conditioned = s.kernel_ill_conditioned || dk.ill_conditioned;
      s.scaled_dual_kernel = PolySubspaceC::from_span(dk.basis, tol);
      if (static_cast<int>(s.scaled_dual_kernel.dim()) != n) {
        issues << "dual kernel dimension " << s.scaled_dual_kernel.dim() << " instead of " << n
               << "; ";
      } else {
        PolyC target(1);
        for (int t = 0; t < n - 1; ++t) target = target * w;
        PolyC wr = clip_small(wronskian(s.scaled_dual_kernel.basis()), tol);
        if (wr.degree() < 0 || !poly_close(wr.monic(), target, tol))
          issues << "dual kernel Wronskian is not the expected power of the root product; ";
        if (schubert_type_of(s.scaled_dual_kernel).part(0) > n)
          issues << "dual kernel type overflows the ambient rectangle; ";
      }

      s.issues = issues.str();
      if (s.kernel_ill_conditioned) res.ill_conditioned = true;
      res.solutions.push_back(std::move(s));
    }
  }

  // Merge records of the same shape whose kernels coincide numerically; a
  // genuinely degenerate configuration can produce them.
  for (size_t i = 0; i < res.solutions.size(); ++i) {
    for (size_t j = res.solutions.size(); j-- > i + 1;) {
      if (res.solutions[i].shape != res.solutions[j].shape) continue;
      if (res.solutions[i].kernel.dim() == 0 || res.solutions[j].kernel.dim() == 0) continue;
      if (res.solutions[i].kernel.approx_equals(res.solutions[j].kernel, tol)) {
        res.solutions[i].multiplicity += res.solutions[j].multiplicity;
        res.diagnostic += "merged duplicate kernels on " + res.solutions[i].shape.to_string() + "; ";
        res.solutions.erase(res.solutions.begin() + static_cast<long>(j));
      }
    }
  }
  return res;
}

BigFloat spectrum_imaginary_magnitude(const SolveResult& r) {
  BigFloat m(0);
  for (const auto& s : r.solutions)
    for (const auto& [key, value] : s.eigenvalues) {
      BigFloat a = value.im();
      if (a.sign() < 0) a = -a;
      m = max(m, a);
    }
  return m;
}

DualPairing pair_dual_solutions(const BetheConfig& cfg, const SolveResult& r,
                                const BigFloat& tol) {
  PrecisionScope scope(cfg.precision_bits());
  const int n = static_cast<int>(cfg.n());
  DualPairing out;
  out.partner.assign(r.solutions.size(), -1);
  if (r.defective) {
    out.diagnostic = "solve result is defective";
    return out;
  }

  std::ostringstream diag;
  bool spectra = true;
  for (size_t i = 0; i < r.solutions.size(); ++i) {
    const Partition conj = r.solutions[i].shape.conjugate();
    long found = -1;
    bool unique = true;
    for (size_t j = 0; j < r.solutions.size(); ++j) {
      if (r.solutions[j].shape != conj) continue;
      bool match = true;
      for (int k = 0; match && k <= n; ++k)
        for (int l = 0; match && k + l <= n; ++l) {
          const BigComplex& plus_i =
              r.solutions[i].eigenvalues.at(GeneratorKey{Sign::plus, k, l});
          const BigComplex& minus_j =
              r.solutions[j].eigenvalues.at(GeneratorKey{Sign::minus, k, l});
          if (!value_close(plus_i, minus_j, tol)) match = false;
        }
      if (!match) continue;
      if (found >= 0) unique = false;
      found = static_cast<long>(j);
    }
    if (found < 0) {
      diag << "solution " << i << " has no dual partner; ";
      spectra = false;
    } else if (!unique) {
      diag << "solution " << i << " has several dual partners; ";
      spectra = false;
    }
    out.partner[i] = found;
  }
  if (spectra) {
    for (size_t i = 0; i < r.solutions.size(); ++i) {
      const long j = out.partner[i];
      if (j < 0 || out.partner[static_cast<size_t>(j)] != static_cast<long>(i)) {
        diag << "pairing is not an involution at solution " << i << "; ";
        spectra = false;
      }
    }
  }
  out.spectra_matched = spectra;

  if (spectra) {
    bool kernels = true;
    bool operators = true;
    for (size_t i = 0; i < r.solutions.size(); ++i) {
      const SolutionRecord& a = r.solutions[i];
      const SolutionRecord& b = r.solutions[static_cast<size_t>(out.partner[i])];
      try {
        CanonicalCoords<BigComplex> coords = canonical_coords(a.kernel);
        PolySubspaceC dual = coords_to_subspace(grassmann_dual(coords), tol);
        if (!dual.approx_equals(b.kernel, tol)) {
          kernels = false;
          diag << "kernel of solution " << out.partner[i]
               << " is not the coordinate dual of solution " << i << "; ";
        }
        DiffOp<PolyC> transported = theta_map(a.shape, a.monic_lowering, tol);
        bool ops_ok = transported.order() == b.monic_lowering.order();
        for (int k = 0; ops_ok && k <= transported.order(); ++k)
          if (!poly_close(transported.coeff(static_cast<size_t>(k)),
                          b.monic_lowering.coeff(static_cast<size_t>(k)), tol))
            ops_ok = false;
        if (!ops_ok) {
          operators = false;
          diag << "transported operator of solution " << i << " does not match solution "
               << out.partner[i] << "; ";
        }
      } catch (const std::exception& e) {
        kernels = false;
        operators = false;
        diag << "duality transport failed at solution " << i << ": " << e.what() << "; ";
      }
    }
    out.kernels_matched = kernels;
    out.operators_matched = operators;
  }
  out.diagnostic = diag.str();
  return out;
}

}  // namespace gaudin
