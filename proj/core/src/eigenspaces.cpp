#include "gaudin/eigenspaces.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

#include "gaudin/linalg.hpp"
#include "gaudin/perm.hpp"

namespace gaudin {

namespace {

Matrix<BigComplex> scaled_promote(const Matrix<Rat>& m, const BigComplex& scale,
                                  mpfr_prec_t prec) {
  Matrix<BigComplex> r(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      if (!is_zero(m.at(i, j))) r.at(i, j) = scale * BigComplex::from_rat(m.at(i, j), prec);
    }
  return r;
}

Matrix<BigComplex> add(const Matrix<BigComplex>& a, const Matrix<BigComplex>& b) {
  Matrix<BigComplex> r(a.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

// Trace of B^H * (G B): estimate of m * eigenvalue on the span of B's
// orthonormal columns.
BigComplex projected_trace(const std::vector<std::vector<BigComplex>>& basis,
                           const std::vector<std::vector<BigComplex>>& image) {
  BigComplex tr;
  for (size_t c = 0; c < basis.size(); ++c)
    for (size_t i = 0; i < basis[c].size(); ++i) tr += basis[c][i].conj() * image[c][i];
  return tr;
}

}  // namespace

std::vector<GeneratorKey> generator_keys(size_t n) {
  std::vector<GeneratorKey> keys;
  for (Sign s : {Sign::minus, Sign::plus})
    for (int k = 0; k <= static_cast<int>(n); ++k)
      for (int l = 0; k + l <= static_cast<int>(n); ++l) keys.push_back({s, k, l});
  return keys;
}

Matrix<BigComplex> generator_matrix(const IrrepModel& model, const BetheConfig& cfg, int k, int l,
                                    Sign sign) {
  const size_t n = cfg.n();
  if (model.letters() != n) throw std::invalid_argument("generator_matrix: rank mismatch");
  const mpfr_prec_t prec = cfg.precision_bits();
  const std::vector<BigComplex> z = cfg.z_numeric();
  Matrix<BigComplex> out(model.dim(), model.dim());
  if (k < 0 || l < 0 || k + l > static_cast<int>(n)) return out;
  const uint32_t full = full_mask(n);
  for (uint32_t x : k_subsets_of(full, k)) {
    Matrix<Rat> sym = model.act_on(set_symmetrizer<Rat>(n, x, sign));
    BigComplex weight = detail::elementary_symmetric<BigComplex>(z, full & ~x, l);
    out = add(out, scaled_promote(sym, weight, prec));
  }
  return out;
}

EigenspaceAnalysis simultaneous_eigenspaces(const IrrepModel& model, const BetheConfig& cfg,
                                            uint64_t seed, const BigFloat& tolerance,
                                            const BigFloat& grouping_tolerance) {
  const size_t n = cfg.n();
  const size_t d = model.dim();
  EigenspaceAnalysis out;
  out.shape = model.shape();

  const std::vector<GeneratorKey> keys = generator_keys(n);
  std::vector<Matrix<BigComplex>> mats;
  std::vector<BigFloat> mat_norms;
  mats.reserve(keys.size());
  for (const GeneratorKey& key : keys) {
    mats.push_back(generator_matrix(model, cfg, key.k, key.l, key.sign));
    mat_norms.push_back(entry_norm(mats.back()));
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(-9, 9);

  std::string last_diag;
  for (int attempt = 0; attempt < 5; ++attempt) {
    // Random integer combination of the non-scalar generators.
    Matrix<BigComplex> combo(d, d);
    for (size_t g = 0; g < keys.size(); ++g) {
      if (keys[g].k == 0) continue;  // scalar on the whole module
      const long r = pick(rng);
      if (r == 0) continue;
      Matrix<BigComplex> scaled(d, d);
      BigComplex factor(r, cfg.precision_bits());
      for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) scaled.at(i, j) = factor * mats[g].at(i, j);
      combo = add(combo, scaled);
    }

    EigResult eig;
    try {
      eig = eig_numeric(combo, grouping_tolerance);
    } catch (const std::exception& e) {
      last_diag = std::string("eigensolver: ") + e.what();
      continue;
    }
    if (eig.defective) {
      last_diag = "combination matrix defective: " + eig.diagnostic;
      continue;
    }

    // Validate each eigenspace of the combination against every generator.
    std::vector<EigenspaceRecord> records;
    bool valid = true;
    for (const Eigenpair& pair : eig.pairs) {
      EigenspaceRecord rec;
      rec.basis = pair.basis;
      rec.multiplicity = pair.multiplicity;
      const auto m = static_cast<long>(pair.basis.size());
      if (m == 0) {
        valid = false;
        last_diag = "empty eigenspace basis";
        break;
      }
      for (size_t g = 0; g < keys.size(); ++g) {
        std::vector<std::vector<BigComplex>> image;
        image.reserve(pair.basis.size());
        for (const auto& col : pair.basis) image.push_back(matvec(mats[g], col));
        BigComplex mu = projected_trace(pair.basis, image) / BigComplex(m);
        BigFloat resid(0);
        for (size_t c = 0; c < image.size(); ++c) {
          for (size_t i = 0; i < image[c].size(); ++i) {
            BigFloat dev = (image[c][i] - mu * pair.basis[c][i]).abs();
            resid = max(resid, dev);
          }
        }
        BigFloat scale = max(mat_norms[g], BigFloat(1));
        if (resid > tolerance * scale) {
          valid = false;
          last_diag = "eigenspace of the combination is not a joint eigenspace (residual " +
                      resid.to_string() + ")";
          break;
        }
        rec.eigenvalues.emplace(keys[g], mu);
      }
      if (!valid) break;
      records.push_back(std::move(rec));
    }
    if (!valid) continue;

    size_t total = 0;
    for (const auto& r : records) total += r.multiplicity;
    if (total != d) {
      last_diag = "eigenspace multiplicities do not fill the module";
      continue;
    }

    std::sort(records.begin(), records.end(),
              [](const EigenspaceRecord& a, const EigenspaceRecord& b) {
                auto ia = a.eigenvalues.begin();
                auto ib = b.eigenvalues.begin();
                for (; ia != a.eigenvalues.end() && ib != b.eigenvalues.end(); ++ia, ++ib) {
                  const BigComplex& x = ia->second;
                  const BigComplex& y = ib->second;
                  if (x.re() < y.re()) return true;
                  if (y.re() < x.re()) return false;
                  if (x.im() < y.im()) return true;
                  if (y.im() < x.im()) return false;
                }
                return false;
              });
    out.records = std::move(records);
    return out;
  }

  out.defective = true;
  out.diagnostic = last_diag.empty() ? "no valid splitting found" : last_diag;
  return out;
}

}  // namespace gaudin
