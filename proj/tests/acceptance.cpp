// Acceptance gate: one line per criterion, exit status 0 only if every
// criterion passes. Tolerances are pinned here and nowhere else.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gaudin/bethe_config.hpp"
#include "gaudin/bethe_generators.hpp"
#include "gaudin/bethe_operators.hpp"
#include "gaudin/commute.hpp"
#include "gaudin/eigenspaces.hpp"
#include "gaudin/irrep.hpp"
#include "gaudin/linalg.hpp"
#include "gaudin/matrix.hpp"
#include "gaudin/partition.hpp"
#include "gaudin/perm.hpp"
#include "gaudin/poly.hpp"
#include "gaudin/sandwich.hpp"
#include "gaudin/schubert.hpp"
#include "gaudin/solve.hpp"
#include "gaudin/wronskian.hpp"

using namespace gaudin;

namespace {

constexpr mpfr_prec_t kBits = 256;

BigFloat tol40() { return BigFloat::pow10(-40, kBits); }
BigFloat tol30() { return BigFloat::pow10(-30, kBits); }
BigFloat tol25() { return BigFloat::pow10(-25, kBits); }

struct Check {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!note.str().empty()) note << "; ";
      note << what;
    }
  }
};

Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

PolyQ mono(long c, int d) { return PolyQ::monomial(Rat(c), d); }

PolySubspaceC lift(const std::vector<PolyQ>& basis, const BigFloat& tol) {
  return promote(PolySubspaceQ::from_span(basis), kBits, tol);
}

std::vector<Rat> random_distinct_points(size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<Rat> z;
  while (z.size() < n) {
    Rat cand = make_rat(num(rng), den(rng));
    bool fresh = true;
    for (const Rat& x : z) fresh = fresh && (x != cand);
    if (fresh) z.push_back(cand);
  }
  return z;
}

// A clean solve of a random configuration; regenerates the points a bounded
// number of times if a draw lands on a numerically unusable configuration.
bool random_clean_solve(size_t n, std::mt19937& rng, SolveResult& out, BetheConfig& cfg_out,
                        std::string& note) {
  for (int attempt = 0; attempt < 5; ++attempt) {
    BetheConfig cfg = BetheConfig::from_exact(random_distinct_points(n, rng), kBits);
    SolveResult r = solve_inverse_wronskian(cfg);
    bool clean = !r.defective && !r.ill_conditioned;
    for (const auto& s : r.solutions) clean = clean && s.issues.empty();
    if (clean) {
      out = std::move(r);
      cfg_out = cfg;
      if (attempt > 0) note += " (after " + std::to_string(attempt) + " regenerated draws)";
      return true;
    }
  }
  note += " (no clean configuration in 5 draws)";
  return false;
}

// ---- shared worked-example data -------------------------------------------

struct ExampleRun {
  BetheConfig cfg = BetheConfig::from_exact({Rat(0)});
  SolveResult result;
};

const ExampleRun& example_run() {
  static ExampleRun run = [] {
    PrecisionScope scope(kBits);
    BigFloat s3 = BigFloat::sqrt_of_long(3, kBits);
    ExampleRun er;
    er.cfg = BetheConfig::from_numeric(
        {BigComplex(s3), BigComplex(-s3), BigComplex(BigFloat(0, kBits))}, kBits);
    er.result = solve_inverse_wronskian(er.cfg);
    return er;
  }();
  return run;
}

long find_by_kernel(const SolveResult& r, const PolySubspaceC& v, const BigFloat& tol) {
  long found = -1;
  for (size_t i = 0; i < r.solutions.size(); ++i) {
    if (r.solutions[i].kernel.dim() == v.dim() && r.solutions[i].kernel.approx_equals(v, tol)) {
      if (found >= 0) return -2;
      found = static_cast<long>(i);
    }
  }
  return found;
}

// ---- criterion bodies ------------------------------------------------------

const std::vector<std::vector<std::vector<Rat>>>& tuple_battery() {
  static const std::vector<std::vector<std::vector<Rat>>> t = {
      {{Rat(0)}, {Rat(7)}, {make_rat(-2, 3)}},
      {{Rat(0), Rat(0)}, {Rat(1), Rat(-1)}, {make_rat(2, 3), Rat(5)}},
      {{Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(-2)}, {make_rat(1, 2), make_rat(-1, 3), Rat(4)}},
      {{Rat(0), Rat(0), Rat(0), Rat(0)},
       {Rat(1), Rat(1), Rat(-1), Rat(-1)},
       {make_rat(1, 2), Rat(2), Rat(-3), make_rat(1, 3)}}};
  return t;
}

void criterion_identity(Check& c) {
  auto start = std::chrono::steady_clock::now();
  int checked = 0;
  for (size_t n = 1; n <= 4; ++n) {
    for (const auto& z : tuple_battery()[n - 1]) {
      BetheConfig cfg = BetheConfig::from_exact(z, kBits);
      c.require(identity_defect(cfg).is_zero(),
                "nonzero defect at n=" + std::to_string(n) + " tuple " + std::to_string(checked));
      ++checked;
    }
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  c.note << checked << " configurations, exact, " << ms << " ms";
}

void criterion_example(Check& c) {
  PrecisionScope scope(kBits);
  const SolveResult& r = example_run().result;
  BigFloat t40 = tol40();

  c.require(r.solutions.size() == 4 && r.total_multiplicity() == 4,
            "expected exactly 4 solutions, got " + std::to_string(r.solutions.size()));
  if (r.solutions.size() != 4) return;

  PolyQ w = mono(1, 3) + mono(-3, 1);
  PolyQ minus_wp = mono(-3, 2) + PolyQ(3);

  PolySubspaceC va = lift({mono(1, 4) + mono(4, 3), mono(1, 2) + mono(-2, 1), PolyQ(1)}, t40);
  PolySubspaceC vb = lift({mono(1, 4) + mono(-4, 3), mono(1, 2) + mono(2, 1), PolyQ(1)}, t40);
  long ja = find_by_kernel(r, va, t40);
  long jb = find_by_kernel(r, vb, t40);
  c.require(ja >= 0 && jb >= 0, "pinned two-row kernels not found at 1e-40");
  if (ja < 0 || jb < 0) return;

  auto coords_match = [&](long idx, const std::vector<std::vector<Rat>>& rows) {
    CanonicalCoords<BigComplex> want;
    want.shape = Partition({2, 1});
    want.dim = 3;
    for (const auto& row : rows) {
      std::vector<BigComplex> lifted;
      for (const Rat& x : row) lifted.push_back(promote(x, kBits));
      want.entries.push_back(std::move(lifted));
    }
    return coords_close(canonical_coords(r.solutions[static_cast<size_t>(idx)].kernel), want, t40);
  };
  c.require(coords_match(ja, {{Rat(0), Rat(1)}, {Rat(-1)}}), "coefficients of first two-row kernel");
  c.require(coords_match(jb, {{Rat(0), Rat(-1)}, {Rat(1)}}), "coefficients of second two-row kernel");

  auto op_match = [&](long idx, const std::vector<PolyQ>& coeffs) {
    const DiffOp<PolyC>& op = r.solutions[static_cast<size_t>(idx)].monic_lowering;
    if (op.order() != 3) return false;
    for (size_t j = 0; j < coeffs.size(); ++j)
      if (!poly_close(op.coeff(j), promote(coeffs[j], kBits), t40)) return false;
    return true;
  };
  c.require(op_match(ja, {PolyQ(), mono(3, 1) + PolyQ(3), minus_wp, w}),
            "scaled operator of first two-row solution");
  c.require(op_match(jb, {PolyQ(), mono(3, 1) + PolyQ(-3), minus_wp, w}),
            "scaled operator of second two-row solution");

  IrrepModel m21(Partition({2, 1}));
  Matrix<BigComplex> ga = generator_matrix(m21, example_run().cfg, 2, 0, Sign::minus);
  Matrix<BigComplex> gb = generator_matrix(m21, example_run().cfg, 2, 1, Sign::minus);
  Matrix<PolyC> pencil(2, 2);
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j)
      pencil.at(i, j) = PolyC::monomial(ga.at(i, j), 1) + PolyC(gb.at(i, j));
  PolyC trace = pencil.at(0, 0) + pencil.at(1, 1);
  // Characteristic polynomial (x - 3u)^2 - 9 means trace 6u, determinant 9u^2 - 9.
  c.require(poly_close(trace, promote(mono(6, 1), kBits), t40), "pencil trace");
  c.require(poly_close(determinant(pencil), promote(mono(9, 2) + PolyQ(-9), kBits), t40),
            "pencil determinant");
  c.note << "4 solutions at " << kBits << " bits, pins at 1e-40";
}

void criterion_commutativity(Check& c) {
  long pairs = 0;
  for (size_t n = 1; n <= 4; ++n) {
    for (const auto& z : tuple_battery()[n - 1]) {
      BetheConfig cfg = BetheConfig::from_exact(z, kBits);
      std::vector<GroupElemQ> gens;
      for (Sign s : {Sign::minus, Sign::plus})
        for (int k = 0; k <= static_cast<int>(n); ++k)
          for (int l = 0; k + l <= static_cast<int>(n); ++l)
            gens.push_back(bethe_generator<Rat>(cfg, k, l, s));
      for (size_t i = 0; i < gens.size(); ++i) {
        for (size_t j = i + 1; j < gens.size(); ++j) {
          ++pairs;
          if ((gens[i] * gens[j] - gens[j] * gens[i]).is_zero()) continue;
          c.require(false, "commutator nonzero at n=" + std::to_string(n));
          return;
        }
      }
    }
  }
  c.note << pairs << " generator pairs (both families, mixed included), exact";
}

void criterion_expansion(Check& c) {
  long vanish = 0;
  for (size_t n = 1; n <= 3; ++n) {
    for (const auto& z : tuple_battery()[n - 1]) {
      for (const SupportedPerm& sp : all_supported_perms(n)) {
        if (sp.z == 0) continue;
        c.require(expansion_coefficient_operator(z, sp).is_zero(),
                  "coefficient operator nonzero at n=" + std::to_string(n));
        ++vanish;
      }
    }
  }
  std::mt19937 rng(0xACCE0004u);
  std::uniform_int_distribution<uint32_t> mask_dist(1, full_mask(4));
  for (int s = 0; s < 200; ++s) {
    std::vector<Rat> z = random_distinct_points(4, rng);
    uint32_t zmask = mask_dist(rng);
    std::vector<Perm> perms = perms_moving_within(4, zmask);
    std::uniform_int_distribution<size_t> pick(0, perms.size() - 1);
    SupportedPerm sp{perms[pick(rng)], zmask};
    c.require(expansion_coefficient_operator(z, sp).is_zero(),
              "sampled coefficient operator nonzero at n=4");
    ++vanish;
  }
  for (size_t n = 1; n <= 4; ++n) {
    BetheConfig cfg = BetheConfig::from_exact(tuple_battery()[n - 1][2], kBits);
    GroupDiffOpQ product = raising_operator<Rat>(cfg) * lowering_operator<Rat>(cfg);
    c.require((operator_product_expansion(cfg) - product).is_zero(),
              "expansion does not reassemble the product at n=" + std::to_string(n));
  }
  c.note << vanish << " vanishing checks exact; reassembly exact for n<=4";
}

void criterion_bijection(Check& c) {
  long pairs = 0;
  for (size_t n = 1; n <= 4; ++n) {
    for (int k = 0; k <= static_cast<int>(n); ++k) {
      for (int l = 0; k + l <= static_cast<int>(n); ++l) {
        for (int kp = 0; kp <= static_cast<int>(n); ++kp) {
          const auto left = enumerate_terms(n, k, l);
          const auto right = enumerate_terms(n, kp, static_cast<int>(n) - kp);
          std::vector<std::pair<IndexedTerm, IndexedTerm>> images;
          std::vector<std::string> lhs, rhs;
          // The conserved index datum is the multiset union of the two index
          // sets (a point can appear in both), encoded losslessly by the
          // pair (popcount-sum mask arithmetic): sum and xor of the masks.
          auto encode = [](const Perm& prod, int sign, uint32_t y1, uint32_t y2) {
            std::ostringstream os;
            for (int v : prod.one_line()) os << v << '.';
            os << '|' << sign << '|' << (y1 + y2) << '|' << (y1 ^ y2);
            return os.str();
          };
          for (const IndexedTerm& a : left) {
            for (const IndexedTerm& b : right) {
              auto [b_bar, a_bar] = commutation_bijection(a, b);
              images.emplace_back(b_bar, a_bar);
              ++pairs;
              bool ok = b_bar.sx.sigma * a_bar.sx.sigma == a.sx.sigma * b.sx.sigma;
              ok = ok && (a.y + b.y == a_bar.y + b_bar.y) && ((a.y ^ b.y) == (a_bar.y ^ b_bar.y));
              ok = ok && a_bar.sx.sigma.sign() == a.sx.sigma.sign() &&
                   b_bar.sx.sigma.sign() == b.sx.sigma.sign();
              ok = ok && mask_elements(a_bar.sx.z).size() == static_cast<size_t>(k) &&
                   mask_elements(b_bar.sx.z).size() == static_cast<size_t>(kp);
              ok = ok && b_bar.y == (full_mask(n) & ~b_bar.sx.z);
              ok = ok && mask_elements(a_bar.y).size() == static_cast<size_t>(l);
              auto back = commutation_bijection_inverse(b_bar, a_bar);
              ok = ok && back.first == a && back.second == b;
              if (!ok) {
                c.require(false, "invariant broken at n=" + std::to_string(n));
                return;
              }
              lhs.push_back(encode(a.sx.sigma * b.sx.sigma, a.sx.sigma.sign() * b.sx.sigma.sign(),
                                   a.y, b.y));
              rhs.push_back(encode(b_bar.sx.sigma * a_bar.sx.sigma,
                                   b_bar.sx.sigma.sign() * a_bar.sx.sigma.sign(), b_bar.y,
                                   a_bar.y));
            }
          }
          std::sort(images.begin(), images.end());
          if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
            c.require(false, "not injective at n=" + std::to_string(n));
            return;
          }
          std::sort(lhs.begin(), lhs.end());
          std::sort(rhs.begin(), rhs.end());
          if (lhs != rhs) {
            c.require(false, "term multisets differ at n=" + std::to_string(n));
            return;
          }
        }
      }
    }
  }
  c.note << pairs << " term pairs over all (k,l,k') up to n=4; injective, weight-preserving";
}

void criterion_counting(Check& c) {
  PrecisionScope scope(kBits);
  std::mt19937 rng(0xACCE0006u);
  for (size_t n = 2; n <= 4; ++n) {
    for (int run = 0; run < 5; ++run) {
      SolveResult r;
      BetheConfig cfg = BetheConfig::from_exact({Rat(0)});
      std::string note;
      if (!random_clean_solve(n, rng, r, cfg, note)) {
        c.require(false, "n=" + std::to_string(n) + " run " + std::to_string(run) + note);
        return;
      }
      size_t total_dim = 0;
      for (const Partition& lam : partitions_of(static_cast<int>(n))) {
        total_dim += lam.tableau_count();
        if (r.count_of_shape(lam) != lam.tableau_count()) {
          c.require(false, "shape count off at n=" + std::to_string(n) + note);
          return;
        }
      }
      c.require(r.total_multiplicity() == total_dim, "total count off at n=" + std::to_string(n));
    }
  }
  c.note << "5 random configurations at each n in {2,3,4}";
}

void criterion_centre(Check& c) {
  for (int n = 1; n <= 8; ++n) {
    std::vector<std::vector<Rat>> chars;
    for (const Partition& lam : partitions_of(n)) chars.push_back(central_character(lam));
    for (size_t i = 0; i < chars.size(); ++i)
      for (size_t j = i + 1; j < chars.size(); ++j)
        c.require(chars[i] != chars[j], "character collision at n=" + std::to_string(n));
  }
  long scalars = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      IrrepModel model(lam);
      for (int k = 0; k <= n; ++k) {
        GroupElemQ sum(static_cast<size_t>(n));
        for (uint32_t x : k_subsets_of(full_mask(static_cast<size_t>(n)), n - k))
          sum += set_symmetrizer<Rat>(static_cast<size_t>(n), x, Sign::minus);
        Matrix<Rat> got = model.act_on(sum);
        Matrix<Rat> want(model.dim(), model.dim());
        for (size_t i = 0; i < model.dim(); ++i) want.at(i, i) = central_scalar(lam, k);
        c.require((got - want).all_zero(), "matrix scalar mismatch at n=" + std::to_string(n));
        ++scalars;
      }
    }
  }
  c.note << "characters distinct through n=8; " << scalars << " matrix scalars exact through n=5";
}

void check_placement(const SolveResult& r, Check& c, const std::string& where) {
  BigFloat t30 = tol30();
  for (const auto& s : r.solutions) {
    Partition shape = schubert_type_of(s.kernel);
    auto ind = indicial_vector(s.monic_lowering, t30);
    const int n = s.monic_lowering.order();
    if (ind.size() != static_cast<size_t>(n) + 1) {
      c.require(false, "indicial length at " + where);
      return;
    }
    for (int k = 0; k <= n; ++k) {
      c.require((ind[static_cast<size_t>(k)] - promote(central_scalar(shape, k), kBits)).abs() < t30,
                "indicial entry off at " + where);
    }
    std::vector<long> degs;
    for (int d : s.kernel.degrees()) degs.push_back(d);
    std::sort(degs.begin(), degs.end());
    c.require(indicial_roots(ind, 2 * n, t30) == degs, "indicial roots off at " + where);
  }
}

void criterion_placement(Check& c) {
  PrecisionScope scope(kBits);
  check_placement(example_run().result, c, "example");
  std::mt19937 rng(0xACCE0008u);
  for (size_t n = 2; n <= 4; ++n) {
    SolveResult r;
    BetheConfig cfg = BetheConfig::from_exact({Rat(0)});
    std::string note;
    if (!random_clean_solve(n, rng, r, cfg, note)) {
      c.require(false, "n=" + std::to_string(n) + note);
      return;
    }
    check_placement(r, c, "n=" + std::to_string(n));
  }
  c.note << "all records: indicial data matches the kernel type at 1e-30";
}

void criterion_reality(Check& c) {
  PrecisionScope scope(kBits);
  std::mt19937 rng(0xACCE0009u);
  BigFloat t25 = tol25();
  BigFloat worst(0, kBits);
  for (size_t n = 3; n <= 4; ++n) {
    for (int run = 0; run < 10; ++run) {
      SolveResult r;
      BetheConfig cfg = BetheConfig::from_exact({Rat(0)});
      std::string note;
      if (!random_clean_solve(n, rng, r, cfg, note)) {
        c.require(false, "n=" + std::to_string(n) + note);
        return;
      }
      for (const auto& s : r.solutions) {
        for (const auto& row : canonical_coords(s.kernel).entries)
          for (const BigComplex& v : row) worst = max(worst, v.im().abs());
      }
      worst = max(worst, spectrum_imaginary_magnitude(r));
    }
  }
  c.require(worst < t25, "imaginary part above 1e-25");
  if (c.pass) c.note << "20 real random configurations; all imaginary parts below 1e-25";
}

bool check_duality(const BetheConfig& cfg, const SolveResult& r, Check& c, const std::string& where) {
  BigFloat t25 = tol25();
  DualPairing dp = pair_dual_solutions(cfg, r, cfg.default_tolerance());
  bool ok = dp.spectra_matched && dp.kernels_matched && dp.operators_matched;
  c.require(ok, "sign-twisted pairing incomplete at " + where);
  if (!ok) return false;
  for (size_t i = 0; i < r.solutions.size(); ++i) {
    long j = dp.partner[i];
    if (j < 0 || dp.partner[static_cast<size_t>(j)] != static_cast<long>(i)) {
      c.require(false, "partner map is not an involution at " + where);
      return false;
    }
    const auto& si = r.solutions[i];
    const auto& sj = r.solutions[static_cast<size_t>(j)];
    if (!coords_close(grassmann_dual(canonical_coords(si.kernel)), canonical_coords(sj.kernel),
                      t25)) {
      c.require(false, "dual coordinates mismatch at " + where);
      return false;
    }
    DiffOp<PolyC> mapped = theta_map(si.shape, si.monic_lowering, t25);
    if (mapped.order() != sj.monic_lowering.order()) {
      c.require(false, "transported operator order at " + where);
      return false;
    }
    for (int k = 0; k <= mapped.order(); ++k) {
      if (!poly_close(mapped.coeff(static_cast<size_t>(k)),
                      sj.monic_lowering.coeff(static_cast<size_t>(k)), t25)) {
        c.require(false, "transported operator coefficients at " + where);
        return false;
      }
    }
  }
  return true;
}

void criterion_duality(Check& c) {
  PrecisionScope scope(kBits);
  if (!check_duality(example_run().cfg, example_run().result, c, "example")) return;
  std::mt19937 rng(0xACCE0010u);
  for (int run = 0; run < 3; ++run) {
    SolveResult r;
    BetheConfig cfg = BetheConfig::from_exact({Rat(0)});
    std::string note;
    if (!random_clean_solve(3, rng, r, cfg, note)) {
      c.require(false, "run " + std::to_string(run) + note);
      return;
    }
    if (!check_duality(cfg, r, c, "random run " + std::to_string(run))) return;
  }
  c.note << "example + 3 random configurations at n=3; pairing, duals, transported operators";
}

bool check_dual_wronskian(const BetheConfig& cfg, const SolveResult& r, Check& c,
                          const std::string& where) {
  BigFloat t25 = tol25();
  PolyC w = cfg.w_numeric();
  PolyC target(promote(Rat(1), kBits));
  for (size_t i = 0; i + 1 < cfg.n(); ++i) target = target * w;
  for (const auto& s : r.solutions) {
    if (s.scaled_dual_kernel.dim() != cfg.n()) {
      c.require(false, "dual kernel dimension at " + where);
      return false;
    }
    PolyC wr = monic_wronskian(s.scaled_dual_kernel.basis());
    if (!poly_close(wr, target, t25)) {
      c.require(false, "dual Wronskian differs from w^(n-1) at " + where);
      return false;
    }
    if (schubert_type_of(s.scaled_dual_kernel).part(0) > static_cast<int>(cfg.n())) {
      c.require(false, "dual type first part exceeds n at " + where);
      return false;
    }
  }
  return true;
}

void criterion_dual_wronskian(Check& c) {
  PrecisionScope scope(kBits);
  if (!check_dual_wronskian(example_run().cfg, example_run().result, c, "example")) return;
  std::mt19937 rng(0xACCE0011u);
  for (size_t n : {size_t(2), size_t(4)}) {
    SolveResult r;
    BetheConfig cfg = BetheConfig::from_exact({Rat(0)});
    std::string note;
    if (!random_clean_solve(n, rng, r, cfg, note)) {
      c.require(false, "n=" + std::to_string(n) + note);
      return;
    }
    if (!check_dual_wronskian(cfg, r, c, "n=" + std::to_string(n))) return;
  }
  c.note << "example + random n=2 and n=4; Wronskian of the scaled dual space is w^(n-1)";
}

}  // namespace

int main() {
  struct Row {
    const char* id;
    const char* label;
    std::function<void(Check&)> body;
  };
  const std::vector<Row> rows = {
      {"C1", "raising-lowering product is the pure derivative power (n<=4, exact)",
       criterion_identity},
      {"C2", "worked three-point configuration reproduced at 256 bits", criterion_example},
      {"C3", "all generator pairs commute (n<=4, exact)", criterion_commutativity},
      {"C4", "coefficient operators vanish and the expansion reassembles the product",
       criterion_expansion},
      {"C5", "term reindexing is injective and weight-preserving (n<=4)", criterion_bijection},
      {"C6", "solution counts match tableau numbers at random configurations",
       criterion_counting},
      {"C7", "central characters distinct (n<=8) and matrix scalars exact (n<=5)",
       criterion_centre},
      {"C8", "indicial data locates every solution in its cell (1e-30)", criterion_placement},
      {"C9", "real configurations give real solutions (20 runs, 1e-25)", criterion_reality},
      {"C10", "sign-twist duality: pairing, dual coordinates, transported operators (1e-25)",
       criterion_duality},
      {"C11", "scaled dual spaces have Wronskian w^(n-1) and bounded type (1e-25)",
       criterion_dual_wronskian},
  };

  int failed = 0;
  for (const auto& row : rows) {
    Check c;
    try {
      row.body(c);
    } catch (const std::exception& e) {
      c.pass = false;
      c.note << "exception: " << e.what();
    }
    std::string extra = c.note.str();
    std::printf("[%s] %s: %s%s%s\n", c.pass ? "PASS" : "FAIL", row.id, row.label,
                extra.empty() ? "" : " -- ", extra.c_str());
    std::fflush(stdout);
    if (!c.pass) ++failed;
  }
  std::printf("acceptance: %d/11 criteria passed\n", 11 - failed);
  return failed == 0 ? 0 : 1;
}
