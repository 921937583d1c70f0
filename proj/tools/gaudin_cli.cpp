// Command-line front end: exact verification of the operator identity,
// numeric solving of the inverse problem, structural self-checks, and the
// duality / cell-classification utilities, with JSON output for scripting.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include <gaudin/bethe_operators.hpp>
#include <gaudin/commute.hpp>
#include <gaudin/irrep.hpp>
#include <gaudin/json_io.hpp>
#include <gaudin/sandwich.hpp>
#include <gaudin/schubert.hpp>
#include <gaudin/solve.hpp>

namespace {

using namespace gaudin;

// Errors in how the tool was invoked (exit code 2), as opposed to checks
// that ran and failed (exit code 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

bool looks_rational(const std::string& t) {
  if (t.empty()) return false;
  size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
  if (i == t.size()) return false;
  bool slash = false;
  for (; i < t.size(); ++i) {
    if (t[i] == '/') {
      if (slash) return false;
      slash = true;
    } else if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
      return false;
    }
  }
  return true;
}

bool looks_decimal(const std::string& t) {
  if (t.empty()) return false;
  return t.find('.') != std::string::npos || t.find('e') != std::string::npos ||
         t.find('E') != std::string::npos;
}

struct ParsedPoints {
  bool exact = true;
  std::vector<Rat> rats;
  std::vector<BigComplex> nums;
  size_t size() const { return exact ? rats.size() : nums.size(); }
};

ParsedPoints parse_points(const std::vector<std::string>& tokens, mpfr_prec_t bits) {
  ParsedPoints out;
  bool any_rational = false, any_decimal = false;
  for (const std::string& t : tokens) {
    if (looks_rational(t))
      any_rational = true;
    else if (looks_decimal(t))
      any_decimal = true;
    else
      throw UsageError("cannot parse point '" + t + "': use p/q rationals or plain decimals");
  }
  if (any_rational && any_decimal)
    throw UsageError("mixing exact (p/q) and decimal points is not allowed; pick one form");
  out.exact = !any_decimal;
  for (const std::string& t : tokens) {
    if (out.exact)
      out.rats.push_back(rat_from_string(t));
    else
      out.nums.push_back(BigComplex(BigFloat::from_string(t, bits), BigFloat(0, bits)));
  }
  return out;
}

std::vector<std::string> default_points(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

BetheConfig config_of(const ParsedPoints& p, mpfr_prec_t bits) {
  return p.exact ? BetheConfig::from_exact(p.rats, bits)
                 : BetheConfig::from_numeric(p.nums, bits);
}

void emit(const Json& j, bool json_flag, const std::string& out_path) {
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file " + out_path);
    f << j.dump(2) << "\n";
  }
  if (json_flag && out_path.empty()) std::cout << j.dump(2) << "\n";
}

Json input_json(const std::string& path) {
  if (path == "-") {
    Json j;
    std::cin >> j;
    return j;
  }
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open input file " + path);
  Json j;
  f >> j;
  return j;
}

// ---------------------------------------------------------------- verify

int run_verify(int n, const std::string& z_csv, bool allow_large, bool json_flag,
               const std::string& out_path) {
  if (n < 1 || n > 5) throw UsageError("--n must be between 1 and 5");
  if (n == 5 && !allow_large)
    throw UsageError("n = 5 multiplies large group-algebra elements; pass --allow-large");
  std::vector<std::string> tokens = z_csv.empty() ? default_points(n) : split_csv(z_csv);
  if (static_cast<int>(tokens.size()) != n)
    throw UsageError("expected exactly n points, got " + std::to_string(tokens.size()));
  ParsedPoints pts = parse_points(tokens, 256);
  if (!pts.exact)
    throw UsageError("identity verification is exact and needs rational points (p/q)");
  BetheConfig cfg = BetheConfig::from_exact(pts.rats);

  const auto t0 = std::chrono::steady_clock::now();
  GroupDiffOpQ rai = raising_operator<Rat>(cfg);
  GroupDiffOpQ low = lowering_operator<Rat>(cfg);
  size_t max_support = 0;
  for (int j = 0; j <= low.order(); ++j)
    max_support = std::max(max_support, low.coeff(static_cast<size_t>(j)).support_size());
  for (int j = 0; j <= rai.order(); ++j)
    max_support = std::max(max_support, rai.coeff(static_cast<size_t>(j)).support_size());
  GroupDiffOpQ defect = rai * low - group_d_power<Rat>(static_cast<size_t>(n), 2 * n);
  const bool ok = defect.is_zero();
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();

  std::printf("n = %d, points:", n);
  for (const Rat& z : pts.rats) std::printf(" %s", rat_to_string(z).c_str());
  std::printf("\nproduct of the operator pair equals d^%d exactly: %s\n", 2 * n,
              ok ? "yes" : "NO");
  std::printf("largest coefficient support: %zu group terms\n", max_support);
  std::printf("elapsed: %lld ms\n", static_cast<long long>(ms));

  Json j = Json::object();
  j["n"] = n;
  Json zz = Json::array();
  for (const Rat& z : pts.rats) zz.push_back(json_of(z));
  j["points"] = zz;
  j["verified"] = ok;
  j["max_coefficient_support"] = max_support;
  j["milliseconds"] = ms;
  emit(j, json_flag, out_path);
  return ok ? 0 : 1;
}

// ----------------------------------------------------------------- solve

int run_solve(const std::string& z_csv, int bits, const std::string& tol_str, uint64_t seed,
              bool json_flag, const std::string& out_path) {
  if (z_csv.empty()) throw UsageError("solve needs --z with the marked points");
  if (bits < 64 || bits > 4096) throw UsageError("--precision-bits must be in 64..4096");
  std::vector<std::string> tokens = split_csv(z_csv);
  ParsedPoints pts = parse_points(tokens, static_cast<mpfr_prec_t>(bits));
  BetheConfig cfg = config_of(pts, static_cast<mpfr_prec_t>(bits));
  SolveOptions opt;
  opt.seed = seed;
  if (!tol_str.empty())
    opt.tolerance = BigFloat::from_string(tol_str, static_cast<mpfr_prec_t>(bits));

  SolveResult r = solve_inverse_wronskian(cfg, opt);

  std::printf("n = %zu at %d bits\n", cfg.n(), bits);
  std::printf("%zu solution(s), total multiplicity %zu\n", r.solutions.size(),
              r.total_multiplicity());
  bool clean = !r.defective;
  for (const auto& s : r.solutions) {
    std::printf("  shape %-10s multiplicity %zu  kernel degrees:", s.shape.to_string().c_str(),
                s.multiplicity);
    for (int d : s.kernel.degrees()) std::printf(" %d", d);
    if (!s.issues.empty()) {
      std::printf("  ISSUES: %s", s.issues.c_str());
      clean = false;
    }
    std::printf("\n");
  }
  if (r.defective) std::printf("DEFECTIVE: %s\n", r.diagnostic.c_str());
  std::printf("consistency checks: %s\n", clean ? "all passed" : "FAILED");

  Json j = json_of(r);
  j["configuration"] = json_of(cfg);
  emit(j, json_flag, out_path);
  return clean ? 0 : 1;
}

// ----------------------------------------------------------------- check

int run_check_commute(int n, const std::string& z_csv, bool allow_large) {
  if (n < 1 || n > 5) throw UsageError("--n must be between 1 and 5");
  if (n == 5 && !allow_large) throw UsageError("n = 5 is expensive; pass --allow-large");
  std::vector<std::string> tokens = z_csv.empty() ? default_points(n) : split_csv(z_csv);
  if (static_cast<int>(tokens.size()) != n) throw UsageError("expected exactly n points");
  ParsedPoints pts = parse_points(tokens, 256);
  if (!pts.exact) throw UsageError("the commutation check is exact and needs rational points");
  BetheConfig cfg = BetheConfig::from_exact(pts.rats);

  std::vector<GroupElemQ> gens;
  for (const GeneratorKey& key : generator_keys(static_cast<size_t>(n)))
    gens.push_back(bethe_generator<Rat>(cfg, key.k, key.l, key.sign));
  size_t pairs = 0, failures = 0;
  for (size_t a = 0; a < gens.size(); ++a)
    for (size_t b = a + 1; b < gens.size(); ++b) {
      ++pairs;
      if (!(gens[a] * gens[b] == gens[b] * gens[a])) ++failures;
    }
  std::printf("commutation: %zu generator pairs at n = %d, %zu failure(s)\n", pairs, n, failures);
  return failures == 0 ? 0 : 1;
}

int run_check_centre(int n) {
  if (n < 1 || n > 8) throw UsageError("--n must be between 1 and 8");
  size_t checked = 0, failures = 0;
  std::vector<std::vector<Rat>> characters;
  for (const Partition& shape : partitions_of(n)) {
    characters.push_back(central_character(shape));
    if (n <= 5) {
      IrrepModel model(shape);
      for (int k = 0; k <= n; ++k) {
        GroupElemQ sum(static_cast<size_t>(n));
        for (uint32_t x : k_subsets_of(full_mask(static_cast<size_t>(n)), n - k))
          sum += set_symmetrizer<Rat>(static_cast<size_t>(n), x, Sign::minus);
        Matrix<Rat> m = model.act_on(sum);
        Matrix<Rat> expect = Matrix<Rat>::identity(model.dim());
        Rat scalar = central_scalar(shape, k);
        for (size_t i = 0; i < model.dim(); ++i) expect.at(i, i) = scalar;
        ++checked;
        if (!(m == expect)) ++failures;
      }
    }
  }
  size_t collisions = 0;
  for (size_t a = 0; a < characters.size(); ++a)
    for (size_t b = a + 1; b < characters.size(); ++b)
      if (characters[a] == characters[b]) ++collisions;
  if (n <= 5)
    std::printf("central scalars: %zu module/index pairs checked, %zu failure(s)\n", checked,
                failures);
  std::printf("character vectors at n = %d: %zu shapes, %zu collision(s)\n", n,
              characters.size(), collisions);
  return (failures == 0 && collisions == 0) ? 0 : 1;
}

int run_check_f_vanishing(int n, const std::string& z_csv, int samples, uint64_t seed) {
  if (n < 1 || n > 4) throw UsageError("--n must be between 1 and 4");
  std::vector<std::string> tokens = z_csv.empty() ? default_points(n) : split_csv(z_csv);
  if (static_cast<int>(tokens.size()) != n) throw UsageError("expected exactly n points");
  ParsedPoints pts = parse_points(tokens, 256);
  if (!pts.exact) throw UsageError("the expansion check is exact and needs rational points");

  size_t checked = 0, failures = 0;
  if (samples > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-6, 6);
    std::vector<SupportedPerm> sps = all_supported_perms(static_cast<size_t>(n));
    std::vector<SupportedPerm> nonempty;
    for (const auto& sp : sps)
      if (sp.z != 0) nonempty.push_back(sp);
    std::uniform_int_distribution<size_t> pick(0, nonempty.size() - 1);
    for (int s = 0; s < samples; ++s) {
      std::vector<Rat> z;
      for (int i = 0; i < n; ++i) z.push_back(Rat(num(rng), 1 + static_cast<unsigned long>(s % 3)));
      ++checked;
      if (!expansion_coefficient_operator(z, nonempty[pick(rng)]).is_zero()) ++failures;
    }
    std::printf("coefficient vanishing: %zu random samples at n = %d, %zu failure(s)\n", checked,
                n, failures);
  } else {
    for (const SupportedPerm& sp : all_supported_perms(static_cast<size_t>(n))) {
      if (sp.z == 0) continue;
      ++checked;
      if (!expansion_coefficient_operator(pts.rats, sp).is_zero()) ++failures;
    }
    std::printf("coefficient vanishing: all %zu nonempty-support terms at n = %d, %zu failure(s)\n",
                checked, n, failures);
    BetheConfig cfg = BetheConfig::from_exact(pts.rats);
    bool recon = operator_product_expansion(cfg) ==
                 raising_operator<Rat>(cfg) * lowering_operator<Rat>(cfg);
    std::printf("full expansion reconstructs the operator product: %s\n", recon ? "yes" : "NO");
    if (!recon) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

int run_check_bijection(int n) {
  if (n < 1 || n > 4) throw UsageError("--n must be between 1 and 4");
  size_t checked = 0, failures = 0;
  for (int k = 0; k <= n; ++k)
    for (int l = 0; k + l <= n; ++l)
      for (int kp = 0; kp <= n; ++kp) {
        std::vector<IndexedTerm> as = enumerate_terms(static_cast<size_t>(n), k, l);
        std::vector<IndexedTerm> bs = enumerate_terms(static_cast<size_t>(n), kp, n - kp);
        std::vector<std::pair<IndexedTerm, IndexedTerm>> images;
        for (const IndexedTerm& a : as)
          for (const IndexedTerm& b : bs) {
            ++checked;
            auto [b_bar, a_bar] = commutation_bijection(a, b);
            bool ok = true;
            // weights: the product permutation and the spectator multiset
            if (!(b_bar.sx.sigma * a_bar.sx.sigma == a.sx.sigma * b.sx.sigma)) ok = false;
            if ((static_cast<uint64_t>(a.y) + b.y) != (static_cast<uint64_t>(a_bar.y) + b_bar.y) ||
                (a.y ^ b.y) != (a_bar.y ^ b_bar.y))
              ok = false;  // multiset of spectator indices preserved
            if (a.sx.sigma.sign() != a_bar.sx.sigma.sign() ||
                b.sx.sigma.sign() != b_bar.sx.sigma.sign())
              ok = false;
            auto [a2, b2] = commutation_bijection_inverse(b_bar, a_bar);
            if (!(a2 == a) || !(b2 == b)) ok = false;
            if (!ok) ++failures;
            images.emplace_back(b_bar, a_bar);
          }
        std::sort(images.begin(), images.end());
        for (size_t i = 1; i < images.size(); ++i)
          if (images[i] == images[i - 1]) ++failures;
      }
  std::printf("reindexing bijection: %zu pairs at n = %d, %zu failure(s)\n", checked, n, failures);
  return failures == 0 ? 0 : 1;
}

// --------------------------------------------------------------- dualize

int run_dualize(const std::string& in_path, bool json_flag, const std::string& out_path) {
  Json in = input_json(in_path);
  if (!in.contains("basis")) throw UsageError("input must be a JSON object with a \"basis\" array");
  PolySubspaceQ v = PolySubspaceQ::from_span(basis_from_json(in.at("basis")));
  CanonicalCoords<Rat> coords = canonical_coords(v);
  CanonicalCoords<Rat> dual = grassmann_dual(coords);
  PolySubspaceQ dual_space = coords_to_subspace(dual);

  std::printf("type %s -> dual type %s\n", coords.shape.to_string().c_str(),
              dual.shape.to_string().c_str());

  Json j = Json::object();
  j["space"] = json_of(v);
  j["type"] = json_of(coords.shape);
  j["coords"] = json_of(coords);
  j["dual_type"] = json_of(dual.shape);
  j["dual_coords"] = json_of(dual);
  j["dual_space"] = json_of(dual_space);
  emit(j, json_flag, out_path);
  return 0;
}

// ----------------------------------------------------------- schubert-type

int run_schubert_type(const std::string& degrees_csv, const std::string& in_path, bool json_flag,
                      const std::string& out_path) {
  Json j = Json::object();
  Partition shape;
  size_t dim = 0;
  if (!degrees_csv.empty()) {
    std::vector<int> degrees;
    for (const std::string& t : split_csv(degrees_csv)) degrees.push_back(std::stoi(t));
    shape = schubert_type(degrees);
    dim = degrees.size();
    j["degrees"] = degrees;
  } else if (!in_path.empty()) {
    Json in = input_json(in_path);
    if (!in.contains("basis"))
      throw UsageError("input must be a JSON object with a \"basis\" array");
    PolySubspaceQ v = PolySubspaceQ::from_span(basis_from_json(in.at("basis")));
    shape = schubert_type_of(v);
    dim = v.dim();
    j["degrees"] = v.degrees();
    j["coords"] = json_of(canonical_coords(v));
  } else {
    throw UsageError("give either --degrees or --in");
  }
  j["type"] = json_of(shape);
  j["gaps"] = cell_gaps(shape, dim);
  std::printf("type %s (%zu-dimensional cell data)\n", shape.to_string().c_str(), dim);
  emit(j, json_flag, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"commuting-family constructor, operator-identity verifier, and inverse "
               "Wronskian solver over exact and high-precision arithmetic"};
  app.require_subcommand(1);

  // verify-identity
  auto* verify = app.add_subcommand(
      "verify-identity", "exactly verify that the operator pair multiplies to a pure power of d");
  int v_n = 2;
  std::string v_z;
  bool v_large = false, v_json = false;
  std::string v_out;
  verify->add_option("--n", v_n, "number of points (1..5)")->required();
  verify->add_option("--z", v_z, "comma-separated rational points (default 0,1,...,n-1)");
  verify->add_flag("--allow-large", v_large, "permit the expensive n = 5 case");
  verify->add_flag("--json", v_json, "print a JSON report");
  verify->add_option("--out", v_out, "write the JSON report to a file");

  // solve
  auto* solve = app.add_subcommand("solve", "split the modules and recover polynomial kernels");
  std::string s_z, s_tol, s_out;
  int s_bits = 256;
  uint64_t s_seed = 0x5eedbeef;
  bool s_json = false;
  solve->add_option("--z", s_z, "comma-separated points: all p/q rationals or all decimals")
      ->required();
  solve->add_option("--precision-bits", s_bits, "working precision (default 256)");
  solve->add_option("--tolerance", s_tol, "pipeline tolerance, e.g. 1e-25 (default from precision)");
  solve->add_option("--seed", s_seed, "seed for the random generator combination");
  solve->add_flag("--json", s_json, "print the full JSON result");
  solve->add_option("--out", s_out, "write the JSON result to a file");

  // check
  auto* check = app.add_subcommand("check", "structural self-checks of the algebra");
  int c_n = 3, c_samples = 0;
  std::string c_z;
  uint64_t c_seed = 0x5eedbeef;
  bool c_commute = false, c_centre = false, c_fvan = false, c_bij = false, c_large = false;
  check->add_option("--n", c_n, "number of points")->required();
  check->add_option("--z", c_z, "comma-separated rational points (default 0,1,...,n-1)");
  check->add_flag("--commute", c_commute, "all generator pairs commute (exact)");
  check->add_flag("--centre", c_centre,
                  "central scalars match the character recurrence; characters are distinct");
  check->add_flag("--f-vanishing", c_fvan,
                  "expansion coefficients with nonempty support vanish; full expansion "
                  "reconstructs the product");
  check->add_flag("--bijection", c_bij, "the commutation reindexing is a weight-preserving bijection");
  check->add_option("--samples", c_samples, "random samples instead of exhaustive (f-vanishing)");
  check->add_option("--seed", c_seed, "seed for sampled checks");
  check->add_flag("--allow-large", c_large, "permit the expensive n = 5 case");

  // dualize
  auto* dualize = app.add_subcommand(
      "dualize", "compute cell coordinates and the transposed dual of an exact polynomial space");
  std::string d_in, d_out;
  bool d_json = false;
  dualize->add_option("--in", d_in, "input JSON file with a \"basis\" array ('-' for stdin)")
      ->required();
  dualize->add_flag("--json", d_json, "print the JSON result");
  dualize->add_option("--out", d_out, "write the JSON result to a file");

  // schubert-type
  auto* stype = app.add_subcommand("schubert-type",
                                   "classify a degree sequence or an exact polynomial space");
  std::string t_degrees, t_in, t_out;
  bool t_json = false;
  stype->add_option("--degrees", t_degrees, "comma-separated distinct degrees");
  stype->add_option("--in", t_in, "input JSON file with a \"basis\" array ('-' for stdin)");
  stype->add_flag("--json", t_json, "print the JSON result");
  stype->add_option("--out", t_out, "write the JSON result to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify(v_n, v_z, v_large, v_json, v_out);
    if (solve->parsed()) return run_solve(s_z, s_bits, s_tol, s_seed, s_json, s_out);
    if (check->parsed()) {
      const int modes = int(c_commute) + int(c_centre) + int(c_fvan) + int(c_bij);
      if (modes != 1)
        throw UsageError("pick exactly one of --commute, --centre, --f-vanishing, --bijection");
      if (c_commute) return run_check_commute(c_n, c_z, c_large);
      if (c_centre) return run_check_centre(c_n);
      if (c_fvan) return run_check_f_vanishing(c_n, c_z, c_samples, c_seed);
      return run_check_bijection(c_n);
    }
    if (dualize->parsed()) return run_dualize(d_in, d_json, d_out);
    if (stype->parsed()) return run_schubert_type(t_degrees, t_in, t_json, t_out);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "failed: %s\n", e.what());
    return 1;
  }
  return 2;
}
