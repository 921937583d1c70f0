#include "gaudin/json_io.hpp"

#include <stdexcept>

namespace gaudin {

namespace {

template <class T>
Json array_of(const std::vector<T>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(json_of(x));
  return a;
}

template <class C>
Json diff_op_json(const DiffOp<C>& op) {
  Json a = Json::array();
  for (int j = 0; j <= op.order(); ++j) a.push_back(json_of(op.coeff(static_cast<size_t>(j))));
  return a;
}

template <class S>
Json subspace_json(const PolySubspace<S>& v) {
  Json j = Json::object();
  j["dimension"] = v.dim();
  j["degrees"] = v.degrees();
  j["basis"] = array_of(v.basis());
  return j;
}

template <class S>
Json coords_json(const CanonicalCoords<S>& c) {
  Json j = Json::object();
  j["shape"] = json_of(c.shape);
  j["dimension"] = c.dim;
  Json entries = Json::object();
  for (size_t i = 0; i < c.entries.size(); ++i)
    for (size_t t = 0; t < c.entries[i].size(); ++t)
      entries[std::to_string(i + 1) + "," + std::to_string(t + 1)] = json_of(c.entries[i][t]);
  j["entries"] = entries;
  return j;
}

}  // namespace

Json json_of(const Rat& r) { return rat_to_string(r); }

Json json_of(const BigFloat& x) { return x.to_string(); }

Json json_of(const BigComplex& x) {
  Json j = Json::object();
  j["re"] = json_of(x.re());
  j["im"] = json_of(x.im());
  return j;
}

Json json_of(const Perm& p) { return Json(p.one_line()); }

Json json_of(const Partition& p) { return Json(p.parts()); }

Json json_of(const PolyQ& p) { return array_of(p.coeffs()); }

Json json_of(const PolyC& p) { return array_of(p.coeffs()); }

Json json_of(const RatFuncQ& f) {
  Json j = Json::object();
  j["num"] = json_of(f.num());
  j["den"] = json_of(f.den());
  return j;
}

Json json_of(const RatFuncC& f) {
  Json j = Json::object();
  j["num"] = json_of(f.num());
  j["den"] = json_of(f.den());
  return j;
}

Json json_of(const GeneratorKey& k) {
  Json j = Json::object();
  j["family"] = sign_name(k.sign);
  j["k"] = k.k;
  j["l"] = k.l;
  return j;
}

Json json_of(const DiffOp<RatFuncQ>& op) { return diff_op_json(op); }
Json json_of(const DiffOp<RatFuncC>& op) { return diff_op_json(op); }
Json json_of(const DiffOp<PolyC>& op) { return diff_op_json(op); }

Json json_of(const PolySubspaceQ& v) { return subspace_json(v); }
Json json_of(const PolySubspaceC& v) { return subspace_json(v); }

Json json_of(const CanonicalCoords<Rat>& c) { return coords_json(c); }
Json json_of(const CanonicalCoords<BigComplex>& c) { return coords_json(c); }

Json json_of(const BetheConfig& cfg) {
  Json j = Json::object();
  j["n"] = cfg.n();
  j["exact"] = cfg.exact();
  if (cfg.exact()) {
    Json pts = Json::array();
    for (const Rat& z : cfg.z_exact()) pts.push_back(json_of(z));
    j["points"] = pts;
  } else {
    Json pts = Json::array();
    for (const BigComplex& z : cfg.z_numeric()) pts.push_back(json_of(z));
    j["points"] = pts;
  }
  j["precision_bits"] = static_cast<long>(cfg.precision_bits());
  return j;
}

Json json_of(const SolutionRecord& s) {
  Json j = Json::object();
  j["shape"] = json_of(s.shape);
  j["multiplicity"] = s.multiplicity;
  Json eig = Json::array();
  for (const auto& [key, value] : s.eigenvalues) {
    Json e = json_of(key);
    e["value"] = json_of(value);
    eig.push_back(e);
  }
  j["eigenvalues"] = eig;
  j["monic_lowering"] = json_of(s.monic_lowering);
  j["kernel"] = json_of(s.kernel);
  j["scaled_dual_kernel"] = json_of(s.scaled_dual_kernel);
  j["kernel_ill_conditioned"] = s.kernel_ill_conditioned;
  j["issues"] = s.issues;
  return j;
}

Json json_of(const SolveResult& r) {
  Json j = Json::object();
  j["solutions"] = array_of(r.solutions);
  j["total_multiplicity"] = r.total_multiplicity();
  j["defective"] = r.defective;
  j["ill_conditioned"] = r.ill_conditioned;
  j["diagnostic"] = r.diagnostic;
  return j;
}

Json json_of(const DualPairing& p) {
  Json j = Json::object();
  j["partner"] = p.partner;
  j["spectra_matched"] = p.spectra_matched;
  j["kernels_matched"] = p.kernels_matched;
  j["operators_matched"] = p.operators_matched;
  j["diagnostic"] = p.diagnostic;
  return j;
}

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw std::invalid_argument("rat_from_json: expected a \"p/q\" string or an integer");
}

PolyQ poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("poly_from_json: expected a coefficient array");
  std::vector<Rat> coeffs;
  coeffs.reserve(j.size());
  for (const Json& c : j) coeffs.push_back(rat_from_json(c));
  return PolyQ(std::move(coeffs));
}

std::vector<PolyQ> basis_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("basis_from_json: expected an array");
  std::vector<PolyQ> out;
  out.reserve(j.size());
  for (const Json& p : j) out.push_back(poly_from_json(p));
  return out;
}

}  // namespace gaudin
