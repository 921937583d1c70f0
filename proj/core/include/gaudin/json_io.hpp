#pragma once

// JSON encodings of the library's value types, used by the command-line
// tool and stable enough to diff: rationals are "p/q" strings, big floats
// are canonical scientific strings, permutations are 1-based one-line
// arrays, polynomials are coefficient arrays in ascending degree.

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "gaudin/bethe_config.hpp"
#include "gaudin/bigcomplex.hpp"
#include "gaudin/bigfloat.hpp"
#include "gaudin/diff_op.hpp"
#include "gaudin/eigenspaces.hpp"
#include "gaudin/partition.hpp"
#include "gaudin/perm.hpp"
#include "gaudin/poly.hpp"
#include "gaudin/rat.hpp"
#include "gaudin/ratfunc.hpp"
#include "gaudin/schubert.hpp"
#include "gaudin/solve.hpp"
#include "gaudin/wronskian.hpp"

namespace gaudin {

using Json = nlohmann::ordered_json;

Json json_of(const Rat& r);
Json json_of(const BigFloat& x);
Json json_of(const BigComplex& x);
Json json_of(const Perm& p);
Json json_of(const Partition& p);
Json json_of(const PolyQ& p);
Json json_of(const PolyC& p);
Json json_of(const RatFuncQ& f);
Json json_of(const RatFuncC& f);
Json json_of(const GeneratorKey& k);
Json json_of(const DiffOp<RatFuncQ>& op);
Json json_of(const DiffOp<RatFuncC>& op);
Json json_of(const DiffOp<PolyC>& op);
Json json_of(const PolySubspaceQ& v);
Json json_of(const PolySubspaceC& v);
Json json_of(const CanonicalCoords<Rat>& c);
Json json_of(const CanonicalCoords<BigComplex>& c);
Json json_of(const BetheConfig& cfg);
Json json_of(const SolutionRecord& s);
Json json_of(const SolveResult& r);
Json json_of(const DualPairing& p);

// Parsing of exact inputs: a rational is a "p/q" (or integer) string or a
// JSON integer; a polynomial is an ascending coefficient array; a basis is
// an array of polynomials.
Rat rat_from_json(const Json& j);
PolyQ poly_from_json(const Json& j);
std::vector<PolyQ> basis_from_json(const Json& j);

}  // namespace gaudin
