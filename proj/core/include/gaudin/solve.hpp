#pragma once

// End-to-end solver: for a configuration of marked points, split every
// irreducible module of the symmetric group under the commuting generator
// family, restrict the lowering operator to each joint eigenvector, and
// recover the polynomial kernel together with its cell classification,
// its dual partner data, and consistency diagnostics.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gaudin/bethe_config.hpp"
#include "gaudin/bigcomplex.hpp"
#include "gaudin/bigfloat.hpp"
#include "gaudin/diff_op.hpp"
#include "gaudin/eigenspaces.hpp"
#include "gaudin/partition.hpp"
#include "gaudin/poly.hpp"
#include "gaudin/ratfunc.hpp"
#include "gaudin/wronskian.hpp"

namespace gaudin {

// The polynomial eigenvalue of the generator polynomial of index k on one
// joint eigenvector: sum over l of u^(n-k-l) times the (k, l) eigenvalue.
PolyC eigenvalue_polynomial(const BetheConfig& cfg, const EigenspaceRecord& rec, int k, Sign sign);

// w times the restriction of the lowering operator to the eigenvector:
// polynomial coefficients, the top one being w itself (monic of degree n).
DiffOp<PolyC> monic_lowering_restriction(const BetheConfig& cfg, const EigenspaceRecord& rec);

// The restricted lowering operator itself (coefficients divided by w).
DiffOp<RatFuncC> lowering_restriction(const BetheConfig& cfg, const EigenspaceRecord& rec);

// The restricted raising operator: derivative powers on the left of the
// eigenvalue polynomials, composed with multiplication by 1/w. Coefficients
// are presented over the uniform denominator w^(n+1).
DiffOp<RatFuncC> raising_restriction(const BetheConfig& cfg, const EigenspaceRecord& rec);

// w^(n+2) * (f -> raising_restriction applied to f/w), expanded into
// polynomial coefficients. Its polynomial kernel is w times the kernel of
// the restricted raising operator; the polynomial form avoids the badly
// scaled linear systems that rational-function composition produces.
DiffOp<RatFuncC> scaled_raising_restriction(const BetheConfig& cfg, const EigenspaceRecord& rec);

// One solution of the inverse problem at this configuration.
struct SolutionRecord {
  Partition shape;
  std::map<GeneratorKey, BigComplex> eigenvalues;
  size_t multiplicity = 1;

  DiffOp<PolyC> monic_lowering;  // w * (restricted lowering operator)
  PolySubspaceC kernel;          // polynomial kernel of the restricted lowering operator
  PolySubspaceC scaled_dual_kernel;  // w * (kernel of the restricted raising operator)

  bool kernel_ill_conditioned = false;
  // Consistency problems found while building the record; empty when clean.
  std::string issues;
};

struct SolveOptions {
  // Zero means: use the configuration's defaults.
  BigFloat tolerance;
  BigFloat grouping_tolerance;
  uint64_t seed = 0x5eedbeef;
};

struct SolveResult {
  std::vector<SolutionRecord> solutions;  // shapes in enumeration order, spectra sorted
  bool defective = false;
  bool ill_conditioned = false;
  std::string diagnostic;

  size_t total_multiplicity() const;
  // Sum of multiplicities of the solutions with this exact shape.
  size_t count_of_shape(const Partition& shape) const;
};

SolveResult solve_inverse_wronskian(const BetheConfig& cfg, const SolveOptions& opt = {});

// Largest imaginary part in magnitude over every recorded eigenvalue.
BigFloat spectrum_imaginary_magnitude(const SolveResult& r);

// Pairing of each solution with its dual partner: conjugate shape, with the
// plus-family spectrum of one matching the minus-family spectrum of the
// other. Also checks that the partner's kernel is the coordinate dual of
// the kernel and that transporting the monic lowering operator through the
// duality lands on the partner's.
struct DualPairing {
  std::vector<long> partner;  // index into solutions, -1 when unmatched
  bool spectra_matched = false;
  bool kernels_matched = false;
  bool operators_matched = false;
  std::string diagnostic;
};

DualPairing pair_dual_solutions(const BetheConfig& cfg, const SolveResult& r, const BigFloat& tol);

}  // namespace gaudin
