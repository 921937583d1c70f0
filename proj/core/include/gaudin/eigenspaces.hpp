#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gaudin/bethe_config.hpp"
#include "gaudin/bethe_generators.hpp"
#include "gaudin/bigcomplex.hpp"
#include "gaudin/irrep.hpp"
#include "gaudin/matrix.hpp"
#include "gaudin/partition.hpp"

namespace gaudin {

// Index of one commuting generator: sign family and the (k, l) bidegree.
struct GeneratorKey {
  Sign sign = Sign::minus;
  int k = 0;
  int l = 0;

  friend bool operator<(const GeneratorKey& a, const GeneratorKey& b) {
    if (a.sign != b.sign) return a.sign == Sign::minus;
    if (a.k != b.k) return a.k < b.k;
    return a.l < b.l;
  }
  friend bool operator==(const GeneratorKey& a, const GeneratorKey& b) {
    return a.sign == b.sign && a.k == b.k && a.l == b.l;
  }
};

// One joint eigenspace of the commuting family on an irreducible module.
struct EigenspaceRecord {
  std::map<GeneratorKey, BigComplex> eigenvalues;
  std::vector<std::vector<BigComplex>> basis;  // orthonormal columns, seminormal coords
  size_t multiplicity = 1;
};

struct EigenspaceAnalysis {
  Partition shape;
  std::vector<EigenspaceRecord> records;  // sorted by minus-family eigenvalue tuple
  bool defective = false;   // a joint eigenspace failed validation or dims do not add up
  bool ill_conditioned = false;
  std::string diagnostic;
};

// Numeric matrix of one generator on the module: the exact seminormal
// matrices of the set symmetrizers, weighted by the elementary symmetric
// values of the complementary points.
Matrix<BigComplex> generator_matrix(const IrrepModel& model, const BetheConfig& cfg, int k, int l,
                                    Sign sign);

// Split the module into joint eigenspaces of the full commuting family: a
// seeded random integer combination of the generators is diagonalized and
// every resulting eigenspace is validated against every generator (residual
// check with a trace-based eigenvalue estimate); on validation failure a new
// combination is drawn, up to five attempts, after which the analysis is
// reported defective rather than split further.
EigenspaceAnalysis simultaneous_eigenspaces(const IrrepModel& model, const BetheConfig& cfg,
                                            uint64_t seed, const BigFloat& tolerance,
                                            const BigFloat& grouping_tolerance);

// All generator indices with k + l <= n, minus family first.
std::vector<GeneratorKey> generator_keys(size_t n);

}  // namespace gaudin
