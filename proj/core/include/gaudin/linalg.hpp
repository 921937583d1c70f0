#pragma once

#include <string>
#include <vector>

#include "gaudin/bigcomplex.hpp"
#include "gaudin/matrix.hpp"

namespace gaudin {

struct NullspaceResult {
  // Orthonormal basis of the numerical nullspace, one column vector per entry.
  std::vector<std::vector<BigComplex>> basis;
  // All singular values, descending.
  std::vector<BigFloat> singular_values;
  // True when some singular value falls within a factor of 10 of the
  // tol * sigma_max cut, i.e. the rank decision is fragile.
  bool ill_conditioned = false;
};

// Numerical right-nullspace via one-sided Jacobi SVD. A direction counts as
// null when its singular value is < tol * sigma_max (everything, for the
// zero matrix).
NullspaceResult nullspace_numeric(const Matrix<BigComplex>& m, const BigFloat& tol);

struct Eigenpair {
  BigComplex value;            // cluster representative (mean)
  size_t multiplicity = 0;     // algebraic (cluster size)
  std::vector<std::vector<BigComplex>> basis;  // orthonormal eigenspace basis
};

struct EigResult {
  std::vector<Eigenpair> pairs;  // sorted by (re, im) of the eigenvalue
  bool defective = false;        // some geometric < algebraic multiplicity
  std::string diagnostic;
};

// Eigenvalues by Hessenberg reduction + shifted QR iteration; eigenvalues
// within tol*scale of each other are grouped and each group's eigenspace is
// recovered as nullspace_numeric(m - mu*I). Throws on QR non-convergence.
EigResult eig_numeric(const Matrix<BigComplex>& m, const BigFloat& tol);

// Frobenius-style max-entry norm.
BigFloat entry_norm(const Matrix<BigComplex>& m);

// ||A v||_sup / ||v||_sup helpers used by eigenspace validation.
std::vector<BigComplex> matvec(const Matrix<BigComplex>& m, const std::vector<BigComplex>& v);
BigFloat vec_norm(const std::vector<BigComplex>& v);

}  // namespace gaudin
