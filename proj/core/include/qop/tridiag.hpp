#pragma once

#include <span>
#include <vector>

#include "qop/errors.hpp"

namespace qop::numerics {

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;
};

/// All eigenvalues of a real symmetric tridiagonal matrix, ascending.
/// Implicit-shift QL without eigenvector accumulation, O(n^2).
std::vector<double> tridiag_eigenvalues(std::span<const double> diag,
                                        std::span<const double> offdiag);

/// k lowest eigenpairs of a real symmetric tridiagonal matrix, ascending.
/// Eigenvalues from QL; eigenvectors by inverse iteration with
/// Gram-Schmidt inside eigenvalue clusters. Vectors are l2-orthonormal and
/// satisfy ||T v - lambda v|| <= 1e-10 ||T||.
std::vector<EigenPair> sym_tridiag_eigen(std::span<const double> diag,
                                         std::span<const double> offdiag, int k);

/// Infinity norm of the tridiagonal matrix (max row sum), used as the
/// residual scale.
double tridiag_norm(std::span<const double> diag, std::span<const double> offdiag);

}  // namespace qop::numerics
