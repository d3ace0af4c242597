#pragma once

#include <complex>
#include <vector>

#include "qop/grid.hpp"

namespace qop::numerics {

/// Small dense complex matrix, column-major. Sized for boundary-trace work
/// (ambient dimension <= 8), not for discretised operators.
struct CMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Complex> data;

  CMatrix() = default;
  CMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * static_cast<size_t>(c), Complex(0.0)) {}

  Complex& at(int r, int c) { return data[static_cast<size_t>(c) * static_cast<size_t>(rows) + static_cast<size_t>(r)]; }
  const Complex& at(int r, int c) const {
    return data[static_cast<size_t>(c) * static_cast<size_t>(rows) + static_cast<size_t>(r)];
  }

  static CMatrix identity(int n);
  CMatrix adjoint() const;
  CMatrix multiply(const CMatrix& other) const;
  std::vector<Complex> column(int c) const;
};

struct HermitianEigen {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // orthonormal columns
};

/// Dense real symmetric eigendecomposition (cyclic Jacobi), ascending.
void real_sym_eigen(std::vector<double>& a, int n, std::vector<double>& values,
                    std::vector<double>& vectors);

/// Complex hermitian eigendecomposition via the real-symmetric doubling
/// embedding [[A,-B],[B,A]] of H = A + iB. The doubled spectrum carries each
/// eigenvalue twice; duplicates are paired at 1e-9 relative tolerance and a
/// single complex eigenvector is extracted per pair.
HermitianEigen hermitian_eigen(const CMatrix& h);

/// Orthonormal basis of ker M: right singular vectors with singular value
/// <= rel_tol * sigma_max.
CMatrix nullspace(const CMatrix& m, double rel_tol = 1e-9);

/// Orthonormalise the columns of V (modified Gram-Schmidt, drop tolerance
/// relative to the largest column norm).
CMatrix orthonormal_columns(const CMatrix& v, double drop_tol = 1e-12);

}  // namespace qop::numerics
