#include "qop/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qop::numerics {

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(c, r) = std::conj(at(r, c));
  return m;
}

CMatrix CMatrix::multiply(const CMatrix& other) const {
  if (cols != other.rows) throw_structural("CMatrix: dimension mismatch in multiply");
  CMatrix m(rows, other.cols);
  for (int c = 0; c < other.cols; ++c)
    for (int k = 0; k < cols; ++k) {
      const Complex s = other.at(k, c);
      if (s == Complex(0.0)) continue;
      for (int r = 0; r < rows; ++r) m.at(r, c) += at(r, k) * s;
    }
  return m;
}

std::vector<Complex> CMatrix::column(int c) const {
  std::vector<Complex> v(static_cast<size_t>(rows));
  for (int r = 0; r < rows; ++r) v[static_cast<size_t>(r)] = at(r, c);
  return v;
}

// Cyclic Jacobi; adequate and robust at trace-space sizes.
void real_sym_eigen(std::vector<double>& a, int n, std::vector<double>& values,
                    std::vector<double>& vectors) {
  auto A = [&](int r, int c) -> double& { return a[static_cast<size_t>(r) * static_cast<size_t>(n) + static_cast<size_t>(c)]; };
  std::vector<double> v(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);
  auto V = [&](int r, int c) -> double& { return v[static_cast<size_t>(r) * static_cast<size_t>(n) + static_cast<size_t>(c)]; };
  for (int i = 0; i < n; ++i) V(i, i) = 1.0;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += A(p, q) * A(p, q);
    if (off <= 1e-30) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = V(k, p), vkq = V(k, q);
          V(k, p) = c * vkp - s * vkq;
          V(k, q) = s * vkp + c * vkq;
        }
      }
  }

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return A(i, i) < A(j, j); });

  values.assign(static_cast<size_t>(n), 0.0);
  vectors.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);
  for (int c = 0; c < n; ++c) {
    values[static_cast<size_t>(c)] = A(order[static_cast<size_t>(c)], order[static_cast<size_t>(c)]);
    for (int r = 0; r < n; ++r)
      vectors[static_cast<size_t>(c) * static_cast<size_t>(n) + static_cast<size_t>(r)] = V(r, order[static_cast<size_t>(c)]);
  }
}

HermitianEigen hermitian_eigen(const CMatrix& h) {
  if (h.rows != h.cols) throw_structural("hermitian_eigen: matrix must be square");
  const int n = h.rows;
  const int m = 2 * n;
  std::vector<double> s(static_cast<size_t>(m) * static_cast<size_t>(m), 0.0);
  auto S = [&](int r, int c) -> double& { return s[static_cast<size_t>(r) * static_cast<size_t>(m) + static_cast<size_t>(c)]; };
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const Complex z = 0.5 * (h.at(r, c) + std::conj(h.at(c, r)));  // enforce hermiticity
      S(r, c) = z.real();
      S(r + n, c + n) = z.real();
      S(r, c + n) = -z.imag();
      S(r + n, c) = z.imag();
    }

  std::vector<double> vals, vecs;
  real_sym_eigen(s, m, vals, vecs);

  const double scale = std::max(std::abs(vals.front()), std::abs(vals.back()));
  const double pair_tol = 1e-9 * std::max(scale, 1e-300);

  HermitianEigen out;
  out.vectors = CMatrix(n, n);
  int taken = 0;
  for (int c = 0; c < m && taken < n; ++c) {
    std::vector<Complex> z(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r)
      z[static_cast<size_t>(r)] = Complex(vecs[static_cast<size_t>(c) * static_cast<size_t>(m) + static_cast<size_t>(r)],
                                          vecs[static_cast<size_t>(c) * static_cast<size_t>(m) + static_cast<size_t>(r + n)]);
    // project out already-accepted vectors of the same (paired) eigenvalue
    for (int j = 0; j < taken; ++j) {
      if (std::abs(out.values[static_cast<size_t>(j)] - vals[static_cast<size_t>(c)]) > std::max(pair_tol, 1e-12)) continue;
      Complex dot = 0.0;
      for (int r = 0; r < n; ++r) dot += std::conj(out.vectors.at(r, j)) * z[static_cast<size_t>(r)];
      for (int r = 0; r < n; ++r) z[static_cast<size_t>(r)] -= dot * out.vectors.at(r, j);
    }
    double nrm = 0.0;
    for (const Complex& x : z) nrm += std::norm(x);
    nrm = std::sqrt(nrm);
    if (nrm < 0.5) continue;  // duplicate copy from the doubling
    out.values.push_back(vals[static_cast<size_t>(c)]);
    for (int r = 0; r < n; ++r) out.vectors.at(r, taken) = z[static_cast<size_t>(r)] / nrm;
    ++taken;
  }
  if (taken != n) throw_numerical("hermitian_eigen: deduplication failed to extract a full basis");
  return out;
}

CMatrix nullspace(const CMatrix& m, double rel_tol) {
  if (m.cols == 0) return CMatrix(0, 0);
  if (m.rows == 0) return CMatrix::identity(m.cols);
  const CMatrix g = m.adjoint().multiply(m);
  const HermitianEigen eig = hermitian_eigen(g);
  const double smax = std::sqrt(std::max(eig.values.back(), 0.0));
  const double cut = rel_tol * std::max(smax, 0.0);
  int dim = 0;
  for (double lam : eig.values)
    if (std::sqrt(std::max(lam, 0.0)) <= cut || smax == 0.0) ++dim;
  CMatrix out(m.cols, dim);
  int c = 0;
  for (int i = 0; i < static_cast<int>(eig.values.size()); ++i) {
    if (!(std::sqrt(std::max(eig.values[static_cast<size_t>(i)], 0.0)) <= cut || smax == 0.0)) continue;
    for (int r = 0; r < m.cols; ++r) out.at(r, c) = eig.vectors.at(r, i);
    ++c;
  }
  return out;
}

CMatrix orthonormal_columns(const CMatrix& v, double drop_tol) {
  double biggest = 0.0;
  for (int c = 0; c < v.cols; ++c) {
    double nrm = 0.0;
    for (int r = 0; r < v.rows; ++r) nrm += std::norm(v.at(r, c));
    biggest = std::max(biggest, std::sqrt(nrm));
  }
  const double cut = drop_tol * std::max(biggest, 1e-300);

  std::vector<std::vector<Complex>> kept;
  for (int c = 0; c < v.cols; ++c) {
    std::vector<Complex> col = v.column(c);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : kept) {
        Complex dot = 0.0;
        for (int r = 0; r < v.rows; ++r) dot += std::conj(u[static_cast<size_t>(r)]) * col[static_cast<size_t>(r)];
        for (int r = 0; r < v.rows; ++r) col[static_cast<size_t>(r)] -= dot * u[static_cast<size_t>(r)];
      }
    double nrm = 0.0;
    for (const Complex& x : col) nrm += std::norm(x);
    nrm = std::sqrt(nrm);
    if (nrm <= cut) continue;
    for (Complex& x : col) x /= nrm;
    kept.push_back(std::move(col));
  }
  CMatrix out(v.rows, static_cast<int>(kept.size()));
  for (int c = 0; c < out.cols; ++c)
    for (int r = 0; r < v.rows; ++r) out.at(r, c) = kept[static_cast<size_t>(c)][static_cast<size_t>(r)];
  return out;
}

}  // namespace qop::numerics
