#include "qop/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qop::numerics {

namespace {

double hypot2(double a, double b) { return std::hypot(a, b); }

// Implicit-shift QL sweep on (d, e); e[i] couples d[i] and d[i+1].
// Classic tql1 recurrence (Bowdler-Martin-Reinsch-Wilkinson lineage).
void ql_implicit(std::vector<double>& d, std::vector<double>& e) {
  const size_t n = d.size();
  if (n == 1) return;
  e.push_back(0.0);  // sweep writes e[m] with m up to n-1
  const int max_iter = 50;
  for (size_t l = 0; l < n; ++l) {
    int iter = 0;
    size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-15 * dd) break;
      }
      if (m != l) {
        if (++iter > max_iter)
          throw_numerical("sym_tridiag_eigen: QL failed to converge",
                          {"row " + std::to_string(l), "iterations " + std::to_string(iter)});
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = hypot2(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (size_t i = m; i-- > l;) {
          double f = s * e[i];
          const double bb = c * e[i];
          r = hypot2(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * bb;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - bb;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  e.pop_back();
}

// One inverse-iteration solve of (T - lambda I) x = b. LU with partial
// pivoting in the dgttrf layout; zero pivots replaced by a tiny value, as in
// the classic EISPACK tinvit.
void solve_shifted(const std::vector<double>& diag, const std::vector<double>& off, double lambda,
                   std::vector<double>& b) {
  const size_t n = diag.size();
  std::vector<double> d(n), dl(n, 0.0), du(n, 0.0), du2(n, 0.0);
  std::vector<char> piv(n, 0);
  for (size_t i = 0; i < n; ++i) d[i] = diag[i] - lambda;
  for (size_t i = 0; i + 1 < n; ++i) {
    dl[i] = off[i];
    du[i] = off[i];
  }

  for (size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      const double denom = (d[i] != 0.0) ? d[i] : 1e-280;
      const double fact = dl[i] / denom;
      dl[i] = fact;
      d[i + 1] -= fact * du[i];
    } else {
      const double fact = d[i] / dl[i];
      d[i] = dl[i];
      dl[i] = fact;
      const double temp = d[i + 1];
      d[i + 1] = du[i] - fact * temp;
      du[i] = temp;
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -fact * du2[i];
      }
      piv[i] = 1;
    }
  }

  for (size_t i = 0; i + 1 < n; ++i) {
    if (!piv[i]) {
      b[i + 1] -= dl[i] * b[i];
    } else {
      const double temp = b[i];
      b[i] = b[i + 1];
      b[i + 1] = temp - dl[i] * b[i];
    }
  }
  for (size_t ii = 0; ii < n; ++ii) {
    const size_t i = n - 1 - ii;
    double acc = b[i];
    if (i + 1 < n) acc -= du[i] * b[i + 1];
    if (i + 2 < n) acc -= du2[i] * b[i + 2];
    const double denom = (d[i] != 0.0) ? d[i] : 1e-280;
    b[i] = acc / denom;
  }
}

}  // namespace

double tridiag_norm(std::span<const double> diag, std::span<const double> offdiag) {
  const int n = static_cast<int>(diag.size());
  double m = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = std::abs(diag[static_cast<size_t>(i)]);
    if (i > 0) row += std::abs(offdiag[static_cast<size_t>(i - 1)]);
    if (i + 1 < n) row += std::abs(offdiag[static_cast<size_t>(i)]);
    m = std::max(m, row);
  }
  return m;
}

std::vector<double> tridiag_eigenvalues(std::span<const double> diag,
                                        std::span<const double> offdiag) {
  if (diag.empty()) throw_input("tridiag_eigenvalues: empty matrix");
  if (offdiag.size() + 1 != diag.size())
    throw_input("tridiag_eigenvalues: offdiag length must be diag length - 1");
  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(offdiag.begin(), offdiag.end());
  ql_implicit(d, e);
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<EigenPair> sym_tridiag_eigen(std::span<const double> diag,
                                         std::span<const double> offdiag, int k) {
  const int n = static_cast<int>(diag.size());
  if (k < 1 || k > n) throw_input("sym_tridiag_eigen: k must satisfy 1 <= k <= dimension");
  std::vector<double> vals = tridiag_eigenvalues(diag, offdiag);
  const double scale = std::max(tridiag_norm(diag, offdiag), 1e-300);
  const std::vector<double> dv(diag.begin(), diag.end());
  const std::vector<double> ev(offdiag.begin(), offdiag.end());

  std::vector<EigenPair> out;
  out.reserve(static_cast<size_t>(k));
  const double cluster_tol = 1e-8 * scale;

  for (int idx = 0; idx < k; ++idx) {
    const double lambda = vals[static_cast<size_t>(idx)];
    std::vector<double> x(static_cast<size_t>(n));
    // deterministic start vector
    for (int i = 0; i < n; ++i)
      x[static_cast<size_t>(i)] = 1.0 + 0.5 * std::sin(1.0 + 2.17 * static_cast<double>(i + idx));
    const double shift = lambda + 1e-12 * scale;
    for (int it = 0; it < 4; ++it) {
      solve_shifted(dv, ev, shift, x);
      // orthogonalise against earlier vectors of the same cluster
      for (int j = idx - 1; j >= 0; --j) {
        if (std::abs(vals[static_cast<size_t>(j)] - lambda) > cluster_tol) break;
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += out[static_cast<size_t>(j)].vector[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
        for (int i = 0; i < n; ++i) x[static_cast<size_t>(i)] -= dot * out[static_cast<size_t>(j)].vector[static_cast<size_t>(i)];
      }
      double nrm = 0.0;
      for (double v : x) nrm += v * v;
      nrm = std::sqrt(nrm);
      if (nrm == 0.0) throw_numerical("sym_tridiag_eigen: inverse iteration collapsed");
      for (double& v : x) v /= nrm;
    }
    // residual check against the documented bound
    double res = 0.0;
    for (int i = 0; i < n; ++i) {
      double t = dv[static_cast<size_t>(i)] * x[static_cast<size_t>(i)] - lambda * x[static_cast<size_t>(i)];
      if (i > 0) t += ev[static_cast<size_t>(i - 1)] * x[static_cast<size_t>(i - 1)];
      if (i + 1 < n) t += ev[static_cast<size_t>(i)] * x[static_cast<size_t>(i + 1)];
      res += t * t;
    }
    res = std::sqrt(res);
    if (res > 1e-10 * scale)
      throw_numerical("sym_tridiag_eigen: residual exceeds 1e-10 * ||T||",
                      {"eigenvalue index " + std::to_string(idx),
                       "residual " + std::to_string(res / scale) + " * ||T||"});
    out.push_back(EigenPair{lambda, std::move(x)});
  }
  return out;
}

}  // namespace qop::numerics
