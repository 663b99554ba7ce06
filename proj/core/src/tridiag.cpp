#include "dkp/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace dkp {

int sturm_count(const std::vector<double>& diag, const std::vector<double>& off,
                double sigma) {
  const std::size_t n = diag.size();
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    double coupling = 0.0;
    if (i > 0) {
      if (q == 0.0) q = -1e-300;  // pushed off the exact pivot breakdown
      coupling = off[i - 1] * off[i - 1] / q;
    }
    q = diag[i] - sigma - coupling;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> tridiag_smallest_eigenvalues(const std::vector<double>& diag,
                                                 const std::vector<double>& off,
                                                 int k, double rel_tol) {
  const int n = static_cast<int>(diag.size());
  if (k < 1 || k > n) throw std::invalid_argument("tridiag: bad eigenvalue count");
  if (off.size() + 1 != diag.size())
    throw std::invalid_argument("tridiag: off-diagonal size mismatch");

  // Gershgorin bounds
  double lo = diag[0], hi = diag[0];
  for (int i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(off[i - 1]);
    if (i + 1 < n) r += std::abs(off[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  const double pad = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
  lo -= pad;
  hi += pad;

  std::vector<double> eigs(k);
  for (int j = 0; j < k; ++j) {
    double a = lo, b = hi;
    bool converged = false;
    for (int iter = 0; iter < 300; ++iter) {
      const double mid = 0.5 * (a + b);
      if (sturm_count(diag, off, mid) >= j + 1)
        b = mid;
      else
        a = mid;
      if (b - a <= rel_tol * std::max({1.0, std::abs(a), std::abs(b)})) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw std::runtime_error("tridiag: bisection did not converge at eigenvalue " +
                               std::to_string(j));
    eigs[j] = 0.5 * (a + b);
    lo = a;  // eigenvalues are sought in ascending order
  }
  return eigs;
}

namespace {

// Solve (T - lambda I) x = rhs in place, T symmetric tridiagonal, with
// partial pivoting (fill-in limited to a second superdiagonal).
void shifted_solve(const std::vector<double>& diag, const std::vector<double>& off,
                   double lambda, std::vector<double>& rhs) {
  const int n = static_cast<int>(diag.size());
  std::vector<double> d(n), u1(n > 1 ? n - 1 : 0, 0.0), u2(n > 2 ? n - 2 : 0, 0.0);
  for (int i = 0; i < n; ++i) d[i] = diag[i] - lambda;
  for (int i = 0; i + 1 < n; ++i) u1[i] = off[i];

  const double tiny = 1e-300;
  for (int i = 0; i + 1 < n; ++i) {
    double below = off[i];  // row i+1, column i
    if (std::abs(d[i]) < std::abs(below)) {
      std::swap(d[i], below);
      std::swap(u1[i], d[i + 1]);
      if (i + 2 < n) std::swap(u2[i], u1[i + 1]);
      std::swap(rhs[i], rhs[i + 1]);
    }
    if (d[i] == 0.0) d[i] = tiny;
    const double m = below / d[i];
    d[i + 1] -= m * u1[i];
    if (i + 2 < n) u1[i + 1] -= m * u2[i];
    rhs[i + 1] -= m * rhs[i];
  }
  if (d[n - 1] == 0.0) d[n - 1] = tiny;

  for (int i = n - 1; i >= 0; --i) {
    double s = rhs[i];
    if (i + 1 < n) s -= u1[i] * rhs[i + 1];
    if (i + 2 < n) s -= u2[i] * rhs[i + 2];
    rhs[i] = s / d[i];
  }
}

}  // namespace

std::vector<double> tridiag_eigenvector(const std::vector<double>& diag,
                                        const std::vector<double>& off,
                                        double lambda) {
  const int n = static_cast<int>(diag.size());
  if (n == 0) return {};
  std::vector<double> v(n);
  // deterministic, not eigenvector-orthogonal start
  for (int i = 0; i < n; ++i) v[i] = 1.0 + 1e-3 * ((i * 2654435761u) % 97);

  auto normalize = [&v, n]() {
    double s = 0.0;
    for (double x : v) s += x * x;
    s = std::sqrt(s);
    if (s == 0.0) throw std::runtime_error("tridiag: inverse iteration broke down");
    for (int i = 0; i < n; ++i) v[i] /= s;
  };
  normalize();
  for (int pass = 0; pass < 4; ++pass) {
    shifted_solve(diag, off, lambda, v);
    normalize();
  }

  int imax = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
  if (v[imax] < 0.0)
    for (int i = 0; i < n; ++i) v[i] = -v[i];
  return v;
}

}  // namespace dkp
