#include "dkp/laguerre.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dkp/tridiag.hpp"

namespace dkp {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt b = 1;
  for (int j = 1; j <= k; ++j) {
    b *= (n - k + j);
    b /= j;
  }
  return b;
}

double LaguerrePoly::eval(double w) const {
  const double d = denom.convert_to<double>();
  double acc = 0.0;
  for (auto it = scaled_coeffs.rbegin(); it != scaled_coeffs.rend(); ++it)
    acc = acc * w + it->convert_to<double>() / d;
  return acc;
}

double LaguerrePoly::eval_derivative(double w) const {
  const double d = denom.convert_to<double>();
  double acc = 0.0;
  for (int j = static_cast<int>(scaled_coeffs.size()) - 1; j >= 1; --j)
    acc = acc * w + j * (scaled_coeffs[j].convert_to<double>() / d);
  return acc;
}

LaguerrePoly laguerre_coeffs(int n) {
  if (n < 0) throw std::invalid_argument("laguerre_coeffs: negative degree");
  LaguerrePoly p;
  p.n = n;
  p.alpha = 1;
  p.denom = factorial(n);
  p.scaled_coeffs.resize(n + 1);
  BigInt fall = p.denom;  // n!/j!, maintained incrementally
  for (int j = 0; j <= n; ++j) {
    if (j > 0) fall /= j;
    p.scaled_coeffs[j] = binomial(n + 1, j + 1) * fall;
    if (j % 2 == 1) p.scaled_coeffs[j] = -p.scaled_coeffs[j];
  }
  return p;
}

double laguerre_eval(int n, double w) {
  if (n < 0) throw std::invalid_argument("laguerre_eval: negative degree");
  double lm1 = 0.0;  // L_{-1}
  double l = 1.0;    // L_0
  for (int k = 0; k < n; ++k) {
    const double lp1 = ((2.0 * k + 2.0 - w) * l - (k + 1.0) * lm1) / (k + 1.0);
    lm1 = l;
    l = lp1;
  }
  return l;
}

double laguerre_derivative(int n, double w) {
  if (n < 0) throw std::invalid_argument("laguerre_derivative: negative degree");
  if (n == 0) return 0.0;
  // The ladder quotient loses all accuracy as w -> 0; the coefficient
  // derivative is perfectly conditioned there.
  if (std::abs(w) < 1e-2) return laguerre_coeffs(n).eval_derivative(w);
  return (n * laguerre_eval(n, w) - (n + 1.0) * laguerre_eval(n - 1, w)) / w;
}

std::vector<double> laguerre_roots(int n) {
  if (n < 0) throw std::invalid_argument("laguerre_roots: negative degree");
  if (n == 0) return {};

  // Jacobi matrix of the alpha = 1 Laguerre weight: its eigenvalues are the
  // zeros of L_n^{(1)}.
  std::vector<double> diag(n), off(n > 1 ? n - 1 : 0);
  for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + 2.0;
  for (int k = 0; k + 1 < n; ++k) off[k] = std::sqrt((k + 1.0) * (k + 2.0));
  std::vector<double> roots = tridiag_smallest_eigenvalues(diag, off, n);

  for (int i = 0; i < n; ++i) {
    double r = roots[i];
    bool converged = false;
    for (int iter = 0; iter < 100; ++iter) {
      const double f = laguerre_eval(n, r);
      const double fp = laguerre_derivative(n, r);
      if (fp == 0.0) break;
      const double dr = f / fp;
      r -= dr;
      if (std::abs(dr) <= 1e-13 * std::abs(r)) {
        converged = true;
        break;
      }
    }
    if (!converged || !(r > 0.0))
      throw std::runtime_error("laguerre_roots: polish did not converge at index " +
                               std::to_string(i));
    roots[i] = r;
  }

  std::sort(roots.begin(), roots.end());
  for (int i = 0; i < n; ++i) {
    if (i > 0 && !(roots[i] > roots[i - 1]))
      throw std::runtime_error("laguerre_roots: roots not strictly increasing");
    const double scale = std::max(1.0, std::abs(roots[i] * laguerre_derivative(n, roots[i])));
    if (std::abs(laguerre_eval(n, roots[i])) > 1e-10 * scale)
      throw std::runtime_error("laguerre_roots: residual too large at index " +
                               std::to_string(i));
  }
  return roots;
}

namespace {

int degree(const std::vector<BigInt>& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;  // zero polynomial
}

std::vector<BigInt> trim(std::vector<BigInt> p) {
  p.resize(static_cast<std::size_t>(std::max(0, degree(p) + 1)));
  return p;
}

BigInt int_pow_early(const BigInt& x, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) A mod B, exact over the integers.
std::vector<BigInt> pseudo_rem(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  const int db = degree(b);
  const BigInt& lb = b[db];
  int da = degree(a);
  const int full = da - db + 1;
  int steps = 0;
  while (da >= db) {
    const BigInt lead = a[da];
    for (int i = 0; i <= da; ++i) a[i] *= lb;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= lead * b[i];
    a[da] = 0;
    da = degree(a);
    ++steps;
  }
  // Degree drops can skip reduction steps; pad the missing lc(B) factors so
  // the result is exactly lc(B)^(da-db+1) A mod B.
  if (steps < full) {
    const BigInt pad = int_pow_early(lb, full - steps);
    for (auto& c : a) c *= pad;
  }
  return trim(std::move(a));
}

BigInt int_pow(const BigInt& x, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

BigInt resultant(const std::vector<BigInt>& p, const std::vector<BigInt>& q) {
  std::vector<BigInt> a = trim(p), b = trim(q);
  int da = degree(a), db = degree(b);
  if (da < 0 || db < 0) return 0;
  if (da == 0 && db == 0) return 1;

  int sign = 1;
  if (da < db) {
    std::swap(a, b);
    std::swap(da, db);
    if ((da % 2 == 1) && (db % 2 == 1)) sign = -sign;
  }
  if (db == 0) return sign * int_pow(b[0], da);

  // Subresultant pseudo-remainder sequence (Brown-Traub / Collins).
  BigInt g = 1, h = 1;
  for (;;) {
    const int d = da - db;
    if ((da % 2 == 1) && (db % 2 == 1)) sign = -sign;
    std::vector<BigInt> r = pseudo_rem(a, b);
    if (degree(r) < 0) return 0;  // common factor

    a = std::move(b);
    da = db;
    const BigInt divisor = g * int_pow(h, d);
    for (auto& c : r) {
      BigInt qt = c / divisor;
      c = std::move(qt);
    }
    b = std::move(r);
    db = degree(b);

    g = a[da];
    if (d > 1) {
      // h = g^d / h^(d-1), exact in the subresultant theory
      h = int_pow(g, d) / int_pow(h, d - 1);
    } else if (d == 1) {
      h = g;
    }  // d == 0 leaves h unchanged

    if (db == 0) {
      // res = s * lc(B)^(deg A) / h^(deg A - 1)
      BigInt num = int_pow(b[0], da);
      BigInt res = num / int_pow(h, da - 1);
      return sign * res;
    }
  }
}

BigInt laguerre_resultant(int n) {
  if (n < 1) throw std::invalid_argument("laguerre_resultant: n must be >= 1");
  return resultant(laguerre_coeffs(n).scaled_coeffs,
                   laguerre_coeffs(n - 1).scaled_coeffs);
}

}  // namespace dkp
