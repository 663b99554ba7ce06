#include "dkp/spectrum.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "dkp/quadrature.hpp"

namespace dkp {

namespace {

double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

void validate_mass_slope(double m, double lambda) {
  if (!(m > 0.0)) throw std::invalid_argument("ModelParams: mass must be positive");
  if (!(lambda > 0.0))
    throw std::invalid_argument("ModelParams: potential slope must be positive");
}

}  // namespace

ModelParams ModelParams::from_m_lambda(double m, double lambda) {
  validate_mass_slope(m, lambda);
  ModelParams p;
  p.m = m;
  p.lambda = lambda;
  p.g = lambda / (m * m);
  p.zeta = 1.0 / p.g;
  p.lambda_C = 1.0 / m;
  return p;
}

ModelParams ModelParams::from_m_zeta(double m, double zeta) {
  if (!(zeta > 0.0)) throw std::invalid_argument("ModelParams: zeta must be positive");
  return from_m_lambda(m, m * m / zeta);
}

double t_of_x(double x, const ModelParams& p) {
  const double z = 1.0 + std::abs(x) / (p.zeta * p.lambda_C);
  return p.zeta * z * z;
}

double dt_dx(double x, const ModelParams& p) {
  const double z = 1.0 + std::abs(x) / (p.zeta * p.lambda_C);
  return sgn(x) * 2.0 * z / p.lambda_C;
}

double even_condition_residual(int n, double zeta) {
  const double ln = laguerre_eval(n, zeta);
  if (ln == 0.0) return std::numeric_limits<double>::infinity();
  const double lnm1 = n >= 1 ? laguerre_eval(n - 1, zeta) : 0.0;
  return std::abs(1.0 - zeta / (2.0 * (n + 1)) - lnm1 / ln);
}

std::vector<BigInt> even_condition_poly(int n) {
  if (n < 0) throw std::invalid_argument("even_condition_poly: negative degree");
  const auto cn = laguerre_coeffs(n).scaled_coeffs;  // C_n = n! L_n
  std::vector<BigInt> p(n + 2, BigInt(0));
  const BigInt two_np1 = 2 * (n + 1);
  for (int j = 0; j <= n; ++j) {
    p[j] += two_np1 * cn[j];
    p[j + 1] -= cn[j];
  }
  if (n >= 1) {
    const auto cnm1 = laguerre_coeffs(n - 1).scaled_coeffs;  // (n-1)! L_{n-1}
    for (int j = 0; j <= n - 1; ++j) p[j] -= two_np1 * BigInt(n) * cnm1[j];
  }
  return p;
}

namespace {

// (2(n+1) - zeta) L_n - 2(n+1) L_{n-1}, evaluated through the stable
// recurrence; same polynomial as even_condition_poly up to the n! scale.
double even_poly_value(int n, double zeta) {
  const double lnm1 = n >= 1 ? laguerre_eval(n - 1, zeta) : 0.0;
  return (2.0 * (n + 1) - zeta) * laguerre_eval(n, zeta) - 2.0 * (n + 1) * lnm1;
}

double even_poly_derivative(int n, double zeta) {
  const double dn = laguerre_derivative(n, zeta);
  const double dnm1 = n >= 1 ? laguerre_derivative(n - 1, zeta) : 0.0;
  return -laguerre_eval(n, zeta) + (2.0 * (n + 1) - zeta) * dn - 2.0 * (n + 1) * dnm1;
}

}  // namespace

std::vector<double> even_zeta_roots(int n) {
  if (n < 0) throw std::invalid_argument("even_zeta_roots: negative degree");

  const double hi = 4.0 * (n + 1) + 10.0;
  const int segments = 2000 + 1000 * n;
  const double step = hi / segments;

  std::vector<double> roots;
  double x0 = 0.0, f0 = even_poly_value(n, 0.0);  // = 2(n+1) > 0
  for (int i = 1; i <= segments; ++i) {
    const double x1 = i * step;
    const double f1 = even_poly_value(n, x1);
    if (f1 == 0.0 || f0 * f1 < 0.0) {
      double a = x0, b = x1, fa = f0;
      for (int iter = 0; iter < 80; ++iter) {
        const double mid = 0.5 * (a + b);
        const double fmid = even_poly_value(n, mid);
        if (fa * fmid <= 0.0)
          b = mid;
        else {
          a = mid;
          fa = fmid;
        }
      }
      double r = 0.5 * (a + b);
      for (int iter = 0; iter < 60; ++iter) {
        const double fp = even_poly_derivative(n, r);
        if (fp == 0.0) break;
        const double dr = even_poly_value(n, r) / fp;
        r -= dr;
        if (std::abs(dr) <= 1e-14 * std::max(std::abs(r), 1e-6)) break;
      }
      if (r > 0.0 && (roots.empty() || r > roots.back() + 1e-12)) {
        // A root of P where L_n also vanishes would be a pole of the
        // rational form, not a quantization point.  The degeneracy scan
        // certifies this never happens, but guard regardless.
        const double lscale =
            std::max(1.0, std::abs(r * laguerre_derivative(n, r)));
        if (std::abs(laguerre_eval(n, r)) > 1e-12 * lscale) {
          if (even_condition_residual(n, r) >= 1e-10)
            throw std::runtime_error(
                "even_zeta_roots: residual too large after polish near zeta = " +
                std::to_string(r));
          roots.push_back(r);
        }
      }
    }
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

std::vector<double> odd_zeta_roots(int n) { return laguerre_roots(n); }

double energy(int n, double zeta, double m, int sign) {
  if (n < 0) throw std::invalid_argument("energy: negative quantum number");
  if (!(zeta > 0.0)) throw std::invalid_argument("energy: zeta must be positive");
  if (!(m > 0.0)) throw std::invalid_argument("energy: mass must be positive");
  if (sign != +1 && sign != -1) throw std::invalid_argument("energy: sign must be +-1");
  return sign * 2.0 * m * std::sqrt(n + 1.0) / std::sqrt(zeta);
}

BoundaryValues boundary_values(int n, double zeta, const ModelParams& p, double norm) {
  const double ln = laguerre_eval(n, zeta);
  const double lnm1 = n >= 1 ? laguerre_eval(n - 1, zeta) : 0.0;
  const double damp = std::exp(-zeta / 2.0);
  BoundaryValues b;
  b.phi0 = norm * zeta * damp * ln;
  b.dphi0 = 2.0 * norm * damp * (n + 1.0) / p.lambda_C *
            ((1.0 - zeta / (2.0 * (n + 1))) * ln - lnm1);
  return b;
}

namespace {

QuasiExactState assemble_state(int n, Parity parity, double zeta, int energy_sign,
                               double m, bool quantized) {
  QuasiExactState s;
  s.n = n;
  s.parity = parity;
  s.zeta = zeta;
  s.energy_sign = energy_sign;
  s.params = ModelParams::from_m_zeta(m, zeta);
  s.E = energy(n, zeta, m, energy_sign);
  s.epsilon = s.E / (s.params.g * m);
  s.quantized = quantized;
  normalize_state(s);
  return s;
}

}  // namespace

QuasiExactState make_state(int n, Parity parity, int root_index, int energy_sign,
                           double m) {
  const std::vector<double> roots =
      parity == Parity::even ? even_zeta_roots(n) : odd_zeta_roots(n);
  if (roots.empty())
    throw std::runtime_error("make_state: no quantization roots for n = " +
                             std::to_string(n) +
                             (parity == Parity::even ? " (even)" : " (odd)"));
  if (root_index < 0 || root_index >= static_cast<int>(roots.size()))
    throw std::out_of_range("make_state: root index out of range");
  return assemble_state(n, parity, roots[root_index], energy_sign, m, true);
}

QuasiExactState make_trial_state(int n, Parity parity, double zeta, int energy_sign,
                                 double m) {
  if (!(zeta > 0.0)) throw std::invalid_argument("make_trial_state: zeta must be positive");
  return assemble_state(n, parity, zeta, energy_sign, m, false);
}

double norm_delta_closed_form(int n, double zeta) {
  using BF = boost::multiprecision::cpp_bin_float_100;

  // t [L_n^{(1)}(t)]^2 expanded exactly in powers of t; the alternating
  // pieces of the incomplete-gamma sum cancel heavily at larger n, hence
  // the wide working precision.
  const auto c = laguerre_coeffs(n).scaled_coeffs;
  std::vector<BigInt> sq(2 * n + 1, BigInt(0));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) sq[i + j] += c[i] * c[j];

  const BF denom = BF(factorial(n)) * BF(factorial(n));
  const BF z = zeta;
  const BF ez = exp(-z);

  // Gamma(k+1, zeta) by upward recurrence from Gamma(1, zeta) = e^{-zeta}.
  BF gamma_k = ez;  // Gamma(1, zeta)
  BF zpow = 1;      // zeta^k
  BF delta = 0;
  for (int k = 1; k <= 2 * n + 1; ++k) {
    zpow *= z;
    gamma_k = k * gamma_k + zpow * ez;  // Gamma(k+1, zeta)
    delta += (BF(sq[k - 1]) / denom) * gamma_k;
  }
  return delta.convert_to<double>();
}

double norm_delta_quadrature(int n, double zeta) {
  // e^{-t} t^{2n+1} is negligible beyond this point for every n of interest
  const double upper = zeta + 25.0 * (n + 1) + 60.0;
  auto f = [n](double t) {
    const double l = laguerre_eval(n, t);
    return t * std::exp(-t) * l * l;
  };
  return adaptive_simpson(f, zeta, upper, 1e-13 * (n + 1.0));
}

Normalization normalize_state(QuasiExactState& s) {
  const double closed = norm_delta_closed_form(s.n, s.zeta);
  const double quad = norm_delta_quadrature(s.n, s.zeta);
  if (std::abs(closed - quad) > 1e-10 * std::max(1.0, std::abs(closed)))
    throw std::runtime_error("normalize_state: quadrature cross-check failed");
  s.delta = closed;
  s.N = std::sqrt(s.params.lambda / (s.delta * std::abs(s.E)));
  return {s.delta, s.N};
}

namespace {

double phi_half(const QuasiExactState& s, double ax) {
  const double t = t_of_x(ax, s.params);
  return s.N * t * std::exp(-t / 2.0) * laguerre_eval(s.n, t);
}

// d phi_half / dt with the ladder identity t L' = n L_n - (n+1) L_{n-1}
// folded in, so no derivative evaluation is needed:
//   d/dt [t e^{-t/2} L_n] = e^{-t/2} [ (n+1-t/2) L_n - (n+1) L_{n-1} ].
double dphi_half_dt(const QuasiExactState& s, double t) {
  const double ln = laguerre_eval(s.n, t);
  const double lnm1 = s.n >= 1 ? laguerre_eval(s.n - 1, t) : 0.0;
  return s.N * std::exp(-t / 2.0) * ((s.n + 1.0 - t / 2.0) * ln - (s.n + 1.0) * lnm1);
}

}  // namespace

double phi(const QuasiExactState& s, double x) {
  const double base = phi_half(s, std::abs(x));
  return s.parity == Parity::even ? base : sgn(x) * base;
}

double dphi_dx(const QuasiExactState& s, double x) {
  const double t = t_of_x(x, s.params);
  const double dpdt = dphi_half_dt(s, t);
  if (s.parity == Parity::even) return dpdt * dt_dx(x, s.params);
  // odd: derivative of sgn(x) phi_half(|x|) is even in x and continuous at 0
  const double z = 1.0 + std::abs(x) / (s.params.zeta * s.params.lambda_C);
  return dpdt * 2.0 * z / s.params.lambda_C;
}

EigenfunctionTable eigenfunction_table(const QuasiExactState& s, double x_max,
                                       int samples, bool scaled) {
  if (!(x_max > 0.0)) throw std::invalid_argument("eigenfunction_table: x_max must be positive");
  if (samples < 2) throw std::invalid_argument("eigenfunction_table: needs at least 2 samples");
  if (!(s.N > 0.0)) throw std::invalid_argument("eigenfunction_table: unnormalized state");

  EigenfunctionTable tb;
  tb.parity = s.parity;
  tb.scaled = scaled;
  tb.x.resize(samples);
  tb.phi.resize(samples);
  tb.phi2.resize(samples);
  tb.phi3_im.resize(samples);
  tb.j0.resize(samples);
  tb.j1.assign(samples, 0.0);  // Im of a real product

  const double h = 2.0 * x_max / (samples - 1);
  const double par = s.parity == Parity::even ? 1.0 : -1.0;

  // Fill the right half, then mirror, so parity holds bit-exactly.
  for (int i = (samples - 1) / 2; i < samples; ++i) {
    double xi = -x_max + i * h;
    if (2 * i == samples - 1) xi = 0.0;
    const double ms = s.params.m + s.params.lambda * std::abs(xi);
    const double ph = phi(s, xi);
    const double dph = dphi_dx(s, xi);
    tb.x[i] = xi;
    tb.phi[i] = ph;
    tb.phi2[i] = s.E * ph / ms;
    tb.phi3_im[i] = dph / ms;
    tb.j0[i] = s.E * ph * ph / ms;

    const int mi = samples - 1 - i;
    if (mi != i) {
      tb.x[mi] = -xi;
      tb.phi[mi] = par * ph;
      tb.phi2[mi] = par * tb.phi2[i];
      tb.phi3_im[mi] = tb.phi3_im[i] * (s.parity == Parity::even ? -1.0 : 1.0);
      tb.j0[mi] = tb.j0[i];
    }
  }

  if (scaled) {
    const double sq = std::sqrt(s.params.lambda_C);
    for (int i = 0; i < samples; ++i) {
      tb.x[i] /= s.params.lambda_C;
      tb.phi[i] *= sq;
      tb.phi2[i] *= sq;
      tb.phi3_im[i] *= sq;
      tb.j0[i] *= s.params.lambda_C;
    }
  }
  return tb;
}

double auto_x_max(const QuasiExactState& s) {
  if (!(s.N > 0.0)) throw std::invalid_argument("auto_x_max: unnormalized state");
  const double step = 0.02 * s.params.lambda_C;
  double peak = std::abs(phi_half(s, 0.0));
  double x = 0.0;
  for (int i = 1; i < 2000000; ++i) {
    x = i * step;
    const double v = std::abs(phi_half(s, x));
    peak = std::max(peak, v);
    if (x > s.params.lambda_C && v < 1e-10 * peak) return x;
  }
  throw std::runtime_error("auto_x_max: eigenfunction did not decay");
}

int count_nodes(const EigenfunctionTable& t) {
  double peak = 0.0;
  for (double v : t.phi) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 0;

  int nodes = 0;
  double prev = 0.0;
  for (double v : t.phi) {
    if (std::abs(v) <= 1e-14 * peak) continue;  // treat as exact zero sample
    if (prev != 0.0 && v * prev < 0.0) ++nodes;
    prev = v;
  }
  return nodes;
}

DegeneracyReport degeneracy_scan(int n_max) {
  if (n_max < 1) throw std::invalid_argument("degeneracy_scan: n_max must be >= 1");
  DegeneracyReport rep;
  rep.no_degeneracy = true;
  rep.rows.reserve(n_max);
  std::vector<double> prev_roots;  // roots of L_{n-1}
  for (int n = 1; n <= n_max; ++n) {
    DegeneracyRow row;
    row.n = n;
    const BigInt res = laguerre_resultant(n);
    row.resultant_nonzero = res != 0;
    row.resultant_digits = static_cast<int>(res.str().size() - (res < 0 ? 1 : 0));
    const std::vector<double> roots = laguerre_roots(n);
    if (!prev_roots.empty()) {
      double sep = std::numeric_limits<double>::infinity();
      for (double a : roots)
        for (double b : prev_roots) sep = std::min(sep, std::abs(a - b));
      row.min_root_separation = sep;
    }
    rep.no_degeneracy = rep.no_degeneracy && row.resultant_nonzero;
    rep.rows.push_back(std::move(row));
    prev_roots = roots;
  }
  return rep;
}

double charge_integral(const QuasiExactState& s) {
  if (!(s.N > 0.0)) throw std::invalid_argument("charge_integral: unnormalized state");
  // integrate to where t e^{-t} [L_n]^2 has died off, cf. the delta tail
  const double t_stop = s.zeta + 25.0 * (s.n + 1) + 60.0;
  const double z_stop = std::sqrt(t_stop / s.zeta);
  const double x_stop = (z_stop - 1.0) * s.zeta * s.params.lambda_C;
  auto f = [&s](double x) {
    const double ms = s.params.m + s.params.lambda * x;
    const double ph = phi_half(s, x);
    return s.E * ph * ph / ms;
  };
  return 2.0 * adaptive_simpson(f, 0.0, x_stop, 1e-11);
}

}  // namespace dkp
