#include "dkp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dkp/tridiag.hpp"

namespace dkp {

double sl_p(const ModelParams& p, double x) { return 1.0 / (p.m + p.lambda * std::abs(x)); }
double sl_q(const ModelParams& p, double x) { return p.m + p.lambda * std::abs(x); }
double sl_w(const ModelParams& p, double x) { return 1.0 / (p.m + p.lambda * std::abs(x)); }

double oracle_x_max(const ModelParams& p, double e_est) {
  const double e = std::abs(e_est);
  const double depth = (std::sqrt(e * e + 40.0 * p.lambda) - p.m) / p.lambda;
  const double reach = (3.0 * e - p.m) / p.lambda;
  return std::max({depth, reach, 2.0 * p.lambda_C});
}

OracleDiscretization discretize(const OracleConfig& config) {
  if (config.points < 1000)
    throw std::invalid_argument("discretize: needs at least 1000 grid points");
  if (!(config.x_max > 0.0)) throw std::invalid_argument("discretize: x_max must be positive");
  if (config.params.m + config.params.lambda * config.x_max < 3.0 * std::abs(config.e_est))
    throw std::invalid_argument(
        "discretize: x_max too shallow for the requested energy scale");
  if (config.k < 1 || config.k > config.points / 4)
    throw std::invalid_argument("discretize: bad eigenvalue count");

  const int npts = config.points;
  const double h = config.x_max / npts;
  const ModelParams& pp = config.params;

  OracleDiscretization d;
  d.h = h;
  d.parity = config.parity;

  const int first = config.parity == Parity::even ? 0 : 1;  // unknowns x_i, i=first..npts-1
  const int n = npts - first;
  d.a_diag.resize(n);
  d.a_off.resize(n - 1);
  d.b_diag.resize(n);
  d.grid.resize(n);

  for (int r = 0; r < n; ++r) {
    const int i = r + first;
    const double xi = i * h;
    d.grid[r] = xi;
    const double pm = sl_p(pp, xi - 0.5 * h);
    const double pl = sl_p(pp, xi + 0.5 * h);
    if (config.parity == Parity::even && i == 0) {
      // ghost point phi_{-1} = phi_1 with p even about 0; half-cell row
      d.a_diag[r] = pl / (h * h) + 0.5 * sl_q(pp, xi);
      d.b_diag[r] = 0.5 * sl_w(pp, xi);
    } else {
      d.a_diag[r] = (pm + pl) / (h * h) + sl_q(pp, xi);
      d.b_diag[r] = sl_w(pp, xi);
    }
    if (r + 1 < n) d.a_off[r] = -pl / (h * h);
  }

  d.t_diag.resize(n);
  d.t_off.resize(n - 1);
  for (int r = 0; r < n; ++r) d.t_diag[r] = d.a_diag[r] / d.b_diag[r];
  for (int r = 0; r + 1 < n; ++r)
    d.t_off[r] = d.a_off[r] / std::sqrt(d.b_diag[r] * d.b_diag[r + 1]);
  return d;
}

OracleSpectrum oracle_spectrum(const OracleConfig& config) {
  OracleDiscretization coarse = discretize(config);
  OracleConfig doubled = config;
  doubled.points = 2 * config.points;
  OracleDiscretization fine = discretize(doubled);

  const std::vector<double> lam_h =
      tridiag_smallest_eigenvalues(coarse.t_diag, coarse.t_off, config.k);
  const std::vector<double> lam_h2 =
      tridiag_smallest_eigenvalues(fine.t_diag, fine.t_off, config.k);

  OracleSpectrum spec;
  spec.points = config.points;
  spec.x_max = config.x_max;
  spec.h = coarse.h;
  spec.lambdas.resize(config.k);
  spec.energies.resize(config.k);
  spec.energies_h.resize(config.k);
  spec.energies_h2.resize(config.k);
  spec.convergence.resize(config.k);
  for (int j = 0; j < config.k; ++j) {
    if (!(lam_h[j] > 0.0) || !(lam_h2[j] > 0.0))
      throw std::runtime_error("oracle_spectrum: nonpositive E^2 eigenvalue");
    spec.energies_h[j] = std::sqrt(lam_h[j]);
    spec.energies_h2[j] = std::sqrt(lam_h2[j]);
    spec.energies[j] = (4.0 * spec.energies_h2[j] - spec.energies_h[j]) / 3.0;
    spec.lambdas[j] = spec.energies[j] * spec.energies[j];
    spec.convergence[j] = std::abs(spec.energies_h[j] - spec.energies_h2[j]);
  }
  return spec;
}

std::vector<double> oracle_eigenvector(const OracleDiscretization& disc, double lambda) {
  std::vector<double> u = tridiag_eigenvector(disc.t_diag, disc.t_off, lambda);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] /= std::sqrt(disc.b_diag[i]);
  return u;
}

CrossValidation cross_validate(const QuasiExactState& state, const OracleConfig& config) {
  if (config.parity != state.parity)
    throw std::invalid_argument("cross_validate: parity mismatch between state and config");

  const OracleSpectrum spec = oracle_spectrum(config);

  CrossValidation cv;
  cv.e_state = std::abs(state.E);  // only E^2 enters the reduced problem
  int best = 0;
  for (int j = 1; j < static_cast<int>(spec.energies.size()); ++j) {
    if (std::abs(spec.energies[j] - cv.e_state) <
        std::abs(spec.energies[best] - cv.e_state))
      best = j;
  }
  cv.level = best;
  cv.e_oracle = spec.energies[best];
  cv.rel_error = std::abs(cv.e_oracle - cv.e_state) / cv.e_state;
  cv.matched = cv.rel_error <= 0.10;

  // Weighted overlap between the oracle eigenvector (at the raw grid
  // eigenvalue, where T is exactly singular) and the analytic phi samples.
  OracleDiscretization disc = discretize(config);
  const double lam_raw = spec.energies_h[best] * spec.energies_h[best];
  const std::vector<double> num = oracle_eigenvector(disc, lam_raw);

  double dot = 0.0, nn = 0.0, aa = 0.0;
  for (std::size_t i = 0; i < num.size(); ++i) {
    const double ana = phi(state, disc.grid[i]);
    const double weight = disc.b_diag[i];
    dot += weight * num[i] * ana;
    nn += weight * num[i] * num[i];
    aa += weight * ana * ana;
  }
  cv.overlap = (nn > 0.0 && aa > 0.0) ? std::abs(dot) / std::sqrt(nn * aa) : 0.0;

  cv.success = cv.matched && cv.rel_error < 1e-3 && cv.overlap > 0.9999;
  return cv;
}

}  // namespace dkp
