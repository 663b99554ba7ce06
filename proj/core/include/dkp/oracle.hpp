#pragma once

#include <vector>

#include "dkp/spectrum.hpp"

namespace dkp {

/// Configuration of the independent Sturm-Liouville eigensolver.  e_est is
/// the target energy scale used to validate that [0, x_max] reaches deep
/// enough into the classically forbidden region.
struct OracleConfig {
  ModelParams params;
  Parity parity = Parity::even;
  double x_max = 0.0;
  int points = 1000;
  int k = 1;  // number of eigenvalues requested
  double e_est = 0.0;
};

/// Sturm-Liouville coefficients of the reduced second-order problem
/// -(p phi')' + q phi = Lambda w phi with Lambda = E^2:
/// p = w = 1/(m+S), q = m+S, all smooth and positive since S = lambda|x|.
double sl_p(const ModelParams& p, double x);
double sl_q(const ModelParams& p, double x);
double sl_w(const ModelParams& p, double x);

/// Default half-line cutoff: deep enough that (m + lambda x)^2 exceeds
/// e_est^2 + 40 lambda and m + lambda x >= 3 |e_est|.
double oracle_x_max(const ModelParams& p, double e_est);

/// Second-order central-difference discretization on a uniform half-line
/// grid.  Even parity imposes a reflecting condition at x = 0 through a
/// ghost point (with the half-cell row scaling that keeps A symmetric);
/// odd parity and the outer boundary are Dirichlet.  The generalized
/// problem A phi = Lambda B phi is kept alongside its symmetrization
/// T = B^{-1/2} A B^{-1/2}.
struct OracleDiscretization {
  std::vector<double> a_diag, a_off;  // A, symmetric tridiagonal
  std::vector<double> b_diag;         // B, diagonal weight
  std::vector<double> t_diag, t_off;  // symmetrized T
  std::vector<double> grid;           // x of each unknown
  double h = 0.0;
  Parity parity = Parity::even;
};

OracleDiscretization discretize(const OracleConfig& config);

/// Lowest-k spectrum by Sturm-sequence bisection at config.points and at
/// twice that, combined by Richardson extrapolation (the scheme is O(h^2)).
struct OracleSpectrum {
  std::vector<double> lambdas;      // refined Lambda = E^2, increasing
  std::vector<double> energies;     // refined +sqrt(Lambda)
  std::vector<double> energies_h;   // raw grid values at config.points
  std::vector<double> energies_h2;  // raw grid values at 2 * config.points
  std::vector<double> convergence;  // |E(N) - E(2N)| per level
  int points = 0;
  double x_max = 0.0;
  double h = 0.0;
};

OracleSpectrum oracle_spectrum(const OracleConfig& config);

/// phi samples on the discretization grid for a converged raw eigenvalue
/// (inverse iteration on T, mapped back through B^{1/2}).
std::vector<double> oracle_eigenvector(const OracleDiscretization& disc, double lambda);

/// Comparison of an analytic state against the oracle spectrum: nearest
/// level, relative energy error, and weighted eigenvector overlap.
/// matched is false when no level lies within 10% of |E_state| (the
/// expected outcome for a zeta that satisfies no quantization condition).
struct CrossValidation {
  bool matched = false;
  int level = -1;
  double e_state = 0.0;
  double e_oracle = 0.0;
  double rel_error = 0.0;
  double overlap = 0.0;
  bool success = false;  // matched && rel_error < 1e-3 && overlap > 0.9999
};

CrossValidation cross_validate(const QuasiExactState& state, const OracleConfig& config);

}  // namespace dkp
