#pragma once

#include <optional>
#include <vector>

#include "dkp/laguerre.hpp"

namespace dkp {

enum class Parity { even, odd };

/// Physical parameters in natural units (hbar = c = 1): mass m and slope
/// lambda of the confining scalar potential S(x) = lambda |x|, together with
/// the derived dimensionless coupling g = lambda/m^2, its inverse
/// zeta = 1/g, and the Compton length lambda_C = 1/m.
struct ModelParams {
  double m = 1.0;
  double lambda = 1.0;
  double g = 1.0;
  double zeta = 1.0;
  double lambda_C = 1.0;

  static ModelParams from_m_lambda(double m, double lambda);
  static ModelParams from_m_zeta(double m, double zeta);
};

/// One quantized bound state.  The quantization root zeta fixes the
/// potential slope lambda = m^2/zeta for which the level exists;
/// E = energy_sign * 2m sqrt(n+1)/sqrt(zeta).
struct QuasiExactState {
  int n = 0;
  Parity parity = Parity::even;
  double zeta = 0.0;
  int energy_sign = +1;
  double E = 0.0;
  double epsilon = 0.0;  // E/(g m), bookkeeping only
  double delta = 0.0;    // tail integral of t e^{-t} [L_n^{(1)}]^2 over [zeta, inf)
  double N = 0.0;        // charge-normalization constant
  ModelParams params;
  bool quantized = true;  // false for trial states built at arbitrary zeta
};

/// Sampled eigenfunction and current data on a symmetric grid.  The scalar
/// reduced problem serves both DKP sectors: the remaining spinor components
/// vanish identically (spin-0: Psi4 = Psi5 = 0; spin-1: Psi8 = 0).
/// When scaled, phi-like columns carry sqrt(lambda_C), currents lambda_C,
/// and x is in units of lambda_C, as in the dimensionless presentation.
struct EigenfunctionTable {
  std::vector<double> x;
  std::vector<double> phi;
  std::vector<double> phi2;     // E phi / (m+S)
  std::vector<double> phi3_im;  // Im phi3 = (dphi/dx) / (m+S); phi3 is purely imaginary
  std::vector<double> j0;       // E phi^2 / (m+S)
  std::vector<double> j1;       // identically zero for real bound states
  Parity parity = Parity::even;
  bool scaled = false;
};

/// t(x) = zeta (1 + |x|/(zeta lambda_C))^2; t(0) = zeta, increasing in |x|.
double t_of_x(double x, const ModelParams& p);
/// dt/dx = sgn(x) 2 sqrt(t/zeta) / lambda_C (0 at the origin).
double dt_dx(double x, const ModelParams& p);

/// Even-parity quantization condition residual
/// |1 - zeta/(2(n+1)) - L_{n-1}^{(1)}(zeta)/L_n^{(1)}(zeta)|.
double even_condition_residual(int n, double zeta);

/// Exact integer coefficients (ascending) of the cleared-denominator
/// even-parity condition polynomial
///   n! P(zeta) = (2(n+1) - zeta) C_n(zeta) - 2(n+1) n C_{n-1}(zeta),
/// with C_k = k! L_k^{(1)}.  Degree n+1.
std::vector<BigInt> even_condition_poly(int n);

/// Positive roots of the even-parity condition, ascending.  Sign-change
/// scan of P on (0, 4(n+1)+10] followed by bisection and Newton polish;
/// roots that would coincide with zeros of L_n^{(1)} are discarded.
std::vector<double> even_zeta_roots(int n);

/// Odd-parity quantization roots: the zeros of L_n^{(1)}.  Empty for n = 0.
std::vector<double> odd_zeta_roots(int n);

/// E = sign * 2m sqrt(n+1) / sqrt(zeta).
double energy(int n, double zeta, double m, int sign);

struct BoundaryValues {
  double phi0;   // phi at 0+
  double dphi0;  // dphi/dx at 0+
};

/// Half-line boundary data:
///   phi(0+)      = N zeta e^{-zeta/2} L_n^{(1)}(zeta)
///   phi'(0+)     = (2N e^{-zeta/2}(n+1)/lambda_C)
///                  { [1 - zeta/(2(n+1))] L_n^{(1)}(zeta) - L_{n-1}^{(1)}(zeta) }.
/// An even extension is lawful iff phi'(0+) = 0, an odd one iff phi(0+) = 0.
BoundaryValues boundary_values(int n, double zeta, const ModelParams& p, double norm = 1.0);

/// Build and normalize the state selected by root_index within the
/// even/odd quantization roots of quantum number n.
QuasiExactState make_state(int n, Parity parity, int root_index, int energy_sign, double m);

/// Build a state at an arbitrary zeta, bypassing the quantization
/// condition.  Used as a negative control against the numerical oracle;
/// its whole-line parity extension is not lawful unless zeta is a root.
QuasiExactState make_trial_state(int n, Parity parity, double zeta, int energy_sign,
                                 double m);

struct Normalization {
  double delta;
  double N;
};

/// delta = int_zeta^inf t e^{-t} [L_n^{(1)}(t)]^2 dt, closed form via the
/// upper-incomplete-gamma recurrence, cross-checked against adaptive
/// quadrature to 1e-10; N = sqrt(lambda / (delta |E|)).  With this N the
/// total charge integrates to sign(E) * 1.
Normalization normalize_state(QuasiExactState& s);

double norm_delta_closed_form(int n, double zeta);
double norm_delta_quadrature(int n, double zeta);

/// Whole-line charge integral of J^0 for a normalized state; equals
/// sign(E) to quadrature accuracy.
double charge_integral(const QuasiExactState& s);

/// Pointwise eigenfunction and its analytic derivative (chain rule through
/// the Laguerre ladder identity, no finite differences).
double phi(const QuasiExactState& s, double x);
double dphi_dx(const QuasiExactState& s, double x);

/// Symmetric table on [-x_max, x_max]; parity symmetry is exact by
/// construction (mirrored samples).  samples >= 2; odd sample counts place
/// one sample exactly at x = 0.  Rejects unnormalized states.
EigenfunctionTable eigenfunction_table(const QuasiExactState& s, double x_max,
                                       int samples, bool scaled = false);

/// Smallest x where |phi| has fallen below 1e-10 of its peak.
double auto_x_max(const QuasiExactState& s);

/// Sign changes between consecutive samples; a zero sample (the origin of
/// an odd state) separates the flanking signs and is counted once.
int count_nodes(const EigenfunctionTable& t);

struct DegeneracyRow {
  int n;
  bool resultant_nonzero;
  int resultant_digits;
  std::optional<double> min_root_separation;  // empty for n = 1 (L_0 has no zeros)
};

struct DegeneracyReport {
  std::vector<DegeneracyRow> rows;
  bool no_degeneracy;
};

/// Exact common-root scan of (L_n^{(1)}, L_{n-1}^{(1)}) for n = 1..n_max:
/// a nonzero resultant at every n rules out even/odd twofold degeneracy.
DegeneracyReport degeneracy_scan(int n_max);

}  // namespace dkp
