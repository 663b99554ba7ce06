#pragma once

#include <vector>

namespace dkp {

/// Gamma function; throws std::domain_error at the poles w = 0, -1, -2, ...
/// (detected exactly for integer arguments).
double gamma_fn(double x);

/// 1/Gamma(x); exactly 0 at nonpositive integers, where Gamma has poles.
double recip_gamma(double x);

/// Parameters of the confluent equation t f'' + (b - t) f' - a f = 0 as they
/// arise from the reduced radial problem: b = beta + 1 with beta^2 = 1.
/// Only the beta = +1 (b = 2) branch is evaluable here; beta = -1 leads to
/// the logarithmic b = 0 case, which is constructible but not supported.
struct ConfluentParams {
  double a = 0.0;
  int beta = +1;

  double b() const { return beta + 1.0; }
  bool evaluable() const { return beta == +1; }
};

/// a = (beta+1)/2 - g eps^2 / 4 for the dimensionless coupling g and energy
/// eps.  Rejects beta outside {-1, +1}.
ConfluentParams make_confluent_params(int beta, double g, double eps);

/// Kummer's function M(a,b,w) = sum_j (a)_j/(b)_j w^j/j! by term recurrence.
/// When a is a nonpositive integer the series terminates exactly after
/// -a + 1 terms and any finite w is accepted; otherwise |w| <= 50 is
/// enforced (the alternating series sheds about w digits to cancellation).
/// Throws std::domain_error for b in {0, -1, -2, ...} and std::range_error
/// outside the series guard.
double kummer_m(double a, double b, double w);

struct TricomiEval {
  double value = 0.0;
  bool integer_b_limit = false;  // epsilon-offset path, ~1e-6 accuracy
};

/// Tricomi's function U(a,b,w) for w > 0.
///   - a a nonpositive integer: the power series in 1/w terminates and is
///     exact (U is then a polynomial multiple of M);
///   - w >= 18: asymptotic 1/w series, where the Kummer connection formula
///     would lose ~w digits to cancellation;
///   - non-integer b: the Kummer connection formula;
///   - integer b: the b +- eps limit of the connection formula with
///     Richardson extrapolation (reduced accuracy, flagged).
TricomiEval tricomi_u_eval(double a, double b, double w);
double tricomi_u(double a, double b, double w);

/// |W_fd - W| / max(1, |W|) where W_fd is the finite-difference Wronskian
/// M U' - M' U (central differences, h = 1e-5 max(1,w)) and
/// W = -Gamma(b)/Gamma(a) w^{-b} e^w is its closed form.  Requires b
/// non-integer and refuses nonpositive-integer a, where M and U are
/// linearly dependent.
double wronskian_residual(double a, double b, double w);

/// M(a,b,w) divided by its leading large-w behaviour
/// Gamma(b)/Gamma(a) e^w w^{a-b}; tends to 1 for non-polynomial a.
double kummer_asymptotic_ratio(double a, double b, double w);

/// True iff the ratio above approaches 1 monotonically along the increasing
/// w_list and is within 10% of 1 at the largest w.  Rejects nonpositive
/// integer a, where the e^w term is absent and M grows like w^n instead.
bool asymptotic_growth_check(double a, double b, const std::vector<double>& w_list);

/// Log-log slope of |M(a,b,.)| between w_lo and w_hi; for a = -n this
/// measures the polynomial growth exponent n.
double kummer_growth_exponent(double a, double b, double w_lo, double w_hi);

}  // namespace dkp
