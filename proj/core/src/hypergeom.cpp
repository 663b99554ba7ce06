#include "dkp/hypergeom.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dkp {

namespace {

constexpr double kSeriesGuard = 50.0;
constexpr double kAsymSwitch = 18.0;

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

}  // namespace

double gamma_fn(double x) {
  if (is_nonpositive_integer(x))
    throw std::domain_error("gamma_fn: pole at nonpositive integer");
  return std::tgamma(x);
}

double recip_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

ConfluentParams make_confluent_params(int beta, double g, double eps) {
  if (beta != 1 && beta != -1)
    throw std::invalid_argument("make_confluent_params: beta must be +1 or -1");
  return ConfluentParams{(beta + 1.0) / 2.0 - g * eps * eps / 4.0, beta};
}

double kummer_m(double a, double b, double w) {
  if (is_nonpositive_integer(b))
    throw std::domain_error("kummer_m: b is a nonpositive integer");
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(w))
    throw std::domain_error("kummer_m: non-finite argument");

  if (is_nonpositive_integer(a)) {
    // terminating series, exact truncation
    const int n = static_cast<int>(-a);
    double sum = 1.0, term = 1.0;
    for (int j = 0; j < n; ++j) {
      term *= (a + j) / (b + j) * w / (j + 1);
      sum += term;
    }
    return sum;
  }

  if (std::abs(w) > kSeriesGuard)
    throw std::range_error("kummer_m: |w| > 50 outside the series guard");

  double sum = 1.0, term = 1.0;
  int small_terms = 0;
  for (int j = 0; j < 1000; ++j) {
    term *= (a + j) / (b + j) * w / (j + 1);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) {
      if (++small_terms >= 3) return sum;
    } else {
      small_terms = 0;
    }
  }
  throw std::runtime_error("kummer_m: series did not converge");
}

namespace {

// Connection formula in terms of M; valid only for non-integer b.
double tricomi_connection(double a, double b, double w) {
  const double pref = M_PI / std::sin(M_PI * b);
  const double t1 = kummer_m(a, b, w) * recip_gamma(1.0 + a - b) * recip_gamma(b);
  const double t2 = std::pow(w, 1.0 - b) * kummer_m(1.0 + a - b, 2.0 - b, w) *
                    recip_gamma(a) * recip_gamma(2.0 - b);
  return pref * (t1 - t2);
}

// U(a,b,w) ~ w^{-a} sum_k (a)_k (a-b+1)_k / (k! (-w)^k).  Truncated at the
// smallest term; terminates exactly when a is a nonpositive integer.
double tricomi_asymptotic(double a, double b, double w) {
  double sum = 1.0, term = 1.0;
  double prev = std::abs(term);
  const int cap = static_cast<int>(w) + 16;
  for (int k = 0; k < cap; ++k) {
    term *= (a + k) * (a - b + 1.0 + k) / ((k + 1) * (-w));
    if (std::abs(term) > prev) break;  // past the optimal truncation point
    sum += term;
    prev = std::abs(term);
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return std::pow(w, -a) * sum;
}

}  // namespace

TricomiEval tricomi_u_eval(double a, double b, double w) {
  if (!(w > 0.0)) throw std::domain_error("tricomi_u: requires w > 0");

  if (is_nonpositive_integer(a))  // terminating, exact at any w
    return {tricomi_asymptotic(a, b, w), false};
  if (w >= kAsymSwitch) return {tricomi_asymptotic(a, b, w), false};

  if (b == std::floor(b)) {
    // b +- eps limit, even in eps, removed by Richardson extrapolation
    auto sym = [&](double e) {
      return 0.5 * (tricomi_connection(a, b + e, w) + tricomi_connection(a, b - e, w));
    };
    const double v1 = sym(1e-4);
    const double v2 = sym(5e-5);
    return {(4.0 * v2 - v1) / 3.0, true};
  }
  return {tricomi_connection(a, b, w), false};
}

double tricomi_u(double a, double b, double w) { return tricomi_u_eval(a, b, w).value; }

double wronskian_residual(double a, double b, double w) {
  if (is_nonpositive_integer(a))
    throw std::domain_error(
        "wronskian_residual: M and U are linearly dependent for nonpositive integer a");
  if (b == std::floor(b))
    throw std::domain_error("wronskian_residual: requires non-integer b");
  if (!(w > 0.0)) throw std::domain_error("wronskian_residual: requires w > 0");

  const double h = 1e-5 * std::max(1.0, w);
  const double m0 = kummer_m(a, b, w);
  const double mp = (kummer_m(a, b, w + h) - kummer_m(a, b, w - h)) / (2.0 * h);
  const double u0 = tricomi_connection(a, b, w);
  const double up =
      (tricomi_connection(a, b, w + h) - tricomi_connection(a, b, w - h)) / (2.0 * h);

  const double wronskian = m0 * up - mp * u0;
  const double closed = -gamma_fn(b) / gamma_fn(a) * std::pow(w, -b) * std::exp(w);
  return std::abs(wronskian - closed) / std::max(1.0, std::abs(closed));
}

double kummer_asymptotic_ratio(double a, double b, double w) {
  if (is_nonpositive_integer(a))
    throw std::domain_error("kummer_asymptotic_ratio: polynomial case has no e^w term");
  const double law = gamma_fn(b) / gamma_fn(a);
  return kummer_m(a, b, w) * std::exp(-w) * std::pow(w, b - a) / law;
}

bool asymptotic_growth_check(double a, double b, const std::vector<double>& w_list) {
  if (is_nonpositive_integer(a))
    throw std::domain_error(
        "asymptotic_growth_check: polynomial case grows like w^n, not e^w");
  if (w_list.empty()) throw std::invalid_argument("asymptotic_growth_check: empty w list");
  for (std::size_t i = 0; i < w_list.size(); ++i) {
    if (!(w_list[i] > 0.0) || (i > 0 && !(w_list[i] > w_list[i - 1])))
      throw std::invalid_argument("asymptotic_growth_check: w list must be increasing, positive");
  }

  double prev_dev = std::numeric_limits<double>::infinity();
  for (double w : w_list) {
    const double dev = std::abs(kummer_asymptotic_ratio(a, b, w) - 1.0);
    if (dev > prev_dev + 1e-12) return false;  // not approaching monotonically
    prev_dev = dev;
  }
  return prev_dev <= 0.10;
}

double kummer_growth_exponent(double a, double b, double w_lo, double w_hi) {
  if (!(0.0 < w_lo && w_lo < w_hi))
    throw std::invalid_argument("kummer_growth_exponent: requires 0 < w_lo < w_hi");
  const double f_lo = std::abs(kummer_m(a, b, w_lo));
  const double f_hi = std::abs(kummer_m(a, b, w_hi));
  if (f_lo == 0.0 || f_hi == 0.0)
    throw std::domain_error("kummer_growth_exponent: M vanishes at a sample point");
  return (std::log(f_hi) - std::log(f_lo)) / (std::log(w_hi) - std::log(w_lo));
}

}  // namespace dkp
