// Acceptance suite: every headline quantitative result, each checked at its
// stated tolerance with one pass/fail line, timed against its runtime budget.
// Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dkp/algebra.hpp"
#include "dkp/hypergeom.hpp"
#include "dkp/laguerre.hpp"
#include "dkp/oracle.hpp"
#include "dkp/spectrum.hpp"

namespace {

struct Criterion {
  int id;
  std::string label;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool close_abs(double a, double b, double tol) { return std::abs(a - b) <= tol; }
bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::abs(b);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// 1. even-parity roots: n=0 -> {2}; n=1 -> {3 -+ sqrt5}; abs error < 1e-10
bool crit_even_roots(std::string& detail) {
  const auto r0 = dkp::even_zeta_roots(0);
  const auto r1 = dkp::even_zeta_roots(1);
  const double s5 = std::sqrt(5.0);
  double worst = 1e300;
  bool ok = r0.size() == 1 && r1.size() == 2;
  if (ok) {
    worst = std::abs(r0[0] - 2.0);
    worst = std::max(worst, std::abs(r1[0] - (3.0 - s5)));
    worst = std::max(worst, std::abs(r1[1] - (3.0 + s5)));
    ok = worst < 1e-10;
  }
  detail = "max |zeta - exact| = " + fmt(worst);
  return ok;
}

// 2. odd-parity roots: n=1 -> {2}; n=2 -> {3 -+ sqrt3}; n=0 empty
bool crit_odd_roots(std::string& detail) {
  const auto r0 = dkp::odd_zeta_roots(0);
  const auto r1 = dkp::odd_zeta_roots(1);
  const auto r2 = dkp::odd_zeta_roots(2);
  const double s3 = std::sqrt(3.0);
  bool ok = r0.empty() && r1.size() == 1 && r2.size() == 2;
  double worst = 1e300;
  if (ok) {
    worst = std::abs(r1[0] - 2.0);
    worst = std::max(worst, std::abs(r2[0] - (3.0 - s3)));
    worst = std::max(worst, std::abs(r2[1] - (3.0 + s3)));
    ok = worst < 1e-10;
  }
  detail = "n=0 empty: " + std::string(r0.empty() ? "yes" : "NO") +
           ", max |zeta - exact| = " + fmt(worst);
  return ok;
}

dkp::OracleConfig oracle_config(const dkp::QuasiExactState& s, int points) {
  dkp::OracleConfig cfg;
  cfg.params = s.params;
  cfg.parity = s.parity;
  cfg.e_est = std::abs(s.E);
  cfg.x_max = dkp::oracle_x_max(cfg.params, cfg.e_est);
  cfg.points = points;
  cfg.k = 3;
  return cfg;
}

// 3. oracle equivalence at zeta = 2: E = sqrt2 (even n=0) and E = 2 (odd
//    n=1) to 1e-3 at 20000 points, 1e-4 after Richardson; overlap > 0.9999
bool crit_oracle_match(std::string& detail) {
  const double sqrt2 = std::sqrt(2.0);
  const auto even = dkp::make_state(0, dkp::Parity::even, 0, +1, 1.0);
  const auto odd = dkp::make_state(1, dkp::Parity::odd, 0, +1, 1.0);

  const auto cfg_e = oracle_config(even, 20000);
  const auto spec_e = dkp::oracle_spectrum(cfg_e);
  const auto cv_e = dkp::cross_validate(even, cfg_e);

  const auto cfg_o = oracle_config(odd, 20000);
  const auto spec_o = dkp::oracle_spectrum(cfg_o);
  const auto cv_o = dkp::cross_validate(odd, cfg_o);

  const bool ok = close_rel(spec_e.energies_h[0], sqrt2, 1e-3) &&
                  close_rel(spec_e.energies[0], sqrt2, 1e-4) &&
                  close_rel(spec_o.energies_h[0], 2.0, 1e-3) &&
                  close_rel(spec_o.energies[0], 2.0, 1e-4) && cv_e.success &&
                  cv_o.success && cv_e.overlap > 0.9999 && cv_o.overlap > 0.9999;
  detail = "raw rel err even/odd = " + fmt(std::abs(spec_e.energies_h[0] - sqrt2) / sqrt2) +
           "/" + fmt(std::abs(spec_o.energies_h[0] - 2.0) / 2.0) +
           ", refined = " + fmt(std::abs(spec_e.energies[0] - sqrt2) / sqrt2) + "/" +
           fmt(std::abs(spec_o.energies[0] - 2.0) / 2.0) +
           ", overlaps = " + fmt(cv_e.overlap) + "/" + fmt(cv_o.overlap);
  return ok;
}

// 4. quasi-exactness control: at zeta = 1 (no quantization) the oracle
//    ground energy misses the formula value 2 by more than 1%
bool crit_negative_control(std::string& detail) {
  const auto trial = dkp::make_trial_state(0, dkp::Parity::even, 1.0, +1, 1.0);
  const auto cfg = oracle_config(trial, 8000);
  const auto spec = dkp::oracle_spectrum(cfg);
  const auto cv = dkp::cross_validate(trial, cfg);
  const double gap = std::abs(spec.energies[0] - 2.0) / 2.0;
  detail = "oracle E0 = " + fmt(spec.energies[0]) + ", formula 2; gap = " + fmt(gap) +
           ", mismatch flagged: " + (cv.success ? "NO" : "yes");
  return gap > 0.01 && !cv.success;
}

// 5. normalization: delta(0, 2) = 3 e^{-2} closed form vs quadrature to
//    1e-12, and the charge integral hits +1 within 1e-8
bool crit_normalization(std::string& detail) {
  const double closed = dkp::norm_delta_closed_form(0, 2.0);
  const double quad = dkp::norm_delta_quadrature(0, 2.0);
  const double exact = 3.0 * std::exp(-2.0);
  const auto s = dkp::make_state(0, dkp::Parity::even, 0, +1, 1.0);
  const double charge = dkp::charge_integral(s);
  const bool ok = close_abs(closed, exact, 1e-12) && close_abs(closed, quad, 1e-12) &&
                  close_abs(charge, 1.0, 1e-8);
  detail = "|delta - 3e^-2| = " + fmt(std::abs(closed - exact)) +
           ", |closed - quad| = " + fmt(std::abs(closed - quad)) +
           ", |charge - 1| = " + fmt(std::abs(charge - 1.0));
  return ok;
}

// 6. degeneracy scan: exact resultants nonzero for every n <= 100
bool crit_degeneracy(std::string& detail) {
  const auto rep = dkp::degeneracy_scan(100);
  int nonzero = 0;
  for (const auto& row : rep.rows) nonzero += row.resultant_nonzero ? 1 : 0;
  detail = std::to_string(nonzero) + "/100 resultants nonzero";
  return rep.no_degeneracy && nonzero == 100;
}

// 7. algebra: both representations satisfy the trilinear algebra and
//    eta0-hermiticity with exactly zero residual
bool crit_algebra(std::string& detail) {
  const auto s0 = dkp::build_rep(dkp::SpinSector::spin0);
  const auto s1 = dkp::build_rep(dkp::SpinSector::spin1);
  const auto a0 = dkp::check_dkp_algebra(s0);
  const auto a1 = dkp::check_dkp_algebra(s1);
  const auto h0 = dkp::check_eta_hermiticity(s0);
  const auto h1 = dkp::check_eta_hermiticity(s1);
  detail = "residuals (exact integers): algebra " + std::to_string(a0) + "/" +
           std::to_string(a1) + ", hermiticity " + std::to_string(h0) + "/" +
           std::to_string(h1);
  return a0 == 0 && a1 == 0 && h0 == 0 && h1 == 0;
}

// 8. special functions: Wronskian grid < 1e-6; Kummer-Laguerre identity to
//    1e-12 for n <= 20; e^w law for generic a; w^n law for a = -n
bool crit_special_functions(std::string& detail) {
  double worst_w = 0.0;
  for (double a : {0.3, 0.7, 1.3})
    for (double b : {0.4, 1.5, 2.6})
      for (double w : {0.5, 1.5, 4.0})
        worst_w = std::max(worst_w, dkp::wronskian_residual(a, b, w));

  double worst_kl = 0.0;
  for (int n = 0; n <= 20; ++n)
    for (double w : {0.2, 1.0, 2.0, 5.0, 10.0, 30.0}) {
      const double lhs = dkp::kummer_m(-n, 2.0, w) * (n + 1.0);
      const double rhs = dkp::laguerre_eval(n, w);
      worst_kl = std::max(worst_kl, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }

  const bool growth = dkp::asymptotic_growth_check(0.5, 2.0, {10.0, 20.0, 40.0});
  double worst_poly = 0.0;
  for (int n : {1, 2, 3})
    worst_poly = std::max(
        worst_poly, std::abs(dkp::kummer_growth_exponent(-n, 2.0, 100.0, 200.0) - n));

  detail = "wronskian " + fmt(worst_w) + ", kummer-laguerre " + fmt(worst_kl) +
           ", e^w law " + (growth ? "ok" : "FAIL") + ", poly exponent err " +
           fmt(worst_poly);
  return worst_w < 1e-6 && worst_kl < 1e-12 && growth && worst_poly < 0.5;
}

// 9. figure data: zeta = 2 pair is exactly symmetric/antisymmetric, with 0
//    nodes (n = 0) and exactly 1 node at the origin (n = 1)
bool crit_figure(std::string& detail) {
  const auto s0 = dkp::make_state(0, dkp::Parity::even, 0, +1, 1.0);
  const auto s1 = dkp::make_state(1, dkp::Parity::odd, 0, +1, 1.0);
  const auto t0 = dkp::eigenfunction_table(s0, 6.0, 601, true);
  const auto t1 = dkp::eigenfunction_table(s1, 6.0, 601, true);

  double sym = 0.0, asym = 0.0;
  for (int i = 0; i < 601; ++i) {
    sym = std::max(sym, std::abs(t0.phi[i] - t0.phi[600 - i]));
    asym = std::max(asym, std::abs(t1.phi[i] + t1.phi[600 - i]));
  }
  const int n0 = dkp::count_nodes(t0);
  const int n1 = dkp::count_nodes(t1);
  const bool origin_zero = t1.phi[300] == 0.0;
  detail = "symmetry residuals = " + fmt(sym) + "/" + fmt(asym) + ", nodes = " +
           std::to_string(n0) + "/" + std::to_string(n1) +
           ", odd origin value zero: " + (origin_zero ? "yes" : "NO");
  return sym < 1e-12 && asym < 1e-12 && n0 == 0 && n1 == 1 && origin_zero;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "even-parity quantization roots (n = 0, 1)", 1.0, crit_even_roots},
      {2, "odd-parity quantization roots (n = 0, 1, 2)", 1.0, crit_odd_roots},
      {3, "oracle equivalence at zeta = 2 (20000-point grid)", 60.0, crit_oracle_match},
      {4, "quasi-exactness negative control at zeta = 1", 60.0, crit_negative_control},
      {5, "normalization constant and unit charge", 10.0, crit_normalization},
      {6, "exact degeneracy scan to n = 100", 300.0, crit_degeneracy},
      {7, "beta-matrix algebra and eta0-hermiticity", 1.0, crit_algebra},
      {8, "confluent-function validation suite", 10.0, crit_special_functions},
      {9, "dimensionless eigenfunction pair at zeta = 2", 10.0, crit_figure},
  };

  int failures = 0;
  for (auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = secs <= c.budget_seconds;
    ok = ok && in_budget;
    std::printf("[%s] %d. %s — %s [%.2fs%s]\n", ok ? "PASS" : "FAIL", c.id,
                c.label.c_str(), detail.c_str(), secs,
                in_budget ? "" : " OVER BUDGET");
    if (!ok) ++failures;
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures;
}
