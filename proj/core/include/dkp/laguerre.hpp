#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace dkp {

using BigInt = boost::multiprecision::cpp_int;

/// Generalized Laguerre polynomial L_n^{(1)} held with exact integer-scaled
/// coefficients:
///   L_n^{(1)}(w) = (1/denom) * sum_j scaled_coeffs[j] w^j,   denom = n!.
/// With this scaling the coefficients are the integers
///   scaled_coeffs[j] = (-1)^j C(n+1, j+1) n!/j!,
/// the leading one being (-1)^n.
struct LaguerrePoly {
  int n = 0;
  int alpha = 1;  // only the superscript-1 family arises here
  std::vector<BigInt> scaled_coeffs;
  BigInt denom = 1;

  double eval(double w) const;             // Horner on scaled_coeffs/denom
  double eval_derivative(double w) const;  // Horner on the derivative coefficients
};

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// Exact coefficients of L_n^{(1)}.  Rejects negative n.
LaguerrePoly laguerre_coeffs(int n);

/// L_n^{(1)}(w) by the three-term recurrence
///   (k+1) L_{k+1}^{(1)} = (2k+2-w) L_k^{(1)} - (k+1) L_{k-1}^{(1)},
/// with L_{-1}^{(1)} = 0 and L_0^{(1)} = 1.
double laguerre_eval(int n, double w);

/// dL_n^{(1)}/dw.  Away from the origin this uses the ladder identity
///   w L' = n L_n^{(1)} - (n+1) L_{n-1}^{(1)};
/// near w = 0, where that quotient cancels, the exact coefficient
/// derivative is used instead.
double laguerre_derivative(int n, double w);

/// All n zeros of L_n^{(1)}, strictly increasing, all positive.  Computed
/// as eigenvalues of the Jacobi matrix of the alpha = 1 Laguerre weight and
/// polished by Newton steps to |d root / root| < 1e-13.  Empty for n = 0.
std::vector<double> laguerre_roots(int n);

/// Exact resultant of two integer polynomials given by ascending
/// coefficients, via the subresultant pseudo-remainder sequence.  Matches
/// the Sylvester-determinant convention.  Zero iff the inputs share a root.
BigInt resultant(const std::vector<BigInt>& p, const std::vector<BigInt>& q);

/// Exact resultant of the integer-scaled L_n^{(1)} and L_{n-1}^{(1)}.
/// A nonzero value certifies the two polynomials have no common zero.
BigInt laguerre_resultant(int n);

}  // namespace dkp
