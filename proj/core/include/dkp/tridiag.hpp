#pragma once

#include <vector>

namespace dkp {

/// Number of eigenvalues of the symmetric tridiagonal matrix (diag, off)
/// strictly less than sigma, from the signs of the LDL^T pivots (Sturm
/// sequence count).
int sturm_count(const std::vector<double>& diag, const std::vector<double>& off,
                double sigma);

/// The k smallest eigenvalues, ascending, by bisection on the Sturm count.
/// Brackets start from the Gershgorin bounds and shrink until
/// hi - lo <= rel_tol * max(1, |lo|, |hi|).
std::vector<double> tridiag_smallest_eigenvalues(const std::vector<double>& diag,
                                                 const std::vector<double>& off,
                                                 int k, double rel_tol = 1e-14);

/// Eigenvector for an already-converged eigenvalue, by inverse iteration
/// with a partially pivoted tridiagonal solve.  Normalized to unit 2-norm
/// with its largest-magnitude component positive.
std::vector<double> tridiag_eigenvector(const std::vector<double>& diag,
                                        const std::vector<double>& off,
                                        double lambda);

}  // namespace dkp
