#pragma once

#include <vector>

namespace eigenstrata {

// Eigenvalues of the symmetric tridiagonal matrix (diag, off) by Sturm-sequence
// bisection, ascending. abs_tol <= 0 means 1e-12 * max |entry|.
std::vector<double> sturm_eigenvalues(const std::vector<double>& diag,
                                      const std::vector<double>& off,
                                      double abs_tol = 0.0);

// number of eigenvalues strictly below lambda
int sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double lambda);

}  // namespace eigenstrata
