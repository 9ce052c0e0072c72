#include "eigenstrata/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace eigenstrata {

namespace {

int count_below(const double* d, const double* e2, std::size_t n, double lambda) {
    int c = 0;
    double q = d[0] - lambda;
    if (q < 0) ++c;
    for (std::size_t i = 1; i < n; ++i) {
        if (q == 0.0) q = std::numeric_limits<double>::epsilon() * (std::abs(lambda) + 1.0);
        q = d[i] - lambda - e2[i - 1] / q;
        if (q < 0) ++c;
    }
    return c;
}

}  // namespace

int sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double lambda) {
    std::vector<double> e2(off.size());
    for (std::size_t i = 0; i < off.size(); ++i) e2[i] = off[i] * off[i];
    return count_below(diag.data(), e2.data(), diag.size(), lambda);
}

std::vector<double> sturm_eigenvalues(const std::vector<double>& diag,
                                      const std::vector<double>& off, double abs_tol) {
    const std::size_t n = diag.size();
    std::vector<double> out(n);
    if (n == 0) return out;

    std::vector<double> e2(n > 1 ? n - 1 : 0);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo, scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(off[i - 1]);
        if (i + 1 < n) r += std::abs(off[i]);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
        scale = std::max(scale, std::abs(diag[i]));
        if (i + 1 < n) {
            e2[i] = off[i] * off[i];
            scale = std::max(scale, std::abs(off[i]));
        }
    }
    if (abs_tol <= 0.0) abs_tol = 1e-12 * std::max(scale, 1e-300);
    lo -= abs_tol;
    hi += abs_tol;

    // per-eigenvalue brackets shrink as counts come in from earlier bisections
    std::vector<double> left(n, lo), right(n, hi);
    for (std::size_t k = 0; k < n; ++k) {
        double a = std::max(left[k], k > 0 ? out[k - 1] : lo);
        double b = right[k];
        while (b - a > abs_tol) {
            double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) break;
            int c = count_below(diag.data(), e2.data(), n, mid);
            if (c > static_cast<int>(k)) {
                b = mid;
                for (std::size_t j = k + 1; j < static_cast<std::size_t>(c) && j < n; ++j)
                    right[j] = std::min(right[j], mid);
            } else {
                a = mid;
                for (std::size_t j = static_cast<std::size_t>(c); j < n; ++j)
                    if (j > k) left[j] = std::max(left[j], mid);
            }
        }
        out[k] = 0.5 * (a + b);
    }
    return out;
}

}  // namespace eigenstrata
