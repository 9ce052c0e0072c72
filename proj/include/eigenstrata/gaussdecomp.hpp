#pragma once

#include <vector>

#include "eigenstrata/ensemble.hpp"

namespace eigenstrata {

enum class DecompMode { Exact, Bulk };
enum class ComponentKind { BulkGaussian, EdgeExactTail };

struct ScaledCoordinates {
    double nu = 0.0;
    double sigma2 = 0.0;
};

struct EigenComponent {
    int k = 1;
    double nu_k = 0.0;
    ComponentKind kind = ComponentKind::BulkGaussian;
};

// nu_k: (N+1)/2 - k for GUE/GOE (k = 1 is the largest), 1/2 + (k-1) for Wishart (k = 1 is the smallest)
EigenComponent eigen_component(const EnsembleSpec& spec, int k);

// component index of the largest eigenvalue (1 for GUE/GOE, N for Wishart)
int largest_component(const EnsembleSpec& spec);
// ascending rank (1 = smallest) of component k
int ascending_rank(const EnsembleSpec& spec, int k);

// Throws VarianceUndefined where B/(2 rho_s) >= 1 or rho_s <= 0.
ScaledCoordinates scaled_coords(const EnsembleSpec& spec, double x, DecompMode mode);

double component_density(const EnsembleSpec& spec, int k, double x, DecompMode mode);

struct InflectionPoints {
    double x_left = 0.0;
    double x_right = 0.0;
};
InflectionPoints inflection_points(const EnsembleSpec& spec);

struct PoissonCheck {
    double lhs = 0.0;              // finite comb + remainder R
    double rhs = 0.0;              // truncated Fourier series
    double remainder = 0.0;        // R, summed directly
    double remainder_bound = 0.0;  // Gaussian tail bound on R
};
PoissonCheck poisson_sum_check(double sigma, double nu, int N, int m_max);

// Gaussian-tail bound of R at (sigma, nu) for the N centres of the GUE layout
double remainder_bound(double sigma, double nu, int N);

// Full decomposition on a grid.
struct DecompGrid {
    std::vector<double> x;
    std::vector<double> rho;         // exact density
    std::vector<double> rho_s;       // smooth part used as weight
    std::vector<double> nu;          // NaN where undefined
    std::vector<double> sigma2;      // NaN where undefined
    std::vector<std::vector<double>> components;  // [k-1][i]
    InflectionPoints inflection;
    double max_remainder_bulk = 0.0;
};
// sigma2_scale multiplies every sigma^2; only for mutation checks
DecompGrid decompose_grid(const EnsembleSpec& spec, const std::vector<double>& x_grid, DecompMode mode,
                          double sigma2_scale = 1.0);

// points whose unfolded coordinate is at least one spacing inside the support
bool in_bulk_band(const EnsembleSpec& spec, double x);

// integer added to the exact nu so that it matches xi at the spectrum centre
int exact_nu_offset(const EnsembleSpec& spec);

}  // namespace eigenstrata
