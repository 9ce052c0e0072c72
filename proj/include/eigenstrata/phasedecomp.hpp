#pragma once

#include <vector>

#include "eigenstrata/ensemble.hpp"
#include "eigenstrata/specfn.hpp"

namespace eigenstrata {

struct PhaseAmplitude {
    double A = 0.0;
    double theta = 0.0;  // unwrapped
    double A_prime = 0.0;
    double theta_prime = 0.0;
};

struct DensitySplit {
    double rho_s = 0.0;        // smooth part (rho_1s for GOE)
    double rho_f = 0.0;        // fluctuating part
    double B = 0.0;            // fluctuation amplitude
    double theta_shift = 0.0;  // phase offset
    double phase_sum = 0.0;    // theta_N + theta_{N-1}
};

struct GoeAuxiliary {
    double Q1 = 0.0;
    double Q2 = 0.0;
    double I = 0.0;        // I_N, including the odd-N constant
    double I_tilde = 0.0;  // companion integral of the second solution
    double theta_N = 0.0;
};

// n-th basis function of the ensemble (oscillator or Laguerre) in
// modulus/phase form. theta is fixed on each point by counting the zeros of
// the function below x, so any grid works; GridTooCoarse is raised only if
// neighbouring phases still jump by more than pi/2 after that.
std::vector<PhaseAmplitude> phase_amplitude(const EnsembleSpec& spec, int n,
                                            const std::vector<double>& x_grid,
                                            bool check_grid = false);

PhaseAmplitude phase_from_state(const EnsembleSpec& spec, int n, double x, const WaveState& w,
                                const std::vector<double>& zeros);

// DomainError outside the numerically safe band
DensitySplit split_density(const EnsembleSpec& spec, double x);
std::vector<DensitySplit> split_density_grid(const EnsembleSpec& spec, const std::vector<double>& x_grid);

// drops the GOE gamma terms; for checking that GOE reduces to the GUE path
std::vector<DensitySplit> split_density_grid_no_gamma(const EnsembleSpec& spec,
                                                      const std::vector<double>& x_grid);

GoeAuxiliary goe_q_functions(int N, double x);
std::vector<GoeAuxiliary> goe_q_functions_grid(int N, const std::vector<double>& x_grid);

// |x| range (Gaussian) or (lo, hi) (Wishart) where split_density is offered
struct Band {
    double lo = 0.0;
    double hi = 0.0;
};
Band split_band(const EnsembleSpec& spec);

}  // namespace eigenstrata
