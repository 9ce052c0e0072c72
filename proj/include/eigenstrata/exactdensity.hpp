#pragma once

#include "eigenstrata/ensemble.hpp"

namespace eigenstrata {

enum class Extreme { Largest, Smallest };

// exact finite-N eigenvalue density, normalised to N; Wishart needs x > 0
double density(const EnsembleSpec& spec, double x);

// sum_{n<N} phi_n(x)^2, the direct (slow) form of the GUE kernel
double gue_kernel_sum(int N, double x);

double gue_n2_density(double x);
double goe_n2_density(double x);
double gue_n2_extreme(double x, Extreme which);
double goe_n2_extreme(double x, Extreme which);

// I_N(x) = integral_0^x phi_N by adaptive quadrature
double gue_integral_term(int N, double x);
// two-term inverse-momentum series for I_N
double gue_integral_series(int N, double x);

// integral of phi_n over the whole line (zero for odd n)
double oscillator_total_integral(int n);
// integral of phi_n over (0, inf)
double oscillator_half_integral(int n);

// GOE correction gamma(x) = rho_GOE - rho_GUE
double goe_gamma(int N, double x);

// GOE gamma written as sqrt(N/2) phi_{N-1} (I_N + shift); shift is 0 for even N
double goe_integral_shift(int N);

}  // namespace eigenstrata
