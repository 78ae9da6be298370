// phi_analysis.hpp — behaviour of the weight function Phi_n(alpha).
//
// For fixed degree n >= 1 and negative order alpha = -mu, Phi_n(-mu) rises
// from zero, peaks once, and decays back to zero.  The peak sits at the unique
// positive root of
//
//     Psi_n(mu) = 1/mu + 1/(1+mu) + ... + 1/((n-1)+mu) = gamma,  gamma = -ln h,
//
// and the n = 1 peak value eta = exp(-1)/gamma bounds every Phi_n on
// -1 < alpha < 0.  At alpha = -1 all degrees cross through Phi_n(-1) = h;
// below -1 the weights grow with n instead of shrinking.  For alpha > 0 the
// weights oscillate across zeros at alpha = 0..n-1 under an exponential
// envelope.  These facts are what make fractional integration noise-friendly
// and fractional differentiation noise-hostile.

#pragma once

#include <cstddef>
#include <vector>

namespace glfrac {

/// Fixes the step h and the derived constants of the analysis.
struct PhiContext {
    double h;     // 0 < h < 1
    double gamma; // -ln(h) > 0
    double eta;   // exp(-1)/gamma

    explicit PhiContext(double h);
};

/// Psi_n(mu) = sum_{k=0..n-1} 1/(k + mu); strictly decreasing in mu.
/// Throws std::domain_error for mu <= 0.
double psi(std::size_t n, double mu);

/// Location and value of the single maximum of Phi_n over negative orders.
struct PhiExtremum {
    std::size_t n = 0;
    double mu_max = 0.0;      // the root of Psi_n(mu) = gamma
    double phi_at_max = 0.0;  // Phi_n(-mu_max)
    double am_gm_bound = 0.0; // (h^mu / n!) * (mu + (n-1)/2)^n, >= phi_at_max
};

/// Bisection for the unique positive root of Psi_n(mu) = gamma, to 1e-12 in mu.
PhiExtremum find_mu_max(std::size_t n, const PhiContext& ctx);

/// exp(-1)/gamma, the supremum of Phi_n(alpha) on -1 < alpha < 0.
double eta(const PhiContext& ctx);

/// max over n = 1..n_max of |Phi_n(-1) - h|.  The identity Phi_n(-1) = h makes
/// this a machine-precision zero; anything larger flags a broken recurrence.
double crossover_check(std::size_t n_max, const PhiContext& ctx);

/// Phi values on a rectangular (n, alpha) grid, e.g. for plotting.
struct PhiCurve {
    std::vector<std::size_t> n_values;
    std::vector<double> alpha_grid;               // strictly increasing
    std::vector<std::vector<double>> values;      // values[i][j] = Phi_{n_i}(alpha_j)
};

PhiCurve sample_phi_curve(const std::vector<std::size_t>& n_values, double alpha_min,
                          double alpha_max, double step, const PhiContext& ctx);

} // namespace glfrac
