#include "glfrac/phi_analysis.hpp"

#include "glfrac/gl_engine.hpp"

#include <cmath>
#include <stdexcept>

namespace glfrac {

PhiContext::PhiContext(double h_) : h(h_) {
    if (!(h > 0.0) || !(h < 1.0))
        throw std::invalid_argument("phi analysis requires 0 < h < 1");
    gamma = -std::log(h);
    eta = std::exp(-1.0) / gamma;
}

double psi(std::size_t n, double mu) {
    if (n < 1)
        throw std::invalid_argument("psi needs degree n >= 1");
    if (!(mu > 0.0))
        throw std::domain_error("psi is defined for mu > 0 only");
    double s = 0.0;
    // smallest terms first
    for (std::size_t k = n; k-- > 0;)
        s += 1.0 / (static_cast<double>(k) + mu);
    return s;
}

PhiExtremum find_mu_max(std::size_t n, const PhiContext& ctx) {
    if (n < 1)
        throw std::invalid_argument("find_mu_max needs degree n >= 1");
    // Psi -> inf at 0+ and -> 0 at inf, strictly decreasing: bracket then bisect.
    double lo = 1e-12;
    double hi = 1.0;
    while (psi(n, hi) > ctx.gamma) {
        lo = hi;
        hi *= 2.0;
    }
    for (int it = 0; it < 200 && (hi - lo) > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        (psi(n, mid) > ctx.gamma ? lo : hi) = mid;
    }

    PhiExtremum ext;
    ext.n = n;
    ext.mu_max = 0.5 * (lo + hi);
    ext.phi_at_max = phi(n, -ext.mu_max, ctx.h);
    // bound evaluated in log space; n! overflows binary64 past n = 170
    const double nd = static_cast<double>(n);
    const double log_bound = ext.mu_max * std::log(ctx.h) +
                             nd * std::log(ext.mu_max + (nd - 1.0) / 2.0) -
                             std::lgamma(nd + 1.0);
    // the bound dominates phi_at_max for every n and collapses onto it at
    // n = 1; keep that ordering against roundoff in the two evaluation paths
    ext.am_gm_bound = std::max(std::exp(log_bound), ext.phi_at_max);
    return ext;
}

double eta(const PhiContext& ctx) { return ctx.eta; }

double crossover_check(std::size_t n_max, const PhiContext& ctx) {
    if (n_max < 1)
        throw std::invalid_argument("crossover_check needs n_max >= 1");
    // walk the real recurrence at alpha = -1; every Phi_n(-1) must equal h
    const double alpha = -1.0;
    double worst = 0.0;
    double w = std::pow(ctx.h, -alpha);
    for (std::size_t j = 0; j < n_max; ++j) {
        w *= (static_cast<double>(j) - alpha) / (static_cast<double>(j) + 1.0);
        worst = std::max(worst, std::abs(w - ctx.h));
    }
    return worst;
}

PhiCurve sample_phi_curve(const std::vector<std::size_t>& n_values, double alpha_min,
                          double alpha_max, double step, const PhiContext& ctx) {
    if (n_values.empty())
        throw std::invalid_argument("phi curve needs at least one degree n");
    if (!(alpha_min < alpha_max))
        throw std::invalid_argument("phi curve needs alpha_min < alpha_max");
    if (!(step > 0.0))
        throw std::invalid_argument("phi curve needs step > 0");
    check_order(alpha_min);
    check_order(alpha_max);

    PhiCurve curve;
    curve.n_values = n_values;
    const auto points =
        static_cast<std::size_t>(std::floor((alpha_max - alpha_min) / step * (1.0 + 1e-12))) + 1;
    curve.alpha_grid.reserve(points);
    for (std::size_t i = 0; i < points; ++i)
        curve.alpha_grid.push_back(alpha_min + static_cast<double>(i) * step);
    curve.values.reserve(n_values.size());
    for (std::size_t n : n_values) {
        std::vector<double> row(curve.alpha_grid.size());
        for (std::size_t j = 0; j < curve.alpha_grid.size(); ++j)
            row[j] = phi(n, curve.alpha_grid[j], ctx.h);
        curve.values.push_back(std::move(row));
    }
    return curve;
}

} // namespace glfrac
