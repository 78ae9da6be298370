#include "glfrac/fode_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace glfrac {

FodeModel::FodeModel(std::vector<FodeTerm> terms) {
    if (terms.empty())
        throw std::invalid_argument("a model needs at least one term");
    for (const FodeTerm& t : terms) {
        if (!std::isfinite(t.coeff))
            throw std::invalid_argument("model coefficients must be finite");
        check_order(t.order);
    }
    std::sort(terms.begin(), terms.end(),
              [](const FodeTerm& a, const FodeTerm& b) { return a.order > b.order; });
    for (const FodeTerm& t : terms) {
        if (!terms_.empty() && terms_.back().order == t.order)
            terms_.back().coeff += t.coeff;
        else
            terms_.push_back(t);
    }
    std::erase_if(terms_, [](const FodeTerm& t) { return t.coeff == 0.0; });
    if (terms_.empty())
        throw std::invalid_argument("all model terms cancelled to zero");
}

SampledSignal simulate(const FodeModel& model, const SampledSignal& r, Memory mem) {
    if (!(r.h > 0.0) || !std::isfinite(r.h))
        throw std::invalid_argument("input signal step must be positive");
    if (r.values.empty())
        throw std::invalid_argument("input signal is empty");

    const std::size_t n = r.values.size();
    const std::size_t limit = mem.term_limit(r.h);
    const std::size_t horizon = std::min(n - 1, limit);

    // per-term weights, generated by the same streaming recurrence that
    // differintegrate uses, so both see bit-identical weight values
    std::vector<std::vector<double>> w(model.size());
    double denom = 0.0; // sum_i a_i h^{-alpha_i}, the j = 0 weights
    for (std::size_t i = 0; i < model.size(); ++i) {
        const FodeTerm& t = model.terms()[i];
        w[i].resize(horizon + 1);
        w[i][0] = std::pow(r.h, -t.order);
        for (std::size_t j = 0; j < horizon; ++j)
            w[i][j + 1] =
                w[i][j] * (static_cast<double>(j) - t.order) / (static_cast<double>(j) + 1.0);
        denom += t.coeff * w[i][0];
    }
    if (std::abs(denom) < 1e-300)
        throw singular_model_error("leading GL weights cancel; cannot step the model");

    SampledSignal c;
    c.h = r.h;
    c.values.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t terms = std::min(k, limit);
        double history = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            double s = 0.0;
            for (std::size_t j = 1; j <= terms; ++j)
                s += w[i][j] * c.values[k - j];
            history += model.terms()[i].coeff * s;
        }
        c.values[k] = (r.values[k] - history) / denom;

        // polish c[k] against the full sums in differintegrate's own summation
        // order; the rearranged step above is exact in real arithmetic but its
        // accumulator runs at the h^{-alpha} scale, which costs ~1e-8 of
        // roundoff on long records
        const double tol = 5e-10 * std::max(1.0, std::abs(r.values[k]));
        double best = c.values[k];
        double best_residual = std::numeric_limits<double>::infinity();
        for (int pass = 0; pass < 4; ++pass) {
            double lhs = 0.0;
            for (std::size_t i = 0; i < w.size(); ++i) {
                double acc = 0.0;
                for (std::size_t j = 0; j <= terms; ++j)
                    acc += w[i][j] * c.values[k - j];
                lhs += model.terms()[i].coeff * acc;
            }
            const double residual = lhs - r.values[k];
            if (std::abs(residual) < best_residual) {
                best_residual = std::abs(residual);
                best = c.values[k];
            }
            if (best_residual <= tol)
                break;
            c.values[k] -= residual / denom;
        }
        c.values[k] = best;
    }
    return c;
}

ShiftedModel shift_model(const FodeModel& model, std::size_t n) {
    std::vector<FodeTerm> shifted = model.terms();
    for (FodeTerm& t : shifted)
        t.order -= static_cast<double>(n);
    return ShiftedModel{FodeModel(std::move(shifted)), -static_cast<double>(n)};
}

std::size_t min_integrating_shift(const FodeModel& model) {
    const double top = model.max_order();
    if (top < 0.0)
        return 0;
    // strict negativity after the shift, so integer orders step one further
    return static_cast<std::size_t>(std::floor(top)) + 1;
}

} // namespace glfrac
