#include "glfrac/gl_engine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace glfrac {

void check_order(double alpha) {
    if (!std::isfinite(alpha))
        throw std::invalid_argument("differintegral order must be finite");
    if (std::abs(alpha) > kMaxOrderMagnitude)
        throw std::invalid_argument("differintegral order magnitude exceeds " +
                                    std::to_string(static_cast<int>(kMaxOrderMagnitude)));
}

WeightTable::WeightTable(double alpha, std::size_t horizon, double h)
    : alpha_(alpha), h_(h) {
    check_order(alpha);
    if (!(h > 0.0) || h > 1.0 || !std::isfinite(h))
        throw std::invalid_argument("weight table step h must be in (0, 1]");
    scale_ = std::pow(h_, -alpha_);
    b_.resize(horizon + 1);
    b_[0] = 1.0;
    for (std::size_t j = 1; j <= horizon; ++j)
        b_[j] = (1.0 - (1.0 + alpha_) / static_cast<double>(j)) * b_[j - 1];
}

double WeightTable::b(std::size_t j) const {
    if (j >= b_.size())
        throw std::out_of_range("coefficient index past table horizon");
    return b_[j];
}

double WeightTable::phi(std::size_t j) const { return scale_ * b(j); }

WeightTable gl_coefficients(double alpha, std::size_t horizon, std::size_t cap) {
    if (horizon > cap)
        throw std::length_error("coefficient horizon exceeds cap of " + std::to_string(cap));
    return WeightTable(alpha, horizon);
}

double phi(std::size_t degree, double alpha, double h) {
    check_order(alpha);
    if (!(h > 0.0) || !(h < 1.0))
        throw std::invalid_argument("phi requires 0 < h < 1");
    double w = std::pow(h, -alpha);
    for (std::size_t j = 0; j < degree; ++j)
        w *= (static_cast<double>(j) - alpha) / (static_cast<double>(j) + 1.0);
    return w;
}

std::size_t Memory::term_limit(double h) const {
    if (!(seconds > 0.0) || std::isnan(seconds))
        throw std::invalid_argument("memory length must be positive");
    if (seconds / h < 1.0)
        throw std::invalid_argument("memory shorter than one sampling interval");
    // floor with a half-ulp guard so L/h = 10/0.001 lands on 10000, not 9999
    const double ratio = std::floor(seconds / h * (1.0 + 1e-12));
    if (!(ratio < 9.0e18)) // inf or past size_t range: whole record
        return std::numeric_limits<std::size_t>::max();
    return static_cast<std::size_t>(ratio);
}

namespace {

void check_signal(const SampledSignal& f) {
    if (!(f.h > 0.0) || !std::isfinite(f.h))
        throw std::invalid_argument("signal step must be positive and finite");
    if (f.values.empty())
        throw std::invalid_argument("signal must hold at least one sample");
}

// Phi weights for j = 0..horizon, directly by the multiplicative recurrence
// (raw b_j can overflow for extreme negative orders; Phi stays representable).
std::vector<double> phi_weights(double alpha, double h, std::size_t horizon) {
    std::vector<double> w(horizon + 1);
    w[0] = std::pow(h, -alpha);
    for (std::size_t j = 0; j < horizon; ++j)
        w[j + 1] = w[j] * (static_cast<double>(j) - alpha) / (static_cast<double>(j) + 1.0);
    return w;
}

} // namespace

double differintegrate(const SampledSignal& f, double alpha, std::size_t t_index, Memory mem) {
    check_signal(f);
    check_order(alpha);
    if (t_index >= f.values.size())
        throw std::out_of_range("sample index past end of signal");
    const std::size_t limit = mem.term_limit(f.h);
    const std::size_t terms = std::min(t_index, limit); // J
    double w = std::pow(f.h, -alpha);
    double acc = 0.0;
    for (std::size_t j = 0; j <= terms; ++j) {
        acc += w * f.values[t_index - j];
        w *= (static_cast<double>(j) - alpha) / (static_cast<double>(j) + 1.0);
    }
    return acc;
}

SampledSignal differintegrate_series(const SampledSignal& f, double alpha, Memory mem) {
    check_signal(f);
    check_order(alpha);
    const std::size_t n = f.values.size();
    const std::size_t limit = mem.term_limit(f.h);
    const std::vector<double> w = phi_weights(alpha, f.h, std::min(n - 1, limit));
    SampledSignal out;
    out.h = f.h;
    out.values.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t terms = std::min(k, limit);
        double acc = 0.0;
        for (std::size_t j = 0; j <= terms; ++j)
            acc += w[j] * f.values[k - j];
        out.values[k] = acc;
    }
    return out;
}

} // namespace glfrac
