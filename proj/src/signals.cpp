#include "glfrac/signals.hpp"

#include <cmath>
#include <stdexcept>

namespace glfrac {

SampledSignal unit_step(double duration, double h) {
    if (!(h > 0.0) || !std::isfinite(h))
        throw std::invalid_argument("unit_step needs h > 0");
    if (!(duration >= h) || !std::isfinite(duration))
        throw std::invalid_argument("unit_step needs duration >= h");
    SampledSignal s;
    s.h = h;
    const auto count = static_cast<std::size_t>(std::floor(duration / h * (1.0 + 1e-12))) + 1;
    s.values.assign(count, 1.0);
    return s;
}

SampledSignal uniform_noise(const NoiseSpec& spec) {
    if (!(spec.e_max > 0.0) || !std::isfinite(spec.e_max))
        throw std::invalid_argument("noise amplitude must be positive");
    if (spec.count < 1)
        throw std::invalid_argument("noise needs at least one sample");
    if (!(spec.h > 0.0) || !std::isfinite(spec.h))
        throw std::invalid_argument("noise grid step must be positive");
    SampledSignal s;
    s.h = spec.h;
    s.values.resize(spec.count);
    SplitMix64 rng(spec.seed);
    for (double& v : s.values)
        v = (2.0 * rng.next_unit() - 1.0) * spec.e_max;
    return s;
}

SampledSignal add(const SampledSignal& a, const SampledSignal& b) {
    if (a.h != b.h || a.values.size() != b.values.size())
        throw std::invalid_argument("signal grids do not match");
    SampledSignal s;
    s.h = a.h;
    s.values.resize(a.values.size());
    for (std::size_t k = 0; k < a.values.size(); ++k)
        s.values[k] = a.values[k] + b.values[k];
    return s;
}

} // namespace glfrac
