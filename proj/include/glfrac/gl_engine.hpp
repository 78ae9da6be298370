// gl_engine.hpp — Grunwald-Letnikov differintegral of uniformly sampled signals.
//
// The differintegral D^alpha unifies differentiation (alpha > 0), the identity
// (alpha == 0) and iterated integration (alpha < 0) in one operator.  Its
// discrete form is a weighted sum over past samples,
//
//     D^alpha f(t) ~= h^{-alpha} * sum_{j=0..N} b_j * f(t - j*h),
//
// with binomial-type coefficients generated by the recurrence
// b_0 = 1, b_j = (1 - (1+alpha)/j) * b_{j-1}.  The weight of the j-th past
// sample, Phi_j(alpha) = h^{-alpha} * b_j, is the central object analysed in
// phi_analysis.hpp.

#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace glfrac {

// Orders are range-guarded so h^{-alpha} stays inside binary64 for h >= 1e-3.
inline constexpr double kMaxOrderMagnitude = 64.0;

// Coefficient cap for gl_coefficients; building longer tables is treated as a
// resource error rather than an honest attempt.
inline constexpr std::size_t kDefaultCoefficientCap = 10'000'000;

/// Throws std::invalid_argument unless alpha is finite and |alpha| <= 64.
void check_order(double alpha);

/// GL coefficients b_0..b_N for one order, plus the step h that scales them
/// into the weights Phi_j = h^{-alpha} * b_j.  Immutable after construction.
class WeightTable {
  public:
    // h = 1 leaves phi() equal to the raw coefficients.
    WeightTable(double alpha, std::size_t horizon, double h = 1.0);

    double alpha() const noexcept { return alpha_; }
    double h() const noexcept { return h_; }
    std::size_t horizon() const noexcept { return b_.size() - 1; } // N
    std::span<const double> coefficients() const noexcept { return b_; }

    double b(std::size_t j) const;   // throws std::out_of_range past N
    double phi(std::size_t j) const; // h^{-alpha} * b_j

  private:
    double alpha_;
    double h_;
    double scale_; // h^{-alpha}, fixed at construction
    std::vector<double> b_;
};

/// Recursive b_0..b_horizon table for the given order.
/// Throws std::length_error when horizon exceeds cap.
WeightTable gl_coefficients(double alpha, std::size_t horizon,
                            std::size_t cap = kDefaultCoefficientCap);

/// Phi_n(alpha) = h^{-alpha} * b_n by the multiplicative recurrence
/// Phi_0 = h^{-alpha}, Phi_{j+1} = Phi_j * (j - alpha)/(j + 1).
/// Requires 0 < h < 1.
double phi(std::size_t degree, double alpha, double h);

/// Uniformly sampled real signal: values[k] = f(k*h), k = 0..K.
/// The signal is taken to be at rest (identically zero) for t < 0.
struct SampledSignal {
    double h = 1.0;             // sampling interval, > 0
    std::vector<double> values; // at least one sample

    std::size_t size() const noexcept { return values.size(); }
    double time_at(std::size_t k) const noexcept { return static_cast<double>(k) * h; }
    double duration() const noexcept { return time_at(values.size() - 1); }
};

/// How far into the past the discrete GL sum reaches: N = floor(L/h) terms.
struct Memory {
    double seconds = std::numeric_limits<double>::infinity();

    // covers however many samples exist; the default for every operation here
    static Memory whole_record() { return Memory{}; }

    std::size_t term_limit(double h) const;
};

/// D^alpha f at sample t_index: sum_{j=0..J} Phi_j(alpha) * f[(t_index-j)*h]
/// with J = min(t_index, floor(L/h)).  Samples before t = 0 contribute zero.
double differintegrate(const SampledSignal& f, double alpha, std::size_t t_index,
                       Memory mem = Memory::whole_record());

/// differintegrate at every sample index; same grid as the input.
SampledSignal differintegrate_series(const SampledSignal& f, double alpha,
                                     Memory mem = Memory::whole_record());

} // namespace glfrac
