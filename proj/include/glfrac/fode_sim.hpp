// fode_sim.hpp — fractional-order differential equations and their GL stepping.
//
// A model is the left-hand side of
//
//     a_n D^{alpha_n} c(t) + ... + a_1 D^{alpha_1} c(t) + a_0 c(t) = r(t),
//
// simulated by isolating the j = 0 term of every GL sum: each step solves the
// discrete equation for c[k] given the already-computed history.  Because the
// step formula is an exact rearrangement of the discrete equation, plugging
// the simulated output back into the discretized model reproduces the input
// to roundoff.

#pragma once

#include "glfrac/gl_engine.hpp"

#include <stdexcept>

namespace glfrac {

/// Raised when the j = 0 weights of a model sum to (near) zero and no step
/// can be solved.
struct singular_model_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FodeTerm {
    double coeff = 0.0; // a_i
    double order = 0.0; // alpha_i
};

/// Non-empty term list, distinct orders, sorted descending by order.
/// Duplicate orders merge by summing coefficients; exact-zero coefficients
/// are dropped.
class FodeModel {
  public:
    explicit FodeModel(std::vector<FodeTerm> terms);

    const std::vector<FodeTerm>& terms() const noexcept { return terms_; }
    double max_order() const noexcept { return terms_.front().order; }
    std::size_t size() const noexcept { return terms_.size(); }

  private:
    std::vector<FodeTerm> terms_;
};

/// Response c to input r by GL time stepping with zero pre-history.
SampledSignal simulate(const FodeModel& model, const SampledSignal& r,
                       Memory mem = Memory::whole_record());

/// Model with every order lowered by n; the right-hand side of the shifted
/// equation is D^{-n} r.
struct ShiftedModel {
    FodeModel model;
    double rhs_order = 0.0; // -n
};

ShiftedModel shift_model(const FodeModel& model, std::size_t n);

/// Smallest integer shift that makes every order strictly negative.
std::size_t min_integrating_shift(const FodeModel& model);

} // namespace glfrac
