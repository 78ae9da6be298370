// ident.hpp — parameter identification for FODE models from sampled data.
//
// With the orders alpha_i known, the unknown coefficients a_i are linear in
// the model equation.  Each integration shift m applied to both sides gives
// one equation
//
//     sum_i a_i * D^{alpha_i - m} y(t0) = D^{-m} r(t0),
//
// and q distinct shifts give a q x q linear system.  In the original scheme
// the shifts start at 0 and some operators remain differentiations, which
// amplify additive noise in y; the transformed scheme shifts every order
// strictly negative, so only integrations touch the data.

#pragma once

#include "glfrac/gl_engine.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace glfrac {

struct singular_system_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Scheme { original, transformed };

struct IdentificationSpec {
    std::vector<double> orders;      // known alpha_i, one per unknown
    Scheme scheme = Scheme::original;
    std::vector<std::size_t> shifts; // strictly increasing, one per unknown
    std::size_t t0_index = 0;        // evaluation sample
    Memory mem = Memory::whole_record();
};

struct LinearSystem {
    std::vector<std::vector<double>> a; // q x q
    std::vector<double> rhs;            // q
};

struct SolveResult {
    std::vector<double> x;
    double condition_indicator = 0.0; // max |pivot| / min |pivot|
};

struct IdentificationResult {
    std::vector<double> estimates;
    std::optional<std::vector<double>> true_values;
    std::optional<std::vector<double>> relative_errors_percent;
    double condition_indicator = 0.0;
};

/// Row p:  a[p][i] = D^{alpha_i - m_p} y(t0),  rhs[p] = D^{-m_p} r(t0).
/// Both sides go through the same GL engine so discretization bias cancels.
LinearSystem build_equations(const SampledSignal& r, const SampledSignal& y,
                             const IdentificationSpec& spec);

/// Gaussian elimination with partial pivoting.  Throws singular_system_error
/// when a pivot falls under 1e-12 * max|a|.
SolveResult solve_linear(std::vector<std::vector<double>> a, std::vector<double> rhs);

IdentificationResult identify(const SampledSignal& r, const SampledSignal& y,
                              const IdentificationSpec& spec,
                              const std::optional<std::vector<double>>& truth = std::nullopt);

} // namespace glfrac
