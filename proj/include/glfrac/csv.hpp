// csv.hpp — CSV writers/readers for signals, phi curves and noise tables.
// Numbers are written with 17 significant digits so binary64 values
// round-trip exactly.

#pragma once

#include "glfrac/gl_engine.hpp"
#include "glfrac/phi_analysis.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace glfrac {

std::string format_number(double v);

/// Two columns, header "time,value".
void write_signal_csv(const std::string& path, const SampledSignal& s);

/// Header "time,value" expected; throws std::runtime_error with a line number
/// on malformed rows or a non-uniform grid.
SampledSignal read_signal_csv(const std::string& path);

/// Header "alpha,n=<n1>,n=<n2>,..."; one row per grid point.
void write_phi_curve_csv(const std::string& path, const PhiCurve& curve);

/// Header "seed,alpha=<a1>,..."; one row per seed, entries D^alpha e(t_eval).
void write_noise_table_csv(const std::string& path, const std::vector<std::uint64_t>& seeds,
                           const std::vector<double>& orders,
                           const std::vector<std::vector<double>>& values);

} // namespace glfrac
