#include "glfrac/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include "glfrac/errors.hpp"

#include <stdexcept>

namespace glfrac {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot write to '" + path + "'");
    return out;
}

void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out)
        throw io_error("write to '" + path + "' failed");
}

} // namespace

void write_signal_csv(const std::string& path, const SampledSignal& s) {
    std::ofstream out = open_out(path);
    out << "time,value\n";
    for (std::size_t k = 0; k < s.values.size(); ++k)
        out << format_number(s.time_at(k)) << ',' << format_number(s.values[k]) << '\n';
    finish(out, path);
}

SampledSignal read_signal_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot read '" + path + "'");
    std::string line;
    if (!std::getline(in, line) || line.rfind("time,value", 0) != 0)
        throw config_error("'" + path + "': expected header 'time,value'");

    std::vector<double> times;
    std::vector<double> values;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        double t = 0.0, v = 0.0;
        char sep = 0;
        std::istringstream row(line);
        if (!(row >> t >> sep >> v) || sep != ',')
            throw config_error("'" + path + "' line " + std::to_string(line_no) +
                                     ": expected 'time,value'");
        times.push_back(t);
        values.push_back(v);
    }
    if (values.size() < 2)
        throw config_error("'" + path + "': need at least two samples");

    const double h = times[1] - times[0];
    if (!(h > 0.0))
        throw config_error("'" + path + "': time column must increase");
    for (std::size_t k = 0; k < times.size(); ++k) {
        const double expected = static_cast<double>(k) * h + times[0];
        if (std::abs(times[k] - expected) > 1e-9 * std::max(1.0, std::abs(expected)))
            throw config_error("'" + path + "' line " + std::to_string(k + 2) +
                                     ": non-uniform sampling grid");
    }
    if (std::abs(times[0]) > 1e-12)
        throw config_error("'" + path + "': signal must start at t = 0");

    SampledSignal s;
    s.h = h;
    s.values = std::move(values);
    return s;
}

void write_phi_curve_csv(const std::string& path, const PhiCurve& curve) {
    std::ofstream out = open_out(path);
    out << "alpha";
    for (std::size_t n : curve.n_values)
        out << ",n=" << n;
    out << '\n';
    for (std::size_t j = 0; j < curve.alpha_grid.size(); ++j) {
        out << format_number(curve.alpha_grid[j]);
        for (std::size_t i = 0; i < curve.n_values.size(); ++i)
            out << ',' << format_number(curve.values[i][j]);
        out << '\n';
    }
    finish(out, path);
}

void write_noise_table_csv(const std::string& path, const std::vector<std::uint64_t>& seeds,
                           const std::vector<double>& orders,
                           const std::vector<std::vector<double>>& values) {
    std::ofstream out = open_out(path);
    out << "seed";
    for (double a : orders)
        out << ",alpha=" << format_number(a);
    out << '\n';
    for (std::size_t s = 0; s < seeds.size(); ++s) {
        out << seeds[s];
        for (std::size_t i = 0; i < orders.size(); ++i)
            out << ',' << format_number(values[s][i]);
        out << '\n';
    }
    finish(out, path);
}

} // namespace glfrac
