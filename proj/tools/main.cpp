// glfrac — CLI for the Grunwald-Letnikov fractional calculus toolkit.
//
// Subcommands: weights, phi-curve, noise-table, simulate, identify, experiment.
// Every command is deterministic given its arguments; randomness only enters
// through explicit seeds.  Exit codes: 0 success, 2 usage, 3 config, 4 domain,
// 5 bounds, 6 resource, 7 singular, 8 io.

#include "glfrac/csv.hpp"
#include "glfrac/errors.hpp"
#include "glfrac/experiment.hpp"
#include "glfrac/fode_sim.hpp"
#include "glfrac/gl_engine.hpp"
#include "glfrac/ident.hpp"
#include "glfrac/phi_analysis.hpp"
#include "glfrac/signals.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace glfrac;

void cmd_weights(double alpha, std::size_t count, double h) {
    if (!(h > 0.0) || !(h <= 1.0))
        throw std::invalid_argument("weights needs 0 < h <= 1");
    const WeightTable table = gl_coefficients(alpha, count);
    const double scale = std::pow(h, -alpha);
    std::cout << "j,b,phi\n";
    for (std::size_t j = 0; j <= table.horizon(); ++j)
        std::cout << j << ',' << format_number(table.b(j)) << ','
                  << format_number(scale * table.b(j)) << '\n';
}

void cmd_phi_curve(const std::vector<std::size_t>& n_values, double alpha_min, double alpha_max,
                   double step, double h, const std::string& out) {
    const PhiContext ctx(h);
    write_phi_curve_csv(out, sample_phi_curve(n_values, alpha_min, alpha_max, step, ctx));
}

void cmd_noise_table(double e_max, const std::vector<std::uint64_t>& seeds,
                     const std::vector<double>& orders, double duration, double dt,
                     const std::string& out) {
    write_noise_table_csv(out, seeds, orders,
                          noise_differintegral_table(e_max, seeds, orders, duration, dt));
}

void cmd_simulate(const std::string& model_path, double duration, double dt,
                  std::optional<double> memory, const std::string& out) {
    const FodeModel model = load_model(model_path);
    const SampledSignal r = unit_step(duration, dt);
    const Memory mem{memory.value_or(duration)};
    write_signal_csv(out, simulate(model, r, mem));
}

void cmd_identify(const std::string& y_path, const std::string& model_path,
                  const std::vector<double>& orders_flag, const std::string& scheme_name_flag,
                  const std::vector<std::size_t>& shifts_flag, std::optional<double> t0,
                  std::optional<double> memory, const std::string& out) {
    const SampledSignal y = read_signal_csv(y_path);
    const SampledSignal r = unit_step(y.duration(), y.h);

    std::vector<double> orders = orders_flag;
    std::optional<std::vector<double>> truth;
    std::optional<FodeModel> model;
    if (!model_path.empty()) {
        model = load_model(model_path);
        orders.clear();
        truth.emplace();
        for (const FodeTerm& t : model->terms()) {
            orders.push_back(t.order);
            truth->push_back(t.coeff);
        }
    }
    if (orders.empty())
        throw config_error("identify: give --model or a non-empty --orders list");
    if (!model) {
        std::vector<FodeTerm> terms;
        for (double a : orders)
            terms.push_back({1.0, a}); // placeholder coefficients; only orders matter
        model.emplace(std::move(terms));
    }

    IdentificationSpec spec;
    spec.orders = orders;
    spec.scheme = scheme_from_name(scheme_name_flag);
    spec.shifts = shifts_flag.empty() ? default_shifts(*model, spec.scheme) : shifts_flag;
    const double t0_seconds = t0.value_or(y.duration());
    spec.t0_index = static_cast<std::size_t>(std::llround(t0_seconds / y.h));
    spec.mem = Memory{memory.value_or(y.duration())};

    const IdentificationResult res = identify(r, y, spec, truth);
    nlohmann::ordered_json j;
    j["orders"] = spec.orders;
    j["scheme"] = scheme_name(spec.scheme);
    j["shifts"] = spec.shifts;
    j["t0_index"] = spec.t0_index;
    j["estimates"] = res.estimates;
    if (res.true_values)
        j["truth"] = *res.true_values;
    if (res.relative_errors_percent)
        j["errors_percent"] = *res.relative_errors_percent;
    j["condition_indicator"] = res.condition_indicator;
    if (out.empty())
        std::cout << j.dump(2) << '\n';
    else
        write_report(out, j);
}

void cmd_experiment(const std::string& config_path, const std::string& out) {
    const ExperimentConfig config = load_experiment_config(config_path);
    const ExperimentReport report = run_experiment(config);
    write_report(out, report_to_json(config, report));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grunwald-Letnikov fractional differintegrals, FODE simulation and "
                 "noise-robust identification"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help and exit");
    const auto subcommand = [&app](const char* name, const char* description) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->set_help_flag("--help", "print help and exit");
        return sub;
    };

    // weights
    double alpha = 0.0, h = 0.001, step = 0.01;
    std::size_t count = 10;
    auto* weights = subcommand("weights", "print b_j and the weights phi_j(alpha)");
    weights->add_option("--alpha", alpha, "differintegral order")->required();
    weights->add_option("--n", count, "highest coefficient index");
    weights->add_option("--h,--dt", h, "sampling interval for the phi column");
    weights->callback([&] { cmd_weights(alpha, count, h); });

    // phi-curve
    std::vector<std::size_t> n_values;
    double alpha_min = -12.0, alpha_max = 0.0;
    std::string out;
    auto* curve = subcommand("phi-curve", "sample phi_n(alpha) over an order grid to CSV");
    curve->add_option("--n", n_values, "degrees n (comma separated)")
        ->required()
        ->delimiter(',');
    curve->add_option("--alpha-min", alpha_min, "grid start");
    curve->add_option("--alpha-max", alpha_max, "grid end");
    curve->add_option("--step", step, "grid step");
    curve->add_option("--h,--dt", h, "sampling interval");
    curve->add_option("-o,--out", out, "output CSV path")->required();
    curve->callback([&] { cmd_phi_curve(n_values, alpha_min, alpha_max, step, h, out); });

    // noise-table
    double e_max = 0.01, duration = 10.0, dt = 0.001;
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    std::vector<double> orders{1.5, 1.2, 0.9, 0.6, 0.3, -0.3, -0.6, -0.9, -1.2, -1.5};
    auto* noise = subcommand("noise-table", "tabulate D^alpha e(t) for seeded noise waveforms");
    noise->add_option("--emax", e_max, "noise amplitude bound");
    noise->add_option("--seeds", seeds, "noise seeds")->delimiter(',');
    noise->add_option("--orders", orders, "differintegral orders")->delimiter(',');
    noise->add_option("--duration", duration, "record length, seconds");
    noise->add_option("--h,--dt", dt, "sampling interval, seconds");
    noise->add_option("-o,--out", out, "output CSV path")->required();
    noise->callback(
        [&] { cmd_noise_table(e_max, seeds, orders, duration, dt, out); });

    // simulate
    std::string model_path;
    std::optional<double> memory, t0;
    auto* sim = subcommand("simulate", "unit step response of a model to CSV");
    sim->add_option("--model", model_path, "model JSON path")->required();
    sim->add_option("--duration", duration, "record length, seconds")->required();
    sim->add_option("--h,--dt", dt, "sampling interval, seconds")->required();
    sim->add_option("--memory", memory, "memory length, seconds (default: duration)");
    sim->add_option("-o,--out", out, "output CSV path")->required();
    sim->callback([&] { cmd_simulate(model_path, duration, dt, memory, out); });

    // identify
    std::string y_path, scheme = "original", ident_model, ident_out;
    std::vector<double> ident_orders;
    std::vector<std::size_t> shifts;
    auto* ident = subcommand("identify", "estimate model coefficients from a measured step response CSV");
    ident->add_option("y_csv", y_path, "measured output, time,value CSV")->required();
    ident->add_option("--model", ident_model, "model JSON giving orders and true coefficients");
    ident->add_option("--orders", ident_orders, "known orders when no model is given")
        ->delimiter(',');
    ident->add_option("--scheme", scheme, "original|transformed");
    ident->add_option("--shifts", shifts, "integration shifts, one per unknown")->delimiter(',');
    ident->add_option("--t0", t0, "evaluation time, seconds (default: end of record)");
    ident->add_option("--memory", memory, "memory length, seconds (default: record length)");
    ident->add_option("-o,--out", ident_out, "report JSON path (default: stdout)");
    ident->callback([&] {
        cmd_identify(y_path, ident_model, ident_orders, scheme, shifts, t0, memory, ident_out);
    });

    // experiment
    std::string config_path;
    auto* exper = subcommand("experiment", "simulate, add seeded noise and identify per scheme; write a JSON report");
    exper->add_option("--config", config_path, "experiment config JSON")->required();
    exper->add_option("-o,--out", out, "report JSON path")->required();
    exper->callback([&] { cmd_experiment(config_path, out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help and friends
        std::cerr << "error: usage: " << e.what() << '\n';
        return 2;
    } catch (const config_error& e) {
        std::cerr << "error: config: " << e.what() << '\n';
        return 3;
    } catch (const singular_model_error& e) {
        std::cerr << "error: singular: " << e.what() << '\n';
        return 7;
    } catch (const singular_system_error& e) {
        std::cerr << "error: singular: " << e.what() << '\n';
        return 7;
    } catch (const io_error& e) {
        std::cerr << "error: io: " << e.what() << '\n';
        return 8;
    } catch (const std::length_error& e) {
        std::cerr << "error: resource: " << e.what() << '\n';
        return 6;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: bounds: " << e.what() << '\n';
        return 5;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: domain: " << e.what() << '\n';
        return 4;
    } catch (const std::domain_error& e) {
        std::cerr << "error: domain: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
