// experiment.hpp — the end-to-end identification experiment and the noise
// differintegral table, behind the CLI.
//
// An experiment simulates a known model under a unit step, identifies its
// coefficients from the clean response, then repeats the identification on
// noisy copies of the response (one bounded uniform noise waveform per seed)
// for one or both shift schemes.  The report carries everything needed to
// judge noise robustness: estimates, relative errors and the elimination
// condition indicator, per scheme, for the clean baseline and for every seed.

#pragma once

#include "glfrac/fode_sim.hpp"
#include "glfrac/ident.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace glfrac {

struct ExperimentConfig {
    std::vector<FodeTerm> model_terms;
    double duration = 0.0; // seconds
    double dt = 0.0;       // seconds
    double memory = 0.0;   // seconds; defaults to duration
    double t0 = 0.0;       // evaluation time; defaults to duration
    double noise_e_max = 0.0;
    std::vector<std::uint64_t> seeds;
    std::optional<Scheme> scheme;                    // absent: run both schemes
    std::optional<std::vector<std::size_t>> shifts;  // absent: per-scheme default
};

/// Parses and validates; throws std::runtime_error naming the offending field.
ExperimentConfig experiment_config_from_json(const nlohmann::json& doc);
ExperimentConfig load_experiment_config(const std::string& path);

/// {"terms":[{"coeff":..,"order":..},...]}
FodeModel model_from_json(const nlohmann::json& doc);
nlohmann::ordered_json model_to_json(const FodeModel& model);
FodeModel load_model(const std::string& path);

struct RunOutcome {
    std::string status; // "ok" or "singular"
    std::vector<double> estimates;
    std::vector<double> errors_percent;
    double condition_indicator = 0.0;
};

struct SchemeOutcome {
    Scheme scheme = Scheme::original;
    std::vector<std::size_t> shifts;
    RunOutcome clean;
    std::vector<std::pair<std::uint64_t, RunOutcome>> noisy; // ordered by seed list
};

struct ExperimentReport {
    std::vector<double> truth;  // model coefficients, descending order
    std::vector<double> orders; // matching alpha_i
    std::size_t t0_index = 0;
    std::vector<SchemeOutcome> schemes;
};

ExperimentReport run_experiment(const ExperimentConfig& config);

nlohmann::ordered_json report_to_json(const ExperimentConfig& config,
                                      const ExperimentReport& report);
void write_report(const std::string& path, const nlohmann::ordered_json& report);

/// Default shift sets: original {0,1,..,q-1}; transformed {n,..,n+q-1} with n
/// the smallest shift that turns every order into an integration.
std::vector<std::size_t> default_shifts(const FodeModel& model, Scheme scheme);

/// values[s][i] = D^{orders[i]} e(t_eval) for the noise waveform of seeds[s].
std::vector<std::vector<double>> noise_differintegral_table(
    double e_max, const std::vector<std::uint64_t>& seeds, const std::vector<double>& orders,
    double duration, double dt);

const char* scheme_name(Scheme scheme);
Scheme scheme_from_name(const std::string& name);

} // namespace glfrac
