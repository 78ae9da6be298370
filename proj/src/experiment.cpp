#include "glfrac/experiment.hpp"

#include "glfrac/signals.hpp"

#include <cmath>
#include <fstream>
#include "glfrac/errors.hpp"

#include <stdexcept>

namespace glfrac {

using nlohmann::json;
using nlohmann::ordered_json;

const char* scheme_name(Scheme scheme) {
    return scheme == Scheme::original ? "original" : "transformed";
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "original")
        return Scheme::original;
    if (name == "transformed")
        return Scheme::transformed;
    throw config_error("unknown scheme '" + name + "' (original|transformed)");
}

FodeModel model_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array() ||
        doc["terms"].empty())
        throw config_error("model: expected {\"terms\":[{\"coeff\":..,\"order\":..},..]}");
    std::vector<FodeTerm> terms;
    for (const auto& t : doc["terms"]) {
        if (!t.contains("coeff") || !t.contains("order") || !t["coeff"].is_number() ||
            !t["order"].is_number())
            throw config_error("model: each term needs numeric 'coeff' and 'order'");
        terms.push_back({t["coeff"].get<double>(), t["order"].get<double>()});
    }
    return FodeModel(std::move(terms));
}

ordered_json model_to_json(const FodeModel& model) {
    ordered_json terms = ordered_json::array();
    for (const FodeTerm& t : model.terms())
        terms.push_back({{"coeff", t.coeff}, {"order", t.order}});
    return ordered_json{{"terms", std::move(terms)}};
}

FodeModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot read model '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw config_error("model '" + path + "': " + e.what());
    }
    return model_from_json(doc);
}

namespace {

double require_number(const json& doc, const char* field) {
    if (!doc.contains(field) || !doc[field].is_number())
        throw config_error(std::string("config: missing numeric field '") + field + "'");
    return doc[field].get<double>();
}

std::size_t index_for_time(double t, double dt) {
    return static_cast<std::size_t>(std::llround(t / dt));
}

} // namespace

ExperimentConfig experiment_config_from_json(const json& doc) {
    if (!doc.is_object())
        throw config_error("config: expected a JSON object");
    ExperimentConfig cfg;
    if (!doc.contains("model"))
        throw config_error("config: missing 'model'");
    cfg.model_terms = model_from_json(doc["model"]).terms();
    cfg.duration = require_number(doc, "duration");
    cfg.dt = require_number(doc, "dt");
    cfg.memory = doc.contains("memory") ? require_number(doc, "memory") : cfg.duration;
    cfg.t0 = doc.contains("t0") ? require_number(doc, "t0") : cfg.duration;
    cfg.noise_e_max = require_number(doc, "noise_e_max");

    if (!(cfg.dt > 0.0))
        throw config_error("config: 'dt' must be > 0");
    if (!(cfg.t0 > 0.0) || !(cfg.duration >= cfg.t0))
        throw config_error("config: need duration >= t0 > 0");
    if (!(cfg.memory > 0.0) || cfg.memory > cfg.duration)
        throw config_error("config: need 0 < memory <= duration");
    if (cfg.noise_e_max < 0.0)
        throw config_error("config: 'noise_e_max' must be >= 0");

    if (!doc.contains("seeds") || !doc["seeds"].is_array())
        throw config_error("config: missing 'seeds' array");
    for (const auto& s : doc["seeds"]) {
        if (!s.is_number_integer())
            throw config_error("config: 'seeds' must hold integers");
        cfg.seeds.push_back(s.get<std::uint64_t>());
    }

    if (doc.contains("scheme"))
        cfg.scheme = scheme_from_name(doc["scheme"].get<std::string>());
    if (doc.contains("shifts")) {
        if (!doc["shifts"].is_array())
            throw config_error("config: 'shifts' must be an array");
        std::vector<std::size_t> shifts;
        for (const auto& s : doc["shifts"])
            shifts.push_back(s.get<std::size_t>());
        cfg.shifts = std::move(shifts);
    }
    return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot read config '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw config_error("config '" + path + "': " + e.what());
    }
    return experiment_config_from_json(doc);
}

std::vector<std::size_t> default_shifts(const FodeModel& model, Scheme scheme) {
    const std::size_t q = model.size();
    const std::size_t base = scheme == Scheme::original ? 0 : min_integrating_shift(model);
    std::vector<std::size_t> shifts(q);
    for (std::size_t i = 0; i < q; ++i)
        shifts[i] = base + i;
    return shifts;
}

namespace {

RunOutcome run_identification(const SampledSignal& r, const SampledSignal& y,
                              const IdentificationSpec& spec, const std::vector<double>& truth) {
    RunOutcome out;
    try {
        IdentificationResult res = identify(r, y, spec, truth);
        out.status = "ok";
        out.estimates = std::move(res.estimates);
        out.errors_percent = std::move(*res.relative_errors_percent);
        out.condition_indicator = res.condition_indicator;
    } catch (const singular_system_error&) {
        out.status = "singular";
    }
    return out;
}

} // namespace

ExperimentReport run_experiment(const ExperimentConfig& config) {
    const FodeModel model(config.model_terms);
    const SampledSignal r = unit_step(config.duration, config.dt);
    const Memory mem{config.memory};
    const SampledSignal c = simulate(model, r, mem);

    ExperimentReport report;
    for (const FodeTerm& t : model.terms()) {
        report.truth.push_back(t.coeff);
        report.orders.push_back(t.order);
    }
    report.t0_index = index_for_time(config.t0, config.dt);
    if (report.t0_index >= c.values.size())
        throw config_error("config: t0 falls past the simulated record");

    std::vector<Scheme> schemes;
    if (config.scheme)
        schemes.push_back(*config.scheme);
    else
        schemes = {Scheme::original, Scheme::transformed};

    for (Scheme scheme : schemes) {
        SchemeOutcome outcome;
        outcome.scheme = scheme;
        outcome.shifts = (config.scheme && config.shifts) ? *config.shifts
                                                          : default_shifts(model, scheme);
        IdentificationSpec spec;
        spec.orders = report.orders;
        spec.scheme = scheme;
        spec.shifts = outcome.shifts;
        spec.t0_index = report.t0_index;
        spec.mem = mem;

        outcome.clean = run_identification(r, c, spec, report.truth);
        for (std::uint64_t seed : config.seeds) {
            SampledSignal y = c;
            if (config.noise_e_max > 0.0) {
                NoiseSpec noise{config.noise_e_max, seed, c.values.size(), c.h};
                y = add(c, uniform_noise(noise));
            }
            outcome.noisy.emplace_back(seed, run_identification(r, y, spec, report.truth));
        }
        report.schemes.push_back(std::move(outcome));
    }
    return report;
}

namespace {

ordered_json outcome_to_json(const RunOutcome& run) {
    ordered_json j;
    j["status"] = run.status;
    if (run.status == "ok") {
        j["estimates"] = run.estimates;
        j["errors_percent"] = run.errors_percent;
        j["condition_indicator"] = run.condition_indicator;
    }
    return j;
}

} // namespace

ordered_json report_to_json(const ExperimentConfig& config, const ExperimentReport& report) {
    ordered_json j;
    j["model"] = model_to_json(FodeModel(config.model_terms));
    j["duration"] = config.duration;
    j["dt"] = config.dt;
    j["memory"] = config.memory;
    j["t0"] = config.t0;
    j["noise_e_max"] = config.noise_e_max;
    j["seeds"] = config.seeds;
    j["truth"] = report.truth;
    j["orders"] = report.orders;
    j["t0_index"] = report.t0_index;
    ordered_json schemes;
    for (const SchemeOutcome& outcome : report.schemes) {
        ordered_json s;
        s["shifts"] = outcome.shifts;
        s["clean"] = outcome_to_json(outcome.clean);
        ordered_json noisy = ordered_json::array();
        for (const auto& [seed, run] : outcome.noisy) {
            ordered_json entry = outcome_to_json(run);
            entry["seed"] = seed;
            noisy.push_back(std::move(entry));
        }
        s["noisy"] = std::move(noisy);
        schemes[scheme_name(outcome.scheme)] = std::move(s);
    }
    j["schemes"] = std::move(schemes);
    return j;
}

void write_report(const std::string& path, const ordered_json& report) {
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot write report '" + path + "'");
    out << report.dump(2) << '\n';
    out.flush();
    if (!out)
        throw io_error("write to '" + path + "' failed");
}

std::vector<std::vector<double>> noise_differintegral_table(
    double e_max, const std::vector<std::uint64_t>& seeds, const std::vector<double>& orders,
    double duration, double dt) {
    if (e_max < 0.0 || !std::isfinite(e_max))
        throw std::invalid_argument("noise amplitude must be >= 0");
    for (double a : orders)
        check_order(a);
    const std::size_t count = unit_step(duration, dt).values.size();
    const std::size_t t_eval = count - 1;
    std::vector<std::vector<double>> table;
    table.reserve(seeds.size());
    for (std::uint64_t seed : seeds) {
        SampledSignal e;
        if (e_max > 0.0) {
            e = uniform_noise(NoiseSpec{e_max, seed, count, dt});
        } else {
            e.h = dt;
            e.values.assign(count, 0.0);
        }
        std::vector<double> row;
        row.reserve(orders.size());
        for (double a : orders)
            row.push_back(differintegrate(e, a, t_eval));
        table.push_back(std::move(row));
    }
    return table;
}

} // namespace glfrac
