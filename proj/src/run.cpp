// Copyright 2026 The relstate authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "relstate/run.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "relstate/format.hpp"
#include "relstate/future_truth.hpp"
#include "relstate/io.hpp"
#include "relstate/models.hpp"
#include "relstate/relative_state.hpp"
#include "relstate/svg.hpp"
#include "relstate/temporal_logic.hpp"

namespace relstate {

namespace {

struct ModelBundle {
    Factorization f;
    std::shared_ptr<const Dynamics> dynamics;
    std::function<StateVector(double)> state_at;
    std::optional<Operator> hamiltonian;
    std::vector<std::string> labels;
};

ModelBundle make_bundle(const RunConfig& cfg) {
    if (cfg.model == "cat") {
        const CatModel m(cfg.cat->gamma, cfg.cat->bins, cfg.cat->t_max);
        return ModelBundle{cat_factorization(m), std::make_shared<CatDynamics>(m),
                           [m](double t) { return cat_state_at(m, t); }, std::nullopt,
                           cat_labels(m)};
    }
    if (cfg.model == "ideal_measurement") {
        const IdealMeasurementModel m(cfg.ideal_measurement->coefficients,
                                      cfg.ideal_measurement->interaction_time);
        Operator h = ideal_measurement_hamiltonian(m);
        auto dyn = make_dynamics(h);
        return ModelBundle{ideal_measurement_factorization(m), std::move(dyn),
                           [m](double t) { return ideal_measurement_state(m, t); },
                           std::move(h), ideal_measurement_labels(m)};
    }
    if (cfg.model == "rabi") {
        Operator h = rabi_hamiltonian(cfg.rabi->omega);
        auto dyn = make_dynamics(h);
        const Vec initial = StateVector::basis(2, 0).amps();
        auto state_at = [dyn, initial](double t) {
            return make_state(dyn->propagate(initial, 0.0, t), false);
        };
        return ModelBundle{Factorization::computational(2, 1), std::move(dyn),
                           std::move(state_at), std::move(h),
                           {"level_0", "level_1"}};
    }

    const CustomConfig& c = *cfg.custom;
    Factorization f = [&c]() {
        if (c.experience_basis.empty()) {
            return Factorization::computational(c.dim_s, c.dim_e);
        }
        std::vector<StateVector> basis;
        basis.reserve(c.experience_basis.size());
        for (const Vec& v : c.experience_basis) {
            basis.push_back(make_state(v, false));
        }
        return Factorization::from(c.dim_s, c.dim_e, std::move(basis));
    }();
    Operator h = Operator::from(c.hamiltonian, OpRole::hermitian);
    auto dyn = make_dynamics(h);
    StateVector initial = c.initial ? make_state(*c.initial, false)
                                    : load_snapshot(*c.initial_snapshot);
    if (initial.dim() != f.dim_total()) {
        throw DimMismatchError("custom model: initial state has dim " +
                               std::to_string(initial.dim()) + ", expected " +
                               std::to_string(f.dim_total()));
    }
    std::vector<std::string> labels = c.labels;
    if (labels.empty()) {
        for (Index n = 0; n < c.dim_s; ++n) {
            labels.push_back("branch_" + std::to_string(n));
        }
    }
    const Vec init_amps = initial.amps();
    auto state_at = [dyn, init_amps](double t) {
        return make_state(dyn->propagate(init_amps, 0.0, t), false);
    };
    return ModelBundle{std::move(f), std::move(dyn), std::move(state_at), std::move(h),
                       std::move(labels)};
}

Perspective make_perspective(const RunConfig& cfg, const ModelBundle& bundle) {
    const PerspectiveConfig& p = *cfg.perspective;
    return Perspective(bundle.f, p.n, p.t0, p.record);
}

std::string out_path(const RunOptions& opts, const char* name) {
    return (std::filesystem::path(opts.out_dir) / name).string();
}

std::string run_evolve(const RunConfig& cfg, const ModelBundle& bundle,
                       const RunOptions& opts) {
    const bool with_energy = bundle.hamiltonian.has_value();
    std::string csv = with_energy ? "t,norm,energy\n" : "t,norm\n";
    std::vector<double> norms;
    StateVector last = bundle.state_at(cfg.times.back());
    for (double t : cfg.times) {
        const StateVector psi = bundle.state_at(t);
        const double norm = std::sqrt(psi.squared_norm());
        norms.push_back(norm);
        csv += format_double(t) + "," + format_double(norm);
        if (with_energy) {
            const Vec hv = bundle.hamiltonian->entries() * psi.amps();
            csv += "," + format_double(psi.amps().dot(hv).real());
        }
        csv += '\n';
    }
    write_text_file(out_path(opts, "evolution.csv"), csv);
    save_snapshot(out_path(opts, "snapshot.json"), last);
    if (opts.plot) {
        write_text_file(out_path(opts, "evolution.svg"),
                        line_chart_svg("state norm", cfg.times, {{"norm", norms}}));
    }
    return "evolve: " + std::to_string(cfg.times.size()) +
           " times, final norm = " + format_double(norms.back());
}

std::string run_branches(const RunConfig& cfg, const ModelBundle& bundle,
                         const RunOptions& opts) {
    std::string csv = "t";
    for (const auto& label : bundle.labels) {
        csv += "," + csv_quote(label + "_weight");
    }
    csv += '\n';
    std::vector<Series> series;
    for (const auto& label : bundle.labels) {
        series.push_back(Series{label, {}});
    }
    BranchDecomposition last = decompose(bundle.state_at(cfg.times.back()), bundle.f,
                                         cfg.times.back());
    for (double t : cfg.times) {
        const BranchDecomposition d = decompose(bundle.state_at(t), bundle.f, t);
        csv += format_double(t);
        for (std::size_t n = 0; n < d.branches.size(); ++n) {
            csv += "," + format_double(d.branches[n].weight);
            series[n].ys.push_back(d.branches[n].weight);
        }
        csv += '\n';
    }
    write_text_file(out_path(opts, "branches.csv"), csv);
    write_text_file(out_path(opts, "branch_table.csv"), branch_table_csv(last));
    write_text_file(out_path(opts, "branch_table.json"), branch_table_json(last));
    if (opts.plot) {
        write_text_file(out_path(opts, "branches.svg"),
                        line_chart_svg("branch weights", cfg.times, series));
    }
    std::string summary = "branches: " + std::to_string(cfg.times.size()) +
                          " times; weights at t=" + format_double(last.time) + ":";
    for (std::size_t n = 0; n < last.branches.size(); ++n) {
        summary += " " + bundle.labels[n] + "=" + format_double(last.branches[n].weight);
    }
    return summary;
}

std::string run_future(const RunConfig& cfg, const ModelBundle& bundle,
                       const RunOptions& opts) {
    const Perspective p = make_perspective(cfg, bundle);
    const StateVector psi0 = bundle.state_at(p.t0());

    std::string csv = "t";
    for (const auto& label : bundle.labels) {
        csv += "," + csv_quote(label + "_truth");
    }
    csv += ",sum,consistency_defect\n";
    std::vector<TruthValue> last_table;
    for (double t : cfg.times) {
        const auto table = future_truth_table(psi0, *bundle.dynamics, p, t);
        double sum = 0.0;
        csv += format_double(t);
        for (const auto& tv : table) {
            sum += tv.value();
            csv += "," + format_double(tv.value());
        }
        csv += "," + format_double(sum) + "," + format_double(1.0 - sum) + "\n";
        last_table = table;
    }
    write_text_file(out_path(opts, "future_series.csv"), csv);
    write_text_file(out_path(opts, "truth_table.csv"), truth_table_csv(last_table));
    write_text_file(out_path(opts, "truth_table.json"), truth_table_json(last_table));
    if (opts.plot) {
        std::vector<double> values;
        for (const auto& tv : last_table) {
            values.push_back(tv.value());
        }
        write_text_file(out_path(opts, "truth_table.svg"),
                        bar_chart_svg("truth table at t=" + format_double(cfg.times.back()),
                                      bundle.labels, values));
    }
    double sum = 0.0;
    std::string summary = "future: from (n=" + std::to_string(p.n()) +
                          ", t0=" + format_double(p.t0()) + ") at t=" +
                          format_double(cfg.times.back()) + ":";
    for (std::size_t m = 0; m < last_table.size(); ++m) {
        sum += last_table[m].value();
        summary += " " + bundle.labels[m] + "=" + format_double(last_table[m].value());
    }
    summary += "; consistency_defect=" + format_double(1.0 - sum);
    return summary;
}

void collect_event_times(const Proposition& prop, std::vector<double>& times) {
    if (prop.kind() == Proposition::Kind::event) {
        times.push_back(prop.event_data().t);
        return;
    }
    for (std::size_t i = 0; i < prop.operand_count(); ++i) {
        collect_event_times(prop.operand(i), times);
    }
}

std::string run_logic(const RunConfig& cfg, const ModelBundle& bundle,
                      const RunOptions& opts) {
    const Perspective p = make_perspective(cfg, bundle);
    const Proposition prop = Proposition::parse(*cfg.proposition);

    // Every event must be dated on the configured grid: future events on
    // the times list, past/present events on the recorded times.
    std::vector<double> event_times;
    collect_event_times(prop, event_times);
    for (double t : event_times) {
        const bool on_grid = std::find(cfg.times.begin(), cfg.times.end(), t) !=
                             cfg.times.end();
        const bool recorded = p.record().count(t) > 0;
        if (!on_grid && !recorded) {
            throw ConfigError("config: proposition time " + format_double(t) +
                              " is neither on the times grid nor in the record");
        }
    }

    const StateVector psi0 = bundle.state_at(p.t0());
    const TruthValue v = evaluate(prop, psi0, *bundle.dynamics, p);

    const std::string text = prop.text();
    write_text_file(out_path(opts, "logic.csv"),
                    "proposition,truth_value\n" + csv_quote(text) + "," +
                        format_double(v.value()) + "\n");
    nlohmann::json j;
    j["proposition"] = text;
    j["truth_value"] = v.value();
    write_text_file(out_path(opts, "logic.json"), j.dump() + "\n");
    if (opts.plot) {
        write_text_file(out_path(opts, "logic.svg"),
                        bar_chart_svg(text, {"truth_value"}, {v.value()}));
    }
    return "logic: " + text + " has truth value " + format_double(v.value());
}

std::string run_sample(const RunConfig& cfg, const ModelBundle& bundle,
                       const RunOptions& opts) {
    const StateVector first = bundle.state_at(cfg.times.front());
    const SampledRecord rec =
        sample_record(first, *bundle.dynamics, bundle.f, cfg.times, cfg.seed);

    std::string csv = "t,index,label\n";
    std::vector<double> ys;
    for (std::size_t k = 0; k < rec.times.size(); ++k) {
        csv += format_double(rec.times[k]) + "," + std::to_string(rec.indices[k]) + "," +
               csv_quote(bundle.labels[static_cast<std::size_t>(rec.indices[k])]) + "\n";
        ys.push_back(static_cast<double>(rec.indices[k]));
    }
    write_text_file(out_path(opts, "record.csv"), csv);
    write_text_file(out_path(opts, "record.json"), record_json(rec));
    if (opts.plot) {
        write_text_file(out_path(opts, "record.svg"),
                        line_chart_svg("sampled experience index", rec.times,
                                       {{"index", ys}}));
    }
    const Index final_index = rec.indices.back();
    return "sample: seed " + std::to_string(rec.seed) + ", " +
           std::to_string(rec.times.size()) + " times, final experience " +
           bundle.labels[static_cast<std::size_t>(final_index)];
}

} // namespace

std::string run(const RunConfig& config, const RunOptions& options) {
    std::filesystem::create_directories(options.out_dir);
    const ModelBundle bundle = make_bundle(config);

    std::string summary;
    switch (config.query) {
        case Query::evolve: summary = run_evolve(config, bundle, options); break;
        case Query::branches: summary = run_branches(config, bundle, options); break;
        case Query::future: summary = run_future(config, bundle, options); break;
        case Query::logic: summary = run_logic(config, bundle, options); break;
        case Query::sample: summary = run_sample(config, bundle, options); break;
    }
    if (!options.quiet) {
        std::cout << summary << "\n";
    }
    return summary;
}

} // namespace relstate
