#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "spinnet/errors.hpp"
#include "spinnet/ga.hpp"
#include "spinnet/graph.hpp"
#include "spinnet/hamiltonian.hpp"
#include "spinnet/io.hpp"
#include "spinnet/metrology.hpp"
#include "spinnet/mlp.hpp"
#include "spinnet/phasespace.hpp"
#include "spinnet/rng.hpp"
#include "spinnet/spectral.hpp"
#include "spinnet/sweeps.hpp"
#include "spinnet/thermal.hpp"

namespace {

using spinnet::format_double;

struct CommonOpts {
    spinnet::SpinSystemParams physics;
    std::string scaling = "bare";
    std::string out;
    std::string format = "csv";

    spinnet::SpinSystemParams resolved_physics() const {
        spinnet::SpinSystemParams p = physics;
        p.scaling = spinnet::scaling_from_string(scaling);
        return p;
    }
};

struct GraphOpts {
    std::string file;
    std::string family = "complete";
    int n = 2;
};

// Physics flags shared by every command. `--h` is the field, so help moves
// to `--help` only.
void add_physics_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->set_help_flag("--help", "print help");
    cmd->add_option("--j", o.physics.coupling, "coupling J");
    cmd->add_option("--h", o.physics.field, "transverse field h");
    cmd->add_option("--t", o.physics.temperature, "temperature T");
    cmd->add_option("--scaling", o.scaling, "coupling scaling")
        ->check(CLI::IsMember({"bare", "kac"}));
    cmd->add_option("--dn-levels", o.physics.dn_levels, "levels entering D_n");
    cmd->add_option("--max-spins", o.physics.max_spins, "spin-count cap");
}

void add_output_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--out", o.out, "output base path");
    cmd->add_option("--format", o.format, "single-value output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

void add_graph_flags(CLI::App* cmd, GraphOpts& g) {
    cmd->add_option("--graph", g.file, "graph JSON file (overrides --family/--n)");
    cmd->add_option("--family", g.family, "standard graph family")
        ->check(CLI::IsMember({"path", "cycle", "complete"}));
    cmd->add_option("--n", g.n, "node count");
}

spinnet::Graph resolve_graph(const GraphOpts& g) {
    if (!g.file.empty()) return spinnet::read_graph_file(g.file);
    return spinnet::standard_graph(spinnet::graph_kind_from_string(g.family), g.n);
}

// Prints key=value lines; with --out also writes <out>.csv or <out>.json.
void emit_single(const CommonOpts& common, const std::string& command,
                 const spinnet::Graph& g,
                 const std::vector<std::pair<std::string, double>>& values) {
    for (const auto& [key, value] : values)
        std::printf("%s=%s\n", key.c_str(), format_double(value).c_str());
    if (common.out.empty()) return;

    const spinnet::SpinSystemParams p = common.resolved_physics();
    if (common.format == "json") {
        nlohmann::json j = {{"tool", spinnet::kToolName},
                            {"version", spinnet::kToolVersion},
                            {"command", command},
                            {"graph", spinnet::graph_to_json(g)},
                            {"physics", spinnet::params_to_json(p)}};
        for (const auto& [key, value] : values) j["values"][key] = value;
        spinnet::write_json_file(j, common.out + ".json");
        return;
    }
    spinnet::CsvWriter csv;
    csv.set_meta("tool", spinnet::kToolName);
    csv.set_meta("version", spinnet::kToolVersion);
    csv.set_meta("command", command);
    csv.set_meta("graph", spinnet::canonical_key_string(g));
    csv.set_meta("j", format_double(p.coupling));
    csv.set_meta("h", format_double(p.field));
    csv.set_meta("t", format_double(p.temperature));
    csv.set_meta("scaling", to_string(p.scaling));
    csv.set_meta("dn_levels", std::to_string(p.dn_levels));
    std::vector<std::string> header = {"N"};
    std::vector<double> row = {static_cast<double>(g.n())};
    for (const auto& [key, value] : values) {
        header.push_back(key);
        row.push_back(value);
    }
    csv.set_header(std::move(header));
    csv.add_row(row);
    csv.write(common.out + ".csv");
}

void report_files(const std::vector<std::string>& paths) {
    for (const std::string& p : paths) std::printf("wrote %s\n", p.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-structured spin networks for weak-field sensing"};
    app.require_subcommand(1);

    // ---- single-value commands ----
    CommonOpts dn_common;
    GraphOpts dn_graph;
    auto* dn_cmd = app.add_subcommand("dn", "spectral deformation D_n of one graph");
    add_physics_flags(dn_cmd, dn_common);
    add_output_flags(dn_cmd, dn_common);
    add_graph_flags(dn_cmd, dn_graph);
    dn_cmd->callback([&] {
        const spinnet::Graph g = resolve_graph(dn_graph);
        const double dn = spinnet::spectral_deformation_dn(g, dn_common.resolved_physics());
        emit_single(dn_common, "dn", g, {{"dn", dn}});
    });

    CommonOpts qfi_common;
    GraphOpts qfi_graph;
    auto* qfi_cmd = app.add_subcommand("qfi", "thermal Fisher information of one graph");
    add_physics_flags(qfi_cmd, qfi_common);
    add_output_flags(qfi_cmd, qfi_common);
    add_graph_flags(qfi_cmd, qfi_graph);
    qfi_cmd->callback([&] {
        const spinnet::Graph g = resolve_graph(qfi_graph);
        const spinnet::QfiValue q = spinnet::thermal_qfi_sld(g, qfi_common.resolved_physics());
        emit_single(qfi_common, "qfi", g,
                    {{"qfi", q.value}, {"classical", q.classical}, {"coherent", q.coherent}});
    });

    CommonOpts gap_common;
    GraphOpts gap_graph;
    auto* gap_cmd = app.add_subcommand("gap", "energy gap E1 - E0 of one graph");
    add_physics_flags(gap_cmd, gap_common);
    add_output_flags(gap_cmd, gap_common);
    add_graph_flags(gap_cmd, gap_graph);
    gap_cmd->callback([&] {
        const spinnet::Graph g = resolve_graph(gap_graph);
        const double gap =
            spinnet::energy_gap(spinnet::build_tfim(g, gap_common.resolved_physics()));
        emit_single(gap_common, "gap", g, {{"gap", gap}});
    });

    CommonOpts varmx_common;
    GraphOpts varmx_graph;
    auto* varmx_cmd =
        app.add_subcommand("varmx", "thermal Var(M_x) and its fluctuation-dissipation pair");
    add_physics_flags(varmx_cmd, varmx_common);
    add_output_flags(varmx_cmd, varmx_common);
    add_graph_flags(varmx_cmd, varmx_graph);
    varmx_cmd->callback([&] {
        const spinnet::Graph g = resolve_graph(varmx_graph);
        const spinnet::MagnetizationVariance v =
            spinnet::magnetization_variance(g, varmx_common.resolved_physics());
        emit_single(varmx_common, "varmx", g,
                    {{"var_direct", v.direct},
                     {"var_fdt", v.fdt_estimate},
                     {"relative_deviation", v.relative_deviation}});
    });

    // ---- GA ----
    CommonOpts ga_common;
    spinnet::GaConfig ga_cfg;
    auto* ga_cmd = app.add_subcommand("ga", "evolve graph topologies by D_n fitness");
    add_physics_flags(ga_cmd, ga_common);
    add_output_flags(ga_cmd, ga_common);
    ga_cmd->add_option("--n", ga_cfg.n, "node count")->required();
    ga_cmd->add_option("--pop", ga_cfg.population, "population size");
    ga_cmd->add_option("--gens", ga_cfg.generations, "generation count");
    ga_cmd->add_option("--mut-prob", ga_cfg.mutation_prob, "mutation probability");
    std::string ga_crossover = "intersection";
    ga_cmd->add_option("--crossover", ga_crossover, "crossover edge rule")
        ->check(CLI::IsMember({"intersection", "union"}));
    ga_cmd->add_option("--seed", ga_cfg.seed, "run seed")->required();
    ga_cmd->callback([&] {
        ga_cfg.physics = ga_common.resolved_physics();
        ga_cfg.crossover = spinnet::crossover_mode_from_string(ga_crossover);
        const spinnet::GaRunRecord run = spinnet::evolve(ga_cfg);
        std::printf("best_graph=%s\n", spinnet::canonical_key_string(run.best).c_str());
        std::printf("best_dn=%s\n", format_double(run.best_dn).c_str());
        std::printf("best_qfi=%s\n", format_double(run.best_qfi).c_str());
        std::printf("first_hit_generation=%d\n", run.first_hit_generation);
        if (!ga_common.out.empty()) {
            spinnet::export_records({run}, ga_common.out);
            report_files({ga_common.out + ".csv", ga_common.out + ".run0.json"});
        }
    });

    // ---- sweeps (shared options) ----
    auto add_sweep_flags = [](CLI::App* cmd, CommonOpts& common, spinnet::SweepConfig& sw,
                              GraphOpts& graph, std::string& crossover) {
        add_physics_flags(cmd, common);
        cmd->add_option("--out", common.out, "output base path")->required();
        cmd->add_option("--format", common.format, "table format (csv only for sweeps)")
            ->check(CLI::IsMember({"csv"}));
        cmd->add_option("--n", sw.n, "node count for single-graph kinds");
        cmd->add_option("--n-min", sw.n_min, "range start");
        cmd->add_option("--n-max", sw.n_max, "range end");
        cmd->add_option("--pop", sw.ga_population, "GA population");
        cmd->add_option("--gens", sw.ga_generations, "GA generations");
        cmd->add_option("--mut-prob", sw.ga_mutation_prob, "GA mutation probability");
        cmd->add_option("--crossover", crossover, "GA crossover edge rule")
            ->check(CLI::IsMember({"intersection", "union"}));
        cmd->add_option("--family", graph.family, "graph family for family sweeps")
            ->check(CLI::IsMember({"path", "cycle", "complete"}));
        cmd->add_option("--graph", graph.file, "explicit graph JSON file");
        cmd->add_option("--h-list", sw.h_values, "field values for h-sweep");
        cmd->add_option("--series", sw.series_path, "input series CSV for fits");
        cmd->add_option("--degree", sw.fit_degree, "polynomial degree for fits");
        cmd->add_option("--n-theta", sw.n_theta, "Husimi polar samples");
        cmd->add_option("--n-phi", sw.n_phi, "Husimi azimuthal samples");
    };

    auto finish_sweep = [](const std::string& kind, CommonOpts& common,
                           spinnet::SweepConfig& sw, GraphOpts& graph,
                           const std::string& crossover, bool seed_given) {
        if ((kind == "dn-qfi-vs-n" || kind == "h-sweep") && !seed_given)
            throw std::invalid_argument("--seed is required for GA-backed sweeps");
        sw.physics = common.resolved_physics();
        sw.out_base = common.out;
        sw.ga_crossover = spinnet::crossover_mode_from_string(crossover);
        sw.family = spinnet::graph_kind_from_string(graph.family);
        if (!graph.file.empty()) {
            sw.graph = spinnet::read_graph_file(graph.file);
            sw.explicit_graph = true;
        }
        report_files(spinnet::run_sweep(kind, sw));
    };

    CommonOpts sweep_common;
    spinnet::SweepConfig sweep_cfg;
    GraphOpts sweep_graph;
    std::string sweep_kind;
    std::string sweep_crossover = "intersection";
    auto* sweep_cmd = app.add_subcommand("sweep", "figure-style data sweeps");
    sweep_cmd->add_option("kind", sweep_kind, "sweep kind")
        ->required()
        ->check(CLI::IsMember(spinnet::sweep_kinds()));
    auto* sweep_seed = sweep_cmd->add_option("--seed", sweep_cfg.seed, "run seed");
    add_sweep_flags(sweep_cmd, sweep_common, sweep_cfg, sweep_graph, sweep_crossover);
    sweep_cmd->callback([&] {
        finish_sweep(sweep_kind, sweep_common, sweep_cfg, sweep_graph, sweep_crossover,
                     sweep_seed->count() > 0);
    });

    CommonOpts husimi_common;
    spinnet::SweepConfig husimi_cfg;
    GraphOpts husimi_graph;
    std::string husimi_crossover = "intersection";
    auto* husimi_cmd = app.add_subcommand("husimi", "Husimi grid and equatorial profile");
    auto* husimi_seed = husimi_cmd->add_option("--seed", husimi_cfg.seed, "run seed");
    add_sweep_flags(husimi_cmd, husimi_common, husimi_cfg, husimi_graph, husimi_crossover);
    husimi_cmd->callback([&] {
        finish_sweep("husimi", husimi_common, husimi_cfg, husimi_graph, husimi_crossover,
                     husimi_seed->count() > 0);
    });

    CommonOpts t0_common;
    spinnet::SweepConfig t0_cfg;
    GraphOpts t0_graph;
    std::string t0_crossover = "intersection";
    auto* t0_cmd =
        app.add_subcommand("t0-scaling", "ground-state energy, QFI, and squeezing vs N");
    auto* t0_seed = t0_cmd->add_option("--seed", t0_cfg.seed, "run seed");
    add_sweep_flags(t0_cmd, t0_common, t0_cfg, t0_graph, t0_crossover);
    t0_cmd->callback([&] {
        finish_sweep("t0-scaling", t0_common, t0_cfg, t0_graph, t0_crossover,
                     t0_seed->count() > 0);
    });

    CommonOpts fit_common;
    spinnet::SweepConfig fit_cfg;
    GraphOpts fit_graph;
    std::string fit_crossover = "intersection";
    auto* fit_cmd = app.add_subcommand("fit", "polynomial and power-law fits of a series");
    auto* fit_seed = fit_cmd->add_option("--seed", fit_cfg.seed, "run seed");
    add_sweep_flags(fit_cmd, fit_common, fit_cfg, fit_graph, fit_crossover);
    fit_cmd->callback([&] {
        finish_sweep("fits", fit_common, fit_cfg, fit_graph, fit_crossover,
                     fit_seed->count() > 0);
    });

    // ---- neural network ----
    std::string nn_data;
    std::string nn_parity = "all";
    std::string nn_target = "dn";
    std::string nn_out;
    spinnet::TrainConfig nn_cfg;
    auto* nn_train_cmd = app.add_subcommand("nn-train", "train the 1-64-32-1 regressor");
    nn_train_cmd->add_option("--data", nn_data, "training series CSV (N,value)")->required();
    nn_train_cmd->add_option("--parity", nn_parity, "parity filter")
        ->check(CLI::IsMember({"all", "even", "odd"}));
    nn_train_cmd->add_option("--target", nn_target, "target label")
        ->check(CLI::IsMember({"dn", "qfi"}));
    nn_train_cmd->add_option("--epochs", nn_cfg.epochs, "training epochs");
    nn_train_cmd->add_option("--lr", nn_cfg.learning_rate, "learning rate");
    nn_train_cmd->add_option("--seed", nn_cfg.seed, "init seed")->required();
    nn_train_cmd->add_option("--out", nn_out, "output base path")->required();
    nn_train_cmd->callback([&] {
        const spinnet::DataSeries data = spinnet::read_series_csv(nn_data);
        const spinnet::Parity parity = spinnet::parity_from_string(nn_parity);
        const spinnet::TargetKind target = spinnet::target_from_string(nn_target);
        const spinnet::TrainResult res = spinnet::train(data, nn_cfg, parity, target);

        spinnet::write_model_file(res.model, nn_out + ".model.json");
        spinnet::CsvWriter loss;
        loss.set_meta("tool", spinnet::kToolName);
        loss.set_meta("version", spinnet::kToolVersion);
        loss.set_meta("command", "nn-train");
        loss.set_meta("data", nn_data);
        loss.set_meta("parity", nn_parity);
        loss.set_meta("target", nn_target);
        loss.set_meta("epochs", std::to_string(nn_cfg.epochs));
        loss.set_meta("lr", format_double(nn_cfg.learning_rate));
        loss.set_meta("seed", std::to_string(nn_cfg.seed));
        loss.set_header({"epoch", "loss"});
        for (std::size_t i = 0; i < res.loss_history.size(); ++i)
            loss.add_row({static_cast<double>(i + 1), res.loss_history[i]});
        loss.write(nn_out + ".loss.csv");

        nlohmann::json meta = {{"tool", spinnet::kToolName},
                               {"version", spinnet::kToolVersion},
                               {"command", "nn-train"},
                               {"data", nn_data},
                               {"parity", nn_parity},
                               {"target", nn_target},
                               {"epochs", nn_cfg.epochs},
                               {"lr", nn_cfg.learning_rate},
                               {"seed", nn_cfg.seed},
                               {"final_loss", res.loss_history.back()}};
        spinnet::write_json_file(meta, nn_out + ".meta.json");

        std::printf("final_loss=%s\n", format_double(res.loss_history.back()).c_str());
        report_files({nn_out + ".model.json", nn_out + ".loss.csv", nn_out + ".meta.json"});
    });

    std::string np_model;
    std::string np_out;
    int np_min = 13;
    int np_max = 21;
    auto* nn_predict_cmd = app.add_subcommand("nn-predict", "predict a series from a model");
    nn_predict_cmd->add_option("--model", np_model, "model JSON file")->required();
    nn_predict_cmd->add_option("--n-min", np_min, "first N");
    nn_predict_cmd->add_option("--n-max", np_max, "last N");
    nn_predict_cmd->add_option("--out", np_out, "output base path");
    nn_predict_cmd->callback([&] {
        if (np_max < np_min) throw std::invalid_argument("nn-predict: need n-min <= n-max");
        const spinnet::MlpModel model = spinnet::read_model_file(np_model);
        std::vector<double> ns;
        for (int n = np_min; n <= np_max; ++n) ns.push_back(n);
        const spinnet::DataSeries pred = spinnet::predict_series(model, ns);
        for (const auto& [n, y] : pred)
            std::printf("%s,%s\n", format_double(n).c_str(), format_double(y).c_str());
        if (!np_out.empty()) {
            spinnet::write_series_csv(np_out + ".csv", "N", "value", pred,
                                      {{"command", "nn-predict"},
                                       {"model", np_model},
                                       {"parity", to_string(model.parity)},
                                       {"target", to_string(model.target)},
                                       {"seed", std::to_string(model.seed)}});
            report_files({np_out + ".csv"});
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const spinnet::IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 4;
    } catch (const spinnet::NumericError& e) {
        std::fprintf(stderr, "numeric error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
