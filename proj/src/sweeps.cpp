#include "spinnet/sweeps.hpp"

#include <stdexcept>
#include <utility>

#include "spinnet/io.hpp"
#include "spinnet/metrology.hpp"
#include "spinnet/mlp.hpp"
#include "spinnet/rng.hpp"
#include "spinnet/spectral.hpp"
#include "spinnet/thermal.hpp"

namespace spinnet {

namespace {

void check_range(const SweepConfig& cfg) {
    if (cfg.n_min < 1 || cfg.n_max < cfg.n_min)
        throw std::invalid_argument("sweep: need 1 <= n_min <= n_max");
}

Graph sweep_graph(const SweepConfig& cfg, int n) {
    return cfg.explicit_graph ? cfg.graph : standard_graph(cfg.family, n);
}

// Every CSV self-describes: tool, seed, and the full physics parameter set.
CsvWriter make_csv(const SweepConfig& cfg) {
    CsvWriter csv;
    csv.set_meta("tool", kToolName);
    csv.set_meta("version", kToolVersion);
    csv.set_meta("seed", std::to_string(cfg.seed));
    csv.set_meta("j", format_double(cfg.physics.coupling));
    csv.set_meta("h", format_double(cfg.physics.field));
    csv.set_meta("t", format_double(cfg.physics.temperature));
    csv.set_meta("scaling", to_string(cfg.physics.scaling));
    csv.set_meta("dn_levels", std::to_string(cfg.physics.dn_levels));
    return csv;
}

nlohmann::json base_meta(const std::string& kind, const SweepConfig& cfg) {
    return {{"tool", kToolName},
            {"version", kToolVersion},
            {"sweep", kind},
            {"physics", params_to_json(cfg.physics)},
            {"seed", cfg.seed}};
}

std::vector<std::string> write_outputs(const CsvWriter& csv, nlohmann::json meta,
                                       const SweepConfig& cfg) {
    const std::string csv_path = cfg.out_base + ".csv";
    const std::string meta_path = cfg.out_base + ".meta.json";
    csv.write(csv_path);
    write_json_file(meta, meta_path);
    return {csv_path, meta_path};
}

GaConfig ga_config_for(const SweepConfig& cfg, int n, std::uint64_t run_seed) {
    GaConfig ga;
    ga.n = n;
    ga.population = cfg.ga_population;
    ga.generations = cfg.ga_generations;
    ga.mutation_prob = cfg.ga_mutation_prob;
    ga.crossover = cfg.ga_crossover;
    ga.physics = cfg.physics;
    ga.seed = run_seed;
    return ga;
}

std::vector<std::string> sweep_dn_qfi_vs_n(const SweepConfig& cfg) {
    check_range(cfg);
    std::vector<GaRunRecord> records;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n)
        records.push_back(evolve(ga_config_for(cfg, n, derive_stream_seed(cfg.seed, n, 0))));

    export_records(records, cfg.out_base);
    nlohmann::json meta = base_meta("dn-qfi-vs-n", cfg);
    meta["n_min"] = cfg.n_min;
    meta["n_max"] = cfg.n_max;
    meta["ga"] = ga_config_to_json(ga_config_for(cfg, cfg.n_min, cfg.seed));
    const std::string meta_path = cfg.out_base + ".meta.json";
    write_json_file(meta, meta_path);

    std::vector<std::string> paths = {cfg.out_base + ".csv", meta_path};
    for (std::size_t i = 0; i < records.size(); ++i)
        paths.push_back(cfg.out_base + ".run" + std::to_string(i) + ".json");
    return paths;
}

std::vector<std::string> sweep_varmx_vs_n(const SweepConfig& cfg) {
    check_range(cfg);
    CsvWriter csv = make_csv(cfg);
    csv.set_meta("family", to_string(cfg.family));
    csv.set_header({"N", "var_direct", "var_fdt", "relative_deviation", "chi_x"});
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const Graph g = sweep_graph(cfg, n);
        const MagnetizationVariance var = magnetization_variance(g, cfg.physics);
        const double chi = susceptibility_chi_x(g, cfg.physics);
        csv.add_row({double(n), var.direct, var.fdt_estimate, var.relative_deviation, chi});
    }
    nlohmann::json meta = base_meta("varmx-vs-n", cfg);
    meta["family"] = to_string(cfg.family);
    meta["n_min"] = cfg.n_min;
    meta["n_max"] = cfg.n_max;
    return write_outputs(csv, std::move(meta), cfg);
}

std::vector<std::string> sweep_rescaled_qfi(const SweepConfig& cfg) {
    check_range(cfg);
    CsvWriter csv = make_csv(cfg);
    csv.set_meta("family", to_string(cfg.family));
    csv.set_header({"N", "qfi", "qfi_per_n", "qfi_per_n2"});
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const double q = thermal_qfi_sld(sweep_graph(cfg, n), cfg.physics).value;
        csv.add_row({double(n), q, q / n, q / double(n) / double(n)});
    }
    nlohmann::json meta = base_meta("rescaled-qfi", cfg);
    meta["family"] = to_string(cfg.family);
    meta["n_min"] = cfg.n_min;
    meta["n_max"] = cfg.n_max;
    return write_outputs(csv, std::move(meta), cfg);
}

std::vector<std::string> sweep_gap_vs_n(const SweepConfig& cfg) {
    check_range(cfg);
    CsvWriter csv = make_csv(cfg);
    csv.set_header({"family", "N", "gap"});
    for (const GraphKind family : {GraphKind::cycle, GraphKind::complete}) {
        for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
            const double gap = energy_gap(build_tfim(standard_graph(family, n), cfg.physics));
            csv.add_row_raw({to_string(family), std::to_string(n), format_double(gap)});
        }
    }
    nlohmann::json meta = base_meta("gap-vs-n", cfg);
    meta["families"] = {"cycle", "complete"};
    meta["n_min"] = cfg.n_min;
    meta["n_max"] = cfg.n_max;
    return write_outputs(csv, std::move(meta), cfg);
}

std::vector<std::string> sweep_husimi(const SweepConfig& cfg) {
    const Graph g = sweep_graph(cfg, cfg.n);
    const GroundState gs = ground_state(build_tfim(g, cfg.physics));
    const HusimiGrid grid = husimi_grid(gs.amplitudes, cfg.n_theta, cfg.n_phi);
    const EquatorialProfile prof = equatorial_overlap_profile(gs.amplitudes, cfg.n_phi);
    const SxEstimate sx = sx_from_husimi(grid, gs.amplitudes);

    CsvWriter grid_csv = make_csv(cfg);
    grid_csv.set_meta("graph", canonical_key_string(g));
    grid_csv.set_header({"theta", "phi", "q"});
    for (Eigen::Index i = 0; i < grid.theta_samples.size(); ++i)
        for (Eigen::Index j = 0; j < grid.phi_samples.size(); ++j)
            grid_csv.add_row({grid.theta_samples[i], grid.phi_samples[j], grid.q_values(i, j)});
    const std::string grid_path = cfg.out_base + ".grid.csv";
    grid_csv.write(grid_path);

    CsvWriter prof_csv = make_csv(cfg);
    prof_csv.set_meta("graph", canonical_key_string(g));
    prof_csv.set_header({"phi", "abs_overlap"});
    for (Eigen::Index j = 0; j < prof.phi.size(); ++j)
        prof_csv.add_row({prof.phi[j], prof.abs_overlap[j]});
    const std::string prof_path = cfg.out_base + ".profile.csv";
    prof_csv.write(prof_path);

    nlohmann::json meta = base_meta("husimi", cfg);
    meta["graph"] = graph_to_json(g);
    meta["n_theta"] = cfg.n_theta;
    meta["n_phi"] = cfg.n_phi;
    meta["ground_energy"] = gs.energy;
    meta["ground_degenerate"] = gs.degenerate;
    meta["norm_integral"] = husimi_norm_integral(grid);
    meta["argmax_phi"] = prof.argmax_phi;
    meta["sx_symbol"] = sx.symbol_estimate;
    meta["sx_literal_integral"] = sx.literal_integral;
    meta["sx_direct"] = sx.direct;
    meta["symmetric_state"] = sx.symmetric;
    const std::string meta_path = cfg.out_base + ".meta.json";
    write_json_file(meta, meta_path);
    return {grid_path, prof_path, meta_path};
}

std::vector<std::string> sweep_t0_scaling(const SweepConfig& cfg) {
    check_range(cfg);
    CsvWriter csv = make_csv(cfg);
    csv.set_header({"scaling", "N", "e0", "qfi", "xi2"});
    for (const Scaling scaling : {Scaling::bare, Scaling::kac}) {
        SpinSystemParams p = cfg.physics;
        p.scaling = scaling;
        for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
            const GroundState gs = ground_state(build_tfim(standard_graph(GraphKind::complete, n), p));
            const double qfi = generator_qfi_ground(gs.amplitudes, n);
            csv.add_row_raw({to_string(scaling), std::to_string(n), format_double(gs.energy),
                             format_double(qfi), format_double(spin_squeezing(qfi, n))});
        }
    }
    nlohmann::json meta = base_meta("t0-scaling", cfg);
    meta["family"] = "complete";
    meta["scalings"] = {"bare", "kac"};
    meta["n_min"] = cfg.n_min;
    meta["n_max"] = cfg.n_max;
    return write_outputs(csv, std::move(meta), cfg);
}

std::vector<std::string> sweep_fits(const SweepConfig& cfg) {
    if (cfg.series_path.empty())
        throw std::invalid_argument("fits sweep: --series input file required");
    const DataSeries series = read_series_csv(cfg.series_path);

    std::vector<double> xs, ys;
    for (const auto& [x, y] : series) {
        xs.push_back(x);
        ys.push_back(y);
    }

    std::vector<ScalingFit> fits;
    fits.push_back(polynomial_fit(xs, ys, cfg.fit_degree, false));
    for (const Parity parity : {Parity::all, Parity::even, Parity::odd}) {
        try {
            fits.push_back(power_law_fit(xs, ys, parity));
        } catch (const std::invalid_argument&) {
            // A parity slice may be too small or non-positive; skip it.
        }
    }

    CsvWriter csv = make_csv(cfg);
    csv.set_meta("series", cfg.series_path);
    csv.set_header({"kind", "parity", "degree", "exponent", "residual"});
    nlohmann::json fit_list = nlohmann::json::array();
    for (const ScalingFit& f : fits) {
        csv.add_row_raw({to_string(f.kind), to_string(f.parity), std::to_string(f.degree),
                         format_double(f.exponent), format_double(f.residual)});
        fit_list.push_back(fit_to_json(f));
    }
    nlohmann::json meta = base_meta("fits", cfg);
    meta["series"] = cfg.series_path;
    meta["fit_degree"] = cfg.fit_degree;
    meta["fits"] = fit_list;
    return write_outputs(csv, std::move(meta), cfg);
}

std::vector<std::string> sweep_h(const SweepConfig& cfg) {
    if (cfg.h_values.empty())
        throw std::invalid_argument("h-sweep: need at least one field value");
    CsvWriter csv = make_csv(cfg);
    csv.set_header({"h", "N", "best_dn", "best_qfi", "first_hit_generation", "best_graph"});
    std::vector<GaRunRecord> records;
    for (std::size_t i = 0; i < cfg.h_values.size(); ++i) {
        SweepConfig local = cfg;
        local.physics.field = cfg.h_values[i];
        GaRunRecord run =
            evolve(ga_config_for(local, cfg.n, derive_stream_seed(cfg.seed, i, 1)));
        csv.add_row_raw({format_double(cfg.h_values[i]), std::to_string(cfg.n),
                         format_double(run.best_dn), format_double(run.best_qfi),
                         std::to_string(run.first_hit_generation),
                         canonical_key_string(run.best)});
        records.push_back(std::move(run));
    }
    nlohmann::json meta = base_meta("h-sweep", cfg);
    meta["n"] = cfg.n;
    meta["h_values"] = cfg.h_values;
    meta["ga"] = ga_config_to_json(ga_config_for(cfg, cfg.n, cfg.seed));
    std::vector<std::string> paths = write_outputs(csv, std::move(meta), cfg);
    for (std::size_t i = 0; i < records.size(); ++i) {
        const std::string path = cfg.out_base + ".run" + std::to_string(i) + ".json";
        write_ga_run_file(records[i], path);
        paths.push_back(path);
    }
    return paths;
}

}  // namespace

std::vector<std::string> sweep_kinds() {
    return {"dn-qfi-vs-n", "varmx-vs-n", "rescaled-qfi", "gap-vs-n",
            "husimi",      "t0-scaling", "fits",         "h-sweep"};
}

std::vector<std::string> run_sweep(const std::string& kind, const SweepConfig& cfg) {
    if (kind == "dn-qfi-vs-n") return sweep_dn_qfi_vs_n(cfg);
    if (kind == "varmx-vs-n") return sweep_varmx_vs_n(cfg);
    if (kind == "rescaled-qfi") return sweep_rescaled_qfi(cfg);
    if (kind == "gap-vs-n") return sweep_gap_vs_n(cfg);
    if (kind == "husimi") return sweep_husimi(cfg);
    if (kind == "t0-scaling") return sweep_t0_scaling(cfg);
    if (kind == "fits") return sweep_fits(cfg);
    if (kind == "h-sweep") return sweep_h(cfg);
    throw std::invalid_argument("unknown sweep kind: " + kind);
}

}  // namespace spinnet
