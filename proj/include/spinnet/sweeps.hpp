#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinnet/ga.hpp"
#include "spinnet/graph.hpp"
#include "spinnet/hamiltonian.hpp"
#include "spinnet/phasespace.hpp"

namespace spinnet {

// One bag of knobs for every sweep kind; each kind reads the fields it
// needs. out_base is a path prefix: sweeps emit <out_base>.csv plus a
// <out_base>.meta.json provenance sidecar (and kind-specific extras).
struct SweepConfig {
    SpinSystemParams physics;
    int n = 4;          // single-graph kinds (husimi, h-sweep)
    int n_min = 2;      // ranged kinds
    int n_max = 8;
    int ga_population = 100;
    int ga_generations = 15;
    double ga_mutation_prob = 0.3;
    CrossoverMode ga_crossover = CrossoverMode::intersection;
    std::uint64_t seed = 0;
    GraphKind family = GraphKind::complete;
    bool explicit_graph = false;  // when set, `graph` overrides family + n
    Graph graph;
    std::vector<double> h_values = {0.01, 0.05, 0.1, 0.2};
    std::string series_path;  // fits input CSV
    int fit_degree = 2;
    int n_theta = kDefaultThetaSamples;
    int n_phi = kDefaultPhiSamples;
    std::string out_base = "out";
};

// Kinds: dn-qfi-vs-n, varmx-vs-n, rescaled-qfi, gap-vs-n, husimi,
// t0-scaling, fits, h-sweep. Returns the paths written.
std::vector<std::string> run_sweep(const std::string& kind, const SweepConfig& cfg);

std::vector<std::string> sweep_kinds();

}  // namespace spinnet
