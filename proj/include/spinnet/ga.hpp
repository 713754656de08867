#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "spinnet/graph.hpp"
#include "spinnet/hamiltonian.hpp"

namespace spinnet {

// Child edge set rule. `intersection` keeps common edges (with connectivity
// repair); `union_merge` keeps every parent edge. Both then add one extra
// missing edge with the configured probability.
enum class CrossoverMode { intersection, union_merge };

CrossoverMode crossover_mode_from_string(const std::string& name);
std::string to_string(CrossoverMode mode);

struct GaConfig {
    int n = 4;
    int population = 100;
    int generations = 15;
    double mutation_prob = 0.3;
    double crossover_extra_edge_prob = 0.5;
    CrossoverMode crossover = CrossoverMode::intersection;
    SpinSystemParams physics;
    std::uint64_t seed = 0;
};

struct GenerationRecord {
    int generation = 0;
    Graph best;
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
};

struct GaRunRecord {
    GaConfig config;
    std::vector<GenerationRecord> generations;  // index 0 is the initial population
    Graph best;
    double best_dn = 0.0;
    double best_qfi = 0.0;  // thermal Fisher information of the winner
    int first_hit_generation = 0;
};

// Intersection (or union) of the parents, repaired to connectivity by edges
// drawn uniformly between distinct components, then one extra missing edge
// with probability extra_edge_prob.
Graph crossover(const Graph& parent1, const Graph& parent2, std::mt19937_64& rng,
                CrossoverMode mode = CrossoverMode::intersection,
                double extra_edge_prob = 0.5);

// Adds one uniformly chosen missing edge with probability mutation_prob.
// Never removes edges.
Graph mutate(const Graph& g, double mutation_prob, std::mt19937_64& rng);

GaRunRecord evolve(const GaConfig& config);

struct BestGraph {
    Graph graph;
    double dn = 0.0;
};

// Ground truth over every labeled connected graph; n <= 5 keeps the
// 2^C(n,2) enumeration honest. Ties break toward the smaller canonical key.
BestGraph exhaustive_best(int n, const SpinSystemParams& p);

}  // namespace spinnet
