#include "spinnet/ga.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "spinnet/rng.hpp"
#include "spinnet/spectral.hpp"
#include "spinnet/thermal.hpp"

namespace spinnet {

namespace {

// Uniform choice among absent edges that join two distinct components.
// Present edges never cross components, so the candidate set is never empty
// while the graph is disconnected.
Graph repair_connectivity(Graph g, std::mt19937_64& rng) {
    while (!is_connected(g)) {
        const std::vector<int> labels = component_labels(g);
        EdgeList candidates;
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v)
                if (labels[u] != labels[v]) candidates.emplace_back(u, v);
        EdgeList edges = g.edges();
        edges.push_back(candidates[uniform_below(rng, candidates.size())]);
        g = Graph(g.n(), std::move(edges));
    }
    return g;
}

void validate(const GaConfig& c) {
    if (c.population < 2) throw std::invalid_argument("ga: population must be >= 2");
    if (c.generations < 1) throw std::invalid_argument("ga: generations must be >= 1");
    if (c.mutation_prob < 0.0 || c.mutation_prob > 1.0)
        throw std::invalid_argument("ga: mutation_prob outside [0, 1]");
    if (c.crossover_extra_edge_prob < 0.0 || c.crossover_extra_edge_prob > 1.0)
        throw std::invalid_argument("ga: crossover_extra_edge_prob outside [0, 1]");
    if (c.n < 1 || c.n > c.physics.max_spins)
        throw std::invalid_argument("ga: node count outside [1, max_spins]");
    if (!(c.physics.temperature > 0.0))
        throw std::invalid_argument("ga: temperature must be > 0 (summary reports thermal QFI)");
}

struct Individual {
    Graph graph;
    std::string key;
    double fitness = 0.0;
};

class FitnessCache {
public:
    explicit FitnessCache(const SpinSystemParams& p) : params_(p) {}

    double dn(const Graph& g, const std::string& key) {
        const auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        const double value = spectral_deformation_dn(g, params_);
        cache_.emplace(key, value);
        return value;
    }

private:
    SpinSystemParams params_;
    std::unordered_map<std::string, double> cache_;
};

// Descending fitness; equal fitness falls back to the canonical key so the
// ordering is reproducible.
void sort_population(std::vector<Individual>& pop) {
    std::sort(pop.begin(), pop.end(), [](const Individual& a, const Individual& b) {
        if (a.fitness != b.fitness) return a.fitness > b.fitness;
        return a.key < b.key;
    });
}

GenerationRecord record_generation(int generation, const std::vector<Individual>& sorted) {
    GenerationRecord rec;
    rec.generation = generation;
    rec.best = sorted.front().graph;
    rec.best_fitness = sorted.front().fitness;
    double sum = 0.0;
    for (const Individual& ind : sorted) sum += ind.fitness;
    rec.mean_fitness = sum / static_cast<double>(sorted.size());
    return rec;
}

}  // namespace

CrossoverMode crossover_mode_from_string(const std::string& name) {
    if (name == "intersection") return CrossoverMode::intersection;
    if (name == "union") return CrossoverMode::union_merge;
    throw std::invalid_argument("unknown crossover mode: " + name);
}

std::string to_string(CrossoverMode mode) {
    switch (mode) {
        case CrossoverMode::intersection: return "intersection";
        case CrossoverMode::union_merge: return "union";
    }
    throw std::invalid_argument("unknown crossover mode enum value");
}

Graph crossover(const Graph& parent1, const Graph& parent2, std::mt19937_64& rng,
                CrossoverMode mode, double extra_edge_prob) {
    if (parent1.n() != parent2.n())
        throw std::invalid_argument("crossover: parents differ in node count");

    EdgeList child_edges;
    if (mode == CrossoverMode::intersection) {
        std::set_intersection(parent1.edges().begin(), parent1.edges().end(),
                              parent2.edges().begin(), parent2.edges().end(),
                              std::back_inserter(child_edges));
    } else {
        std::set_union(parent1.edges().begin(), parent1.edges().end(),
                       parent2.edges().begin(), parent2.edges().end(),
                       std::back_inserter(child_edges));
    }

    Graph child = repair_connectivity(Graph(parent1.n(), std::move(child_edges)), rng);
    if (bernoulli(rng, extra_edge_prob)) child = add_random_missing_edge(child, rng);
    return child;
}

Graph mutate(const Graph& g, double mutation_prob, std::mt19937_64& rng) {
    if (!bernoulli(rng, mutation_prob)) return g;
    return add_random_missing_edge(g, rng);
}

GaRunRecord evolve(const GaConfig& config) {
    validate(config);
    FitnessCache cache(config.physics);

    const auto p = static_cast<std::size_t>(config.population);
    std::vector<Individual> pop(p);
    for (std::size_t slot = 0; slot < p; ++slot) {
        std::mt19937_64 rng = make_rng(derive_stream_seed(config.seed, 0, slot));
        pop[slot].graph = config.n == 1 ? Graph()
                                        : random_connected_init(config.n, config.n, rng);
    }

    GaRunRecord run;
    run.config = config;
    for (int gen = 0; gen <= config.generations; ++gen) {
        if (gen > 0) {
            const std::size_t n_parents = (p + 1) / 2;
            std::vector<Individual> next(p);
            next[0] = pop[0];  // elite, untouched
            for (std::size_t slot = 1; slot < p; ++slot) {
                std::mt19937_64 rng =
                    make_rng(derive_stream_seed(config.seed, static_cast<std::uint64_t>(gen), slot));
                const std::size_t i = uniform_below(rng, n_parents);
                std::size_t j = i;
                if (n_parents > 1) {
                    const std::size_t j0 = uniform_below(rng, n_parents - 1);
                    j = j0 >= i ? j0 + 1 : j0;
                }
                Graph child = crossover(pop[i].graph, pop[j].graph, rng, config.crossover,
                                        config.crossover_extra_edge_prob);
                next[slot].graph = mutate(child, config.mutation_prob, rng);
            }
            pop = std::move(next);
        }

        for (Individual& ind : pop) {
            ind.key = canonical_key_string(ind.graph);
            ind.fitness = cache.dn(ind.graph, ind.key);
        }
        sort_population(pop);
        run.generations.push_back(record_generation(gen, pop));
    }

    run.best = pop[0].graph;
    run.best_dn = pop[0].fitness;
    run.best_qfi = thermal_qfi_sld(run.best, config.physics).value;
    run.first_hit_generation = config.generations;
    for (const GenerationRecord& rec : run.generations) {
        if (rec.best_fitness == run.best_dn) {
            run.first_hit_generation = rec.generation;
            break;
        }
    }
    return run;
}

BestGraph exhaustive_best(int n, const SpinSystemParams& p) {
    if (n < 1 || n > 5)
        throw std::invalid_argument("exhaustive_best: n must be in [1, 5]");

    EdgeList all_pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);

    BestGraph best;
    bool found = false;
    const std::uint64_t n_masks = std::uint64_t(1) << all_pairs.size();
    for (std::uint64_t mask = 0; mask < n_masks; ++mask) {
        EdgeList edges;
        for (std::size_t bit = 0; bit < all_pairs.size(); ++bit)
            if (mask & (std::uint64_t(1) << bit)) edges.push_back(all_pairs[bit]);
        Graph g(n, std::move(edges));
        if (!is_connected(g)) continue;
        const double dn = spectral_deformation_dn(g, p);
        if (!found || dn > best.dn ||
            (dn == best.dn && canonical_key(g) < canonical_key(best.graph))) {
            best.graph = g;
            best.dn = dn;
            found = true;
        }
    }
    return best;
}

}  // namespace spinnet
