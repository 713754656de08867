#include "spinnet/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "spinnet/rng.hpp"

namespace spinnet {

Graph::Graph(int n, EdgeList edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("Graph: node count must be >= 1");
    for (auto& [u, v] : edges_) {
        if (u == v) throw std::invalid_argument("Graph: self-loop on node " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n_)
            throw std::invalid_argument("Graph: edge endpoint out of range [0, " +
                                        std::to_string(n_ - 1) + "]");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

EdgeList Graph::missing_edges() const {
    EdgeList out;
    auto it = edges_.begin();
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (it != edges_.end() && *it == Edge{u, v}) {
                ++it;
            } else {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

Graph standard_graph(GraphKind kind, int n) {
    if (n < 1) throw std::invalid_argument("standard_graph: node count must be >= 1");
    EdgeList edges;
    switch (kind) {
        case GraphKind::path:
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case GraphKind::cycle:
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            // n=2 collapses to the single edge (0,1) under set semantics.
            if (n > 2) edges.emplace_back(0, n - 1);
            break;
        case GraphKind::complete:
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            break;
    }
    return Graph(n, std::move(edges));
}

std::vector<int> component_labels(const Graph& g) {
    const int n = g.n();
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> label(n, -1);
    int next = 0;
    for (int start = 0; start < n; ++start) {
        if (label[start] != -1) continue;
        label[start] = next;
        std::queue<int> frontier;
        frontier.push(start);
        while (!frontier.empty()) {
            int u = frontier.front();
            frontier.pop();
            for (int v : adj[u]) {
                if (label[v] == -1) {
                    label[v] = next;
                    frontier.push(v);
                }
            }
        }
        ++next;
    }
    return label;
}

bool is_connected(const Graph& g) {
    auto labels = component_labels(g);
    return std::all_of(labels.begin(), labels.end(), [](int c) { return c == 0; });
}

Graph add_random_missing_edge(const Graph& g, std::mt19937_64& rng) {
    EdgeList missing = g.missing_edges();
    if (missing.empty()) return g;
    const auto pick = missing[uniform_below(rng, missing.size())];
    EdgeList edges = g.edges();
    edges.push_back(pick);
    return Graph(g.n(), std::move(edges));
}

Graph random_connected_init(int n, int extra_edge_budget, std::mt19937_64& rng) {
    if (extra_edge_budget < 0)
        throw std::invalid_argument("random_connected_init: budget must be >= 0");
    Graph g = standard_graph(GraphKind::path, n);
    const auto extra =
        uniform_below(rng, static_cast<std::uint64_t>(extra_edge_budget) + 1);
    for (std::uint64_t k = 0; k < extra; ++k) g = add_random_missing_edge(g, rng);
    return g;
}

std::string canonical_key_string(const Graph& g) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [u, v] : g.edges()) {
        if (!first) out << ';';
        out << u << '-' << v;
        first = false;
    }
    return out.str();
}

GraphKind graph_kind_from_string(const std::string& name) {
    if (name == "path") return GraphKind::path;
    if (name == "cycle") return GraphKind::cycle;
    if (name == "complete") return GraphKind::complete;
    throw std::invalid_argument("unknown graph kind: " + name);
}

std::string to_string(GraphKind kind) {
    switch (kind) {
        case GraphKind::path: return "path";
        case GraphKind::cycle: return "cycle";
        case GraphKind::complete: return "complete";
    }
    return "?";
}

}  // namespace spinnet
