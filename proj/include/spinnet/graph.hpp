#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace spinnet {

using Edge = std::pair<int, int>;  // normalized: first < second
using EdgeList = std::vector<Edge>;

// Labeled undirected simple graph on nodes 0..n-1. Immutable value type:
// the edge list is normalized (u < v), deduplicated, and sorted on
// construction, so two equal graphs compare equal member-wise.
class Graph {
public:
    Graph() : n_(1) {}  // the unique single-node graph
    Graph(int n, EdgeList edges);

    int n() const { return n_; }
    const EdgeList& edges() const { return edges_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int u, int v) const;

    // Edges of the complement, in lexicographic order.
    EdgeList missing_edges() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    int n_;
    EdgeList edges_;
};

enum class GraphKind { path, cycle, complete };

Graph standard_graph(GraphKind kind, int n);

bool is_connected(const Graph& g);

// Component label per node (labels are 0-based in discovery order).
std::vector<int> component_labels(const Graph& g);

// g plus one uniformly chosen missing edge; g unchanged when complete.
Graph add_random_missing_edge(const Graph& g, std::mt19937_64& rng);

// Path graph plus k extra uniformly chosen missing edges, k uniform in
// {0..extra_edge_budget}. Always connected.
Graph random_connected_init(int n, int extra_edge_budget, std::mt19937_64& rng);

// Sorted normalized edge list; equal graphs have equal keys.
inline const EdgeList& canonical_key(const Graph& g) { return g.edges(); }

// "0-1;1-2;2-3" form of the key, for logs and map keys.
std::string canonical_key_string(const Graph& g);

GraphKind graph_kind_from_string(const std::string& name);
std::string to_string(GraphKind kind);

}  // namespace spinnet
