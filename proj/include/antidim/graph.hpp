#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "antidim/errors.hpp"

namespace antidim {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Distance value for vertices in another component. Never mixed into
// arithmetic: callers must test is_reachable() first.
inline constexpr int kUnreachable = -1;

inline bool is_reachable(int d) { return d >= 0; }

/// Simple undirected graph on dense vertex ids 0..n-1. Immutable after
/// construction and safe to share across threads.
class Graph {
public:
    Graph() = default;

    int order() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return edge_count_; }

    const std::vector<Vertex>& neighbors(Vertex u) const { return adj_[u]; }
    int degree(Vertex u) const { return static_cast<int>(adj_[u].size()); }
    bool has_edge(Vertex u, Vertex v) const;

    int min_degree() const;
    int max_degree() const;

    // edge_count / (n(n-1)/2)
    double density() const;

    bool is_connected() const;
    bool is_tree() const { return is_connected() && edge_count_ == order() - 1; }
    bool is_complete() const {
        long long n = order();
        return edge_count_ == n * (n - 1) / 2;
    }
    bool is_regular() const { return min_degree() == max_degree(); }

    std::vector<Edge> edges() const;

    // BFS distances from u written into dist (resized to n). No allocation
    // beyond the first call when dist is reused.
    void bfs_into(Vertex u, std::vector<int>& dist) const;

    friend Graph build_graph(int n, const std::vector<Edge>& edges);

private:
    std::vector<std::vector<Vertex>> adj_;
    long long edge_count_ = 0;
};

/// Builds a simple graph: duplicate edges are dropped, self-loops and
/// out-of-range endpoints are rejected.
Graph build_graph(int n, const std::vector<Edge>& edges);

/// Exact single-source shortest-path distances; kUnreachable for vertices
/// in other components.
std::vector<int> distances_from(const Graph& g, Vertex u);

/// Per-source distance rows computed lazily and cached. Rows are computed
/// at most once; concurrent readers see either an absent or a fully
/// computed row. cache_cap bounds the number of cached rows; fetches past
/// the cap land in the caller's scratch buffer.
class DistanceOracle {
public:
    explicit DistanceOracle(const Graph& g, std::size_t cache_cap = SIZE_MAX)
        : g_(&g), rows_(static_cast<std::size_t>(g.order())), cap_(cache_cap) {}

    // Returns the cached row, computing it first if absent. Unbounded growth
    // below cache_cap; prefer row(u, scratch) in memory-sensitive loops.
    const std::vector<int>& row(Vertex u) const;

    // Cached reference when capacity allows, otherwise fills scratch.
    const std::vector<int>& row(Vertex u, std::vector<int>& scratch) const;

    int distance(Vertex u, Vertex v) const { return row(u)[v]; }
    const Graph& graph() const { return *g_; }

private:
    const Graph* g_;
    mutable std::mutex mu_;
    mutable std::vector<std::unique_ptr<const std::vector<int>>> rows_;
    mutable std::size_t cached_ = 0;
    std::size_t cap_;
};

/// Eccentricity statistics of a connected graph: per-vertex eccentricity,
/// per-vertex count of vertices realizing it, their maximum over the graph,
/// diameter, radius and center.
struct EccProfile {
    std::vector<int> eccentricity;
    std::vector<int> ecc_count;  // #vertices at distance exactly ecc(x)
    int max_ecc_count = 0;       // max over x of ecc_count[x]
    int diameter = 0;
    int radius = 0;
    std::vector<Vertex> center;
};

EccProfile ecc_profile(const Graph& g);

/// Exact vertex connectivity. 0 iff disconnected; 1 shortcut via
/// articulation-vertex detection; otherwise minimum vertex cut by
/// unit-capacity max-flow between a fixed min-degree vertex and its
/// non-neighbors, plus its non-adjacent neighbor pairs.
int vertex_connectivity(const Graph& g);

/// I[u,v]: vertices on some shortest u,v-path.
std::vector<Vertex> interval(const Graph& g, Vertex u, Vertex v);

/// Some pair whose interval covers V(G), if any.
std::optional<Edge> has_geodetic_number_two(const Graph& g);

/// Number of distinct shortest paths from u to every vertex (saturating at
/// UINT64_MAX).
std::vector<std::uint64_t> count_shortest_paths(const Graph& g, Vertex u);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Connected components of the complement graph, without materializing it.
std::vector<std::vector<Vertex>> co_components(const Graph& g);

std::optional<Vertex> articulation_vertex(const Graph& g);

void require_connected(const Graph& g);

}  // namespace antidim
