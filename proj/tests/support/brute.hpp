#pragma once

// Independent reference implementations for checking the library: plain
// Floyd-Warshall distances and exhaustive subset scans. Deliberately kept
// free of the library's oracle/partition code paths.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "antidim/graph.hpp"
#include "antidim/randgen.hpp"

namespace brute {

using antidim::Graph;
using antidim::Vertex;

inline constexpr int kInf = 1 << 28;

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (Vertex u = 0; u < n; ++u) {
        d[u][u] = 0;
        for (Vertex v : g.neighbors(u)) d[u][v] = 1;
    }
    for (Vertex k = 0; k < n; ++k)
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

// Minimum equivalence-class size of V\S under equal distance vectors to S
// (S given as bitmask).
inline int partition_k(const std::vector<std::vector<int>>& d, int n, std::uint32_t s_mask) {
    std::vector<Vertex> anchors, outside;
    for (Vertex v = 0; v < n; ++v) {
        if (s_mask & (1u << v))
            anchors.push_back(v);
        else
            outside.push_back(v);
    }
    std::map<std::vector<int>, int> classes;
    for (Vertex u : outside) {
        std::vector<int> rep;
        for (Vertex a : anchors) rep.push_back(d[u][a]);
        ++classes[rep];
    }
    int k = n;
    for (const auto& [rep, size] : classes) k = std::min(k, size);
    return k;
}

// Largest k over all nonempty proper subsets; the definition made literal.
inline int adim(const Graph& g) {
    const int n = g.order();
    const auto d = floyd_warshall(g);
    int best = 0;
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask)
        best = std::max(best, partition_k(d, n, mask));
    return best;
}

// Smallest k-antiresolving set size for every realized k.
inline std::map<int, int> adim_k_table(const Graph& g) {
    const int n = g.order();
    const auto d = floyd_warshall(g);
    std::map<int, int> table;
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        const int k = partition_k(d, n, mask);
        const int size = std::popcount(mask);
        auto it = table.find(k);
        if (it == table.end() || size < it->second) table[k] = size;
    }
    return table;
}

inline bool connected_after_removal(const Graph& g, std::uint32_t removed) {
    const int n = g.order();
    Vertex start = -1;
    int remaining = 0;
    for (Vertex v = 0; v < n; ++v)
        if (!(removed & (1u << v))) {
            ++remaining;
            if (start < 0) start = v;
        }
    if (remaining <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    int visited = 1;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x)) {
            if ((removed & (1u << y)) || seen[y]) continue;
            seen[y] = 1;
            ++visited;
            stack.push_back(y);
        }
    }
    return visited == remaining;
}

// Exact vertex connectivity by trying every removal set, size ascending.
inline int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (!g.is_connected()) return 0;
    if (g.is_complete()) return n - 1;
    for (int size = 1; size < n - 1; ++size)
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
            if (std::popcount(mask) == size && !connected_after_removal(g, mask)) return size;
    return n - 1;
}

// Deterministic connected random graph for property tests: draws samples
// from the seeded uniform model until one is connected.
inline Graph random_connected(int n, double p, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        antidim::RandomModelConfig cfg;
        cfg.model = antidim::RandomModel::Gnp;
        cfg.n = n;
        cfg.p = p;
        cfg.seed = seed;
        const Graph g = antidim::generate(cfg, attempt);
        if (g.is_connected()) return g;
    }
}

}  // namespace brute
