#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "antidim/graph.hpp"

namespace antidim {

/// Result of the nontrivial-module search. When `module` is set, its
/// members all share the same neighborhood outside the module and
/// 1 < |module| < n. `is_prime` reports that only trivial modules exist.
struct ModuleWitness {
    enum class Kind { PairClosure, DegenerateRoot };
    std::optional<std::vector<Vertex>> module;
    Kind kind = Kind::PairClosure;
    bool is_prime = false;
};

/// Degenerate roots (graph or complement disconnected) yield V minus the
/// smallest (co-)component; otherwise the largest proper smallest-module
/// closure over all vertex pairs. Prime exactly when every pair closure
/// hits V.
ModuleWitness find_nontrivial_module(const Graph& g);

/// All pairs u,v with N(u)\{v} = N(v)\{u} (adjacent or not).
std::vector<std::pair<Vertex, Vertex>> find_twins(const Graph& g);

/// First twin pair by neighborhood hashing; near-linear, for large graphs.
std::optional<std::pair<Vertex, Vertex>> any_twin_pair(const Graph& g);

/// Branch eccentricities of the tree rooted at u: for each neighbor v the
/// eccentricity of u within the branch through v. The balancing factor is
/// the largest multiplicity among those values.
struct BranchProfile {
    std::vector<std::pair<Vertex, int>> branch_ecc;  // (neighbor, eccentricity)
    int balancing_factor = 0;
};

BranchProfile balancing_factor(const Graph& tree, Vertex u);

struct TreeCheck {
    bool is_one = false;
    std::optional<Vertex> violator;  // first vertex with balancing factor >= 2
};

/// A tree is 1-metric antidimensional iff every vertex has balancing
/// factor 1. O(n^2).
TreeCheck tree_adim1_check(const Graph& tree);

/// Unique shortest path between every vertex pair.
bool is_geodetic(const Graph& g);

/// The shortest-path tree of a geodetic graph rooted at u (unique by
/// geodeticity; an ambiguous parent raises NotGeodeticError).
struct RootedSPTree {
    Vertex root = 0;
    std::vector<Vertex> parent;                 // parent[root] == -1
    std::vector<std::vector<Vertex>> children;  // sorted

    const std::vector<Vertex>& branch_roots() const { return children[root]; }
    std::vector<Vertex> descendants(Vertex v) const;
    Graph as_graph() const;
};

RootedSPTree sp_tree(const Graph& g, Vertex u);

/// A geodetic graph is 1-metric antidimensional iff every rooted
/// shortest-path tree is. O(n^3).
bool geodetic_adim1_check(const Graph& g);

/// Necessary conditions for a block graph to be 1-metric antidimensional.
/// Any false entry certifies that the antidimension is at least 2; all four
/// holding decides nothing.
struct BlockChecklist {
    bool diam_odd = false;
    bool prime = false;           // no nontrivial module, hence no twins
    bool blocks_one_noncut = false;
    bool pendant_blocks_k2 = false;

    bool all() const { return diam_odd && prime && blocks_one_noncut && pendant_blocks_k2; }
};

BlockChecklist block_graph_necessary(const Graph& g);

/// Biconnected components as vertex sets (single edges included).
std::vector<std::vector<Vertex>> biconnected_components(const Graph& g);

}  // namespace antidim
