#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "antidim/graph.hpp"

namespace antidim {

/// Equivalence classes of V\S under equal distance vectors to the ordered
/// anchor set S. k is the minimum class cardinality; S is a k-antiresolving
/// set for exactly that k.
struct MetricPartition {
    std::vector<Vertex> anchors;               // S, in the given order
    std::vector<std::vector<Vertex>> classes;  // ordered by smallest member
    int k = 0;
};

MetricPartition partition_by(const Graph& g, const std::vector<Vertex>& s);

enum class Verdict { IsOne, NotOne, Undecided };

enum class BoundKind { Lower, Upper };

struct Bound {
    BoundKind kind;
    int value;
    std::string source;  // which result produced it
};

/// A set S whose metric partition has minimum class size k > 1, certifying
/// that the graph is not 1-metric antidimensional.
struct Witness {
    std::vector<Vertex> set;
    int k = 0;
};

struct AdimReport {
    Verdict verdict = Verdict::Undecided;
    std::optional<Witness> witness;  // present when verdict == NotOne
    std::vector<Bound> bounds;
    std::optional<int> exact;   // exact antidimension when known
    std::string decided_by;     // stage that settled the verdict
};

/// Decides whether the largest k admitting a k-antiresolving set is 1.
/// Seeds S with each start vertex in ascending id order, repeatedly absorbs
/// the singleton classes of the partition of V\S, and reports (NotOne, k)
/// as soon as some partition has minimum class size k > 1. The verdict is
/// start-order independent; the witness is the first one encountered.
AdimReport adim1_check(const Graph& g);

/// Internal variant with a wall-clock deadline; nullopt when exceeded.
std::optional<AdimReport> adim1_check_deadline(
    const Graph& g, std::optional<std::chrono::steady_clock::time_point> deadline);

/// Exhaustive subset scan: exact antidimension, and for every realized k
/// the smallest k-antiresolving set. Subsets are visited in size-ascending,
/// then lexicographic order, so the recorded witness per k is minimal.
struct AdimTable {
    int adim = 0;
    std::map<int, std::vector<Vertex>> witnesses;  // k -> smallest k-ARS

    int adim_k(int k) const { return static_cast<int>(witnesses.at(k).size()); }
    bool realized(int k) const { return witnesses.count(k) > 0; }
};

AdimTable adim_oracle(const Graph& g, int limit = 12);

/// Lower bound min{kappa, max #eccentric} with the attaining vertex as a
/// singleton witness. witness_k is the exact partition minimum of that
/// singleton (always >= bound).
struct ConnEccBound {
    int bound = 0;
    Vertex witness_vertex = 0;
    int witness_k = 0;
};

ConnEccBound bound_connectivity_ecc(const Graph& g);

/// Lower bound 2 exactly when the diameter is 2.
std::optional<int> bound_diam2(const Graph& g);

/// Exact antidimension kappa for kappa-regular diameter-2 graphs with
/// kappa <= (n-1)/2.
std::optional<int> exact_regular_diam2(const Graph& g);

struct AnalyzeOptions {
    // Wall-clock budget; exceeded -> verdict Undecided, bounds only.
    std::optional<std::chrono::milliseconds> budget;
    // Run the subset oracle (filling `exact`) when n <= oracle_limit.
    int oracle_limit = 0;
    // Pair-closure module search only when n <= this; twin scan always runs.
    int module_closure_limit = 64;
    // Eccentricity-based filters need all-source BFS; skip above this order.
    int ecc_limit = 20000;
    // Exact connectivity (beyond the articulation fast path) below this order.
    int kappa_limit = 4096;
    bool prefilters = true;
};

/// Cheapest-first cascade deciding "is the antidimension 1": twin/module
/// certificates, diameter-2 filter, connectivity/eccentricity bound, then
/// the absorption algorithm; optional subset oracle for exact values on
/// tiny graphs. Pre-filters only ever decide NotOne, so the verdict always
/// matches adim1_check.
AdimReport analyze(const Graph& g, const AnalyzeOptions& options = {});

}  // namespace antidim
