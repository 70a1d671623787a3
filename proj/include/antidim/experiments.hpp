#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "antidim/antiresolve.hpp"
#include "antidim/enumerate.hpp"
#include "antidim/ingest.hpp"
#include "antidim/randgen.hpp"

namespace antidim {

/// One row of a classification table: how many connected graphs of an
/// order are 1-metric antidimensional, their connectivity histogram and
/// the densest one.
struct ClassificationRow {
    int order = 0;
    std::optional<std::uint64_t> total_distinct;
    std::uint64_t connected = 0;
    std::uint64_t skipped_disconnected = 0;
    std::uint64_t found = 0;
    std::map<int, std::uint64_t> found_connectivity;
    long long max_found_edges = -1;
    // edge count -> (found, others); filled when the breakdown is requested
    std::map<long long, std::pair<std::uint64_t, std::uint64_t>> breakdown_by_edges;

    double ratio() const {
        return connected ? static_cast<double>(found) / static_cast<double>(connected) : 0.0;
    }
    std::optional<double> max_found_density() const;
    std::string ratio_string() const;       // truncated to 6 decimals, "--" when found == 0
    std::string max_density_string() const; // truncated to 2 decimals, "--" when found == 0
};

/// Exact decimal truncation of num/den (matches published table rounding).
std::string truncate_fraction(std::uint64_t num, std::uint64_t den, int digits);

std::string connectivity_string(const std::map<int, std::uint64_t>& histogram);

struct ClassifyOptions {
    int workers = 1;
    bool density_breakdown = false;
    GraphSink found_sink;  // invoked per found graph; order unspecified with workers > 1
    AnalyzeOptions analyze;
};

/// Classifies a stream of graphs into per-order rows. Disconnected inputs
/// are counted and skipped; connectivity is computed for found graphs only.
std::vector<ClassificationRow> classify_stream(const std::function<std::optional<Graph>()>& next,
                                               const ClassifyOptions& options = {});

std::string classification_csv(const std::vector<ClassificationRow>& rows);

struct SweepRecord {
    RandomModelConfig config;
    std::uint64_t generated = 0;
    std::uint64_t connected = 0;
    std::uint64_t found = 0;
    std::optional<std::uint64_t> distinct_found;  // absent when dedup is off (order too large)
    std::map<int, std::uint64_t> found_connectivity;
    long long largest_found_edges = -1;

    std::optional<double> largest_found_density() const;
};

struct SweepOptions {
    int workers = 1;
    int dedup_limit = 10;  // canonical dedup of found graphs up to this order
    GraphSink found_sink;
    AnalyzeOptions analyze;
};

/// Generates cfg.samples graphs, filters to connected ones and counts the
/// 1-metric antidimensional hits. Aggregates are independent of worker
/// count and sample order (per-index seeding).
SweepRecord sweep(const RandomModelConfig& cfg, const SweepOptions& options = {});

struct NetworkAudit {
    std::string name;
    int n = 0;
    long long m = 0;
    double density = 0.0;
    int max_degree = 0;
    int min_degree = 0;
    bool connected = true;
    int component_order = 0;  // analyzed component
    Verdict verdict = Verdict::Undecided;
    std::optional<int> witness_k;
    std::string decided_by;
    std::int64_t decision_ms = 0;
};

struct AuditOptions {
    std::chrono::milliseconds budget{std::chrono::minutes(10)};
    AnalyzeOptions analyze;
};

/// Header stats plus the analysis verdict on the largest component, with
/// the time spent deciding. Pre-filters stay on: they never change the
/// verdict, only the cost.
NetworkAudit audit_network(const LabeledGraph& g, const std::string& name,
                           const AuditOptions& options = {});

}  // namespace antidim
