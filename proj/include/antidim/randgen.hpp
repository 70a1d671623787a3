#pragma once

#include <cstdint>
#include <string>

#include "antidim/graph.hpp"

namespace antidim {

enum class RandomModel { BarabasiAlbert, Gnm, Gnp };

/// Parameters of one random-graph stream. Streams are reproducible: the
/// graph for (config, sample index) is a pure function of the 64-bit seed
/// and the index, independent of sampling order or worker count. The
/// generator is std::mt19937_64 with explicit rejection sampling, so
/// streams are identical across platforms.
struct RandomModelConfig {
    RandomModel model = RandomModel::Gnp;
    int n = 0;
    long long m = 0;  // edges per step (BA) or total edges (Gnm)
    double p = 0.0;   // edge probability (Gnp)
    std::uint64_t seed = 0;
    std::uint64_t samples = 1;
};

void validate(const RandomModelConfig& cfg);

std::string model_name(RandomModel model);
RandomModel model_from_name(const std::string& name);

/// Per-sample seed derivation (splitmix of seed and index).
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

/// Preferential attachment starting from a complete graph on m+1 vertices;
/// every new vertex picks m distinct neighbors with probability
/// proportional to current degree.
Graph barabasi_albert(int n, int m, std::uint64_t seed);

/// m distinct edges drawn uniformly among all n(n-1)/2 pairs.
Graph gnm(int n, long long m, std::uint64_t seed);

/// Every pair becomes an edge independently with probability p.
Graph gnp(int n, double p, std::uint64_t seed);

Graph generate(const RandomModelConfig& cfg, std::uint64_t sample_index);

}  // namespace antidim
