#include "antidim/randgen.hpp"

#include <limits>
#include <random>
#include <unordered_set>

namespace antidim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Unbiased bounded draw by bucket rejection; platform independent.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t bucket = std::numeric_limits<std::uint64_t>::max() / n;
    const std::uint64_t limit = bucket * n;
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit) return x / bucket;
    }
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 0x51ed2701a9e0b3afULL));
}

std::string model_name(RandomModel model) {
    switch (model) {
        case RandomModel::BarabasiAlbert: return "ba";
        case RandomModel::Gnm: return "gnm";
        case RandomModel::Gnp: return "gnp";
    }
    return "?";
}

RandomModel model_from_name(const std::string& name) {
    if (name == "ba" || name == "barabasi-albert") return RandomModel::BarabasiAlbert;
    if (name == "gnm") return RandomModel::Gnm;
    if (name == "gnp") return RandomModel::Gnp;
    throw InvalidGraphError("unknown random model '" + name + "'");
}

void validate(const RandomModelConfig& cfg) {
    if (cfg.n < 1) throw InvalidGraphError("random model needs n >= 1");
    const long long pairs = static_cast<long long>(cfg.n) * (cfg.n - 1) / 2;
    switch (cfg.model) {
        case RandomModel::BarabasiAlbert:
            if (cfg.m < 1 || cfg.m >= cfg.n)
                throw InvalidGraphError("preferential attachment needs 1 <= m < n");
            break;
        case RandomModel::Gnm:
            if (cfg.m < 0 || cfg.m > pairs)
                throw InvalidGraphError("uniform model needs 0 <= m <= n(n-1)/2");
            break;
        case RandomModel::Gnp:
            if (!(cfg.p >= 0.0 && cfg.p <= 1.0))
                throw InvalidGraphError("edge probability must lie in [0,1]");
            break;
    }
}

Graph barabasi_albert(int n, int m, std::uint64_t seed) {
    if (m < 1 || m >= n) throw InvalidGraphError("preferential attachment needs 1 <= m < n");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    // complete seed graph on m+1 vertices keeps every degree positive
    for (Vertex u = 0; u <= m; ++u)
        for (Vertex v = u + 1; v <= m; ++v) edges.emplace_back(u, v);
    std::vector<Vertex> endpoints;  // each vertex repeated deg times
    for (const auto& [u, v] : edges) {
        endpoints.push_back(u);
        endpoints.push_back(v);
    }
    std::vector<Vertex> chosen;
    std::vector<char> picked(static_cast<std::size_t>(n), 0);
    for (Vertex t = m + 1; t < n; ++t) {
        chosen.clear();
        while (static_cast<int>(chosen.size()) < m) {
            Vertex cand = endpoints[bounded(rng, endpoints.size())];
            if (picked[cand]) continue;
            picked[cand] = 1;
            chosen.push_back(cand);
        }
        for (Vertex c : chosen) {
            picked[c] = 0;
            edges.emplace_back(t, c);
            endpoints.push_back(t);
            endpoints.push_back(c);
        }
    }
    return build_graph(n, edges);
}

Graph gnm(int n, long long m, std::uint64_t seed) {
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > pairs) throw InvalidGraphError("uniform model needs 0 <= m <= n(n-1)/2");
    std::mt19937_64 rng(seed);
    // Floyd's subset sampling over pair indices
    std::unordered_set<long long> chosen;
    chosen.reserve(static_cast<std::size_t>(m) * 2);
    for (long long j = pairs - m; j < pairs; ++j) {
        const long long t = static_cast<long long>(bounded(rng, static_cast<std::uint64_t>(j + 1)));
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long index : chosen) {
        Vertex u = 0;
        long long rest = index;
        while (rest >= n - 1 - u) {
            rest -= n - 1 - u;
            ++u;
        }
        edges.emplace_back(u, u + 1 + static_cast<Vertex>(rest));
    }
    return build_graph(n, edges);
}

Graph gnp(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidGraphError("edge probability must lie in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (uniform01(rng) < p) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

Graph generate(const RandomModelConfig& cfg, std::uint64_t sample_index) {
    validate(cfg);
    const std::uint64_t s = sample_seed(cfg.seed, sample_index);
    switch (cfg.model) {
        case RandomModel::BarabasiAlbert:
            return barabasi_albert(cfg.n, static_cast<int>(cfg.m), s);
        case RandomModel::Gnm:
            return gnm(cfg.n, cfg.m, s);
        case RandomModel::Gnp:
            return gnp(cfg.n, cfg.p, s);
    }
    throw InvalidGraphError("unreachable model");
}

}  // namespace antidim
