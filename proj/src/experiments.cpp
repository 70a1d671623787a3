#include "antidim/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace antidim {

std::string truncate_fraction(std::uint64_t num, std::uint64_t den, int digits) {
    std::uint64_t scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const std::uint64_t q = den == 0 ? 0 : num * scale / den;
    std::string frac = std::to_string(q % scale);
    frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
    return std::to_string(q / scale) + "." + frac;
}

std::string connectivity_string(const std::map<int, std::uint64_t>& histogram) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [kappa, count] : histogram) {
        if (!first) out << "; ";
        out << kappa << ": " << count;
        first = false;
    }
    return first ? "--" : out.str();
}

std::optional<double> ClassificationRow::max_found_density() const {
    if (max_found_edges < 0) return std::nullopt;
    const long long pairs = static_cast<long long>(order) * (order - 1) / 2;
    return static_cast<double>(max_found_edges) / static_cast<double>(pairs);
}

std::string ClassificationRow::ratio_string() const {
    if (found == 0) return "--";
    return truncate_fraction(found, connected, 6);
}

std::string ClassificationRow::max_density_string() const {
    if (max_found_edges < 0) return "--";
    const auto pairs = static_cast<std::uint64_t>(order) * (order - 1) / 2;
    return truncate_fraction(static_cast<std::uint64_t>(max_found_edges), pairs, 2);
}

std::vector<ClassificationRow> classify_stream(const std::function<std::optional<Graph>()>& next,
                                               const ClassifyOptions& options) {
    std::map<int, ClassificationRow> rows;
    std::mutex source_mu, agg_mu;

    auto work = [&]() {
        for (;;) {
            std::optional<Graph> g;
            {
                std::scoped_lock lock(source_mu);
                g = next();
            }
            if (!g) return;
            const int order = g->order();
            const bool conn = g->is_connected();
            AdimReport report;
            bool found = false;
            int kappa = 0;
            if (conn && order >= 2) {
                report = analyze(*g, options.analyze);
                found = report.verdict == Verdict::IsOne;
                if (found) kappa = vertex_connectivity(*g);
            }
            std::scoped_lock lock(agg_mu);
            auto& row = rows[order];
            row.order = order;
            if (!conn) {
                ++row.skipped_disconnected;
                continue;
            }
            ++row.connected;
            if (options.density_breakdown) {
                auto& bucket = row.breakdown_by_edges[g->edge_count()];
                if (found)
                    ++bucket.first;
                else
                    ++bucket.second;
            }
            if (found) {
                ++row.found;
                ++row.found_connectivity[kappa];
                row.max_found_edges = std::max(row.max_found_edges, g->edge_count());
                if (options.found_sink) options.found_sink(*g);
            }
        }
    };

    if (options.workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < options.workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    std::vector<ClassificationRow> out;
    out.reserve(rows.size());
    for (auto& [order, row] : rows) out.push_back(std::move(row));
    return out;
}

std::string classification_csv(const std::vector<ClassificationRow>& rows) {
    std::ostringstream out;
    out << "order,total,connected,found,ratio,connectivity,max_density\n";
    for (const auto& row : rows) {
        out << row.order << ',';
        if (row.total_distinct) out << *row.total_distinct;
        out << ',' << row.connected << ',' << row.found << ',' << row.ratio_string() << ",\""
            << connectivity_string(row.found_connectivity) << "\"," << row.max_density_string()
            << '\n';
    }
    return out.str();
}

std::optional<double> SweepRecord::largest_found_density() const {
    if (largest_found_edges < 0) return std::nullopt;
    const long long pairs = static_cast<long long>(config.n) * (config.n - 1) / 2;
    return static_cast<double>(largest_found_edges) / static_cast<double>(pairs);
}

SweepRecord sweep(const RandomModelConfig& cfg, const SweepOptions& options) {
    validate(cfg);
    SweepRecord record;
    record.config = cfg;
    const bool dedup = cfg.n <= options.dedup_limit;
    std::unordered_set<std::string> distinct;
    std::mutex agg_mu;
    std::atomic<std::uint64_t> next{0};

    auto work = [&]() {
        for (;;) {
            const std::uint64_t index = next.fetch_add(1);
            if (index >= cfg.samples) return;
            const Graph g = generate(cfg, index);
            const bool conn = g.is_connected();
            bool found = false;
            int kappa = 0;
            std::string key;
            if (conn && g.order() >= 2) {
                found = analyze(g, options.analyze).verdict == Verdict::IsOne;
                if (found) {
                    kappa = vertex_connectivity(g);
                    if (dedup) key = canonical_key(g);
                }
            }
            std::scoped_lock lock(agg_mu);
            ++record.generated;
            if (!conn) continue;
            ++record.connected;
            if (found) {
                ++record.found;
                ++record.found_connectivity[kappa];
                record.largest_found_edges = std::max(record.largest_found_edges, g.edge_count());
                if (dedup) distinct.insert(key);
                if (options.found_sink) options.found_sink(g);
            }
        }
    };

    if (options.workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < options.workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    if (dedup) record.distinct_found = distinct.size();
    return record;
}

NetworkAudit audit_network(const LabeledGraph& g, const std::string& name,
                           const AuditOptions& options) {
    NetworkAudit audit;
    audit.name = name;
    audit.n = g.graph.order();
    audit.m = g.graph.edge_count();
    audit.density = g.graph.density();
    audit.max_degree = g.graph.max_degree();
    audit.min_degree = g.graph.min_degree();
    audit.connected = g.graph.is_connected();

    const auto start = std::chrono::steady_clock::now();
    Graph component = g.graph;
    if (!audit.connected) component = largest_component(g).graph.graph;
    audit.component_order = component.order();

    if (component.order() >= 2) {
        AnalyzeOptions opts = options.analyze;
        opts.budget = options.budget;
        opts.prefilters = true;
        const AdimReport report = analyze(component, opts);
        audit.verdict = report.verdict;
        audit.decided_by = report.decided_by;
        if (report.witness) audit.witness_k = report.witness->k;
    } else {
        audit.decided_by = "degenerate-component";
    }
    audit.decision_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return audit;
}

}  // namespace antidim
