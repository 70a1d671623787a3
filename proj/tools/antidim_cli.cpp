// Command-line front end: analysis, hardening advice, family and random
// generation, exhaustive enumeration, table replication and network audits.
// Machine-readable payloads go to stdout (or --out), logs to stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "antidim/enumerate.hpp"
#include "antidim/experiments.hpp"
#include "antidim/families.hpp"
#include "antidim/serialize.hpp"

using namespace antidim;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct GraphInputFlags {
    std::string graph6;
    std::string graph6_file;
    std::string edges_file;
    std::string family;
    std::vector<long> params;
};

void add_graph_input(CLI::App* cmd, GraphInputFlags& in) {
    cmd->add_option("--graph6", in.graph6, "graph as one graph6 line");
    cmd->add_option("--graph6-file", in.graph6_file, "file of graph6 lines (first one is used)");
    cmd->add_option("--edges", in.edges_file, "edge-list file ('#'/'%' comments)");
    cmd->add_option("--name", in.family, "named family (see 'family --list')");
    cmd->add_option("--param", in.params, "family parameters")->delimiter(',');
}

LabeledGraph load_graph(const GraphInputFlags& in) {
    LabeledGraph out;
    auto numeric_labels = [&](const Graph& g) {
        out.graph = g;
        out.labels.clear();
        for (int v = 0; v < g.order(); ++v) out.labels.push_back(std::to_string(v));
    };
    if (!in.graph6.empty()) {
        numeric_labels(parse_graph6(in.graph6));
    } else if (!in.graph6_file.empty()) {
        std::ifstream f(in.graph6_file);
        if (!f) throw ParseError("cannot open " + in.graph6_file);
        std::string line;
        if (!std::getline(f, line)) throw ParseError(in.graph6_file + " is empty");
        numeric_labels(parse_graph6(line));
    } else if (!in.edges_file.empty()) {
        std::ifstream f(in.edges_file);
        if (!f) throw ParseError("cannot open " + in.edges_file);
        out = parse_edge_list(f).graph;
    } else if (!in.family.empty()) {
        numeric_labels(make_family(in.family, in.params));
    } else {
        std::string line;
        if (!std::getline(std::cin, line))
            throw ParseError("no graph given (flags or a graph6 line on stdin expected)");
        numeric_labels(parse_graph6(line));
    }
    return out;
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw ParseError("cannot open output file " + path);
    return file;
}

// "name:p1,p2" catalogs for harden
CatalogEntry parse_factor(const std::string& text) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    std::vector<long> params;
    if (colon != std::string::npos) {
        std::istringstream rest(text.substr(colon + 1));
        std::string tok;
        while (std::getline(rest, tok, ',')) params.push_back(std::stol(tok));
    }
    return {text, make_family(name, params)};
}

int default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::function<std::optional<Graph>()> graph6_stream(std::istream& in) {
    auto* source = &in;
    return [source]() -> std::optional<Graph> {
        std::string line;
        while (std::getline(*source, line)) {
            if (line.empty()) continue;
            return parse_graph6(line);
        }
        return std::nullopt;
    };
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-metric antidimension toolkit"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write machine-readable output here instead of stdout");

    auto* analyze_cmd = app.add_subcommand("analyze", "decide whether the antidimension is 1");
    GraphInputFlags analyze_in;
    add_graph_input(analyze_cmd, analyze_in);
    double analyze_budget = 0.0;
    int analyze_exact_limit = 0;
    analyze_cmd->add_option("--budget", analyze_budget, "wall-clock budget in seconds");
    analyze_cmd->add_option("--exact-limit", analyze_exact_limit,
                            "run the subset oracle when n <= this");

    auto* oracle_cmd = app.add_subcommand("oracle", "exact antidimension by subset scan");
    GraphInputFlags oracle_in;
    add_graph_input(oracle_cmd, oracle_in);
    int oracle_limit = 12;
    oracle_cmd->add_option("--limit", oracle_limit, "refuse graphs larger than this");

    auto* harden_cmd = app.add_subcommand("harden", "product embeddings that hide a weak graph");
    GraphInputFlags harden_in;
    add_graph_input(harden_cmd, harden_in);
    std::vector<std::string> factors;
    harden_cmd->add_option("--factor", factors, "candidate second factor, e.g. path:3")
        ->required();

    auto* family_cmd = app.add_subcommand("family", "emit a named graph as graph6");
    std::string family_name;
    std::vector<long> family_params;
    bool family_list = false;
    family_cmd->add_option("--name", family_name, "family name");
    family_cmd->add_option("--param", family_params, "parameters")->delimiter(',');
    family_cmd->add_flag("--list", family_list, "list known families");

    auto* enum_cmd = app.add_subcommand("enumerate", "connected graphs of an order, as graph6");
    int enum_n = 0;
    bool enum_all = false;
    std::string enum_extend;
    int enum_workers = default_workers();
    enum_cmd->add_option("--n", enum_n, "order (2..8 built in)");
    enum_cmd->add_flag("--all", enum_all, "include disconnected graphs");
    enum_cmd->add_option("--extend", enum_extend,
                         "grow the graph6 stream in this file by one vertex instead");
    enum_cmd->add_option("--workers", enum_workers, "parallelism");

    auto* sweep_cmd = app.add_subcommand("sweep", "random-model sweep");
    std::string sweep_model;
    RandomModelConfig sweep_cfg;
    std::string sweep_manifest;
    int sweep_workers = default_workers();
    std::string sweep_format = "json";
    sweep_cmd->add_option("--model", sweep_model, "ba | gnm | gnp");
    sweep_cmd->add_option("--n", sweep_cfg.n, "order");
    sweep_cmd->add_option("--m", sweep_cfg.m, "edges (gnm) or edges per step (ba)");
    sweep_cmd->add_option("--p", sweep_cfg.p, "edge probability (gnp)");
    sweep_cmd->add_option("--seed", sweep_cfg.seed, "stream seed");
    sweep_cmd->add_option("--samples", sweep_cfg.samples, "number of graphs");
    sweep_cmd->add_option("--manifest", sweep_manifest, "JSON config or array of configs");
    sweep_cmd->add_option("--workers", sweep_workers, "parallelism");
    sweep_cmd->add_option("--format", sweep_format, "json | csv")->capture_default_str();

    auto* classify_cmd = app.add_subcommand("classify", "table rows for a stream of graphs");
    int classify_enum = 0;
    std::string classify_file;
    bool classify_totals = false;
    bool classify_breakdown = false;
    int classify_workers = default_workers();
    std::string classify_format = "json";
    classify_cmd->add_option("--enumerate", classify_enum,
                             "classify all connected graphs of this order");
    classify_cmd->add_option("--graph6-file", classify_file, "graph6 stream (default: stdin)");
    classify_cmd->add_flag("--with-totals", classify_totals,
                           "also count all distinct graphs of the order (enumerated input only)");
    classify_cmd->add_flag("--density-breakdown", classify_breakdown, "per-edge-count breakdown");
    classify_cmd->add_option("--workers", classify_workers, "parallelism");
    classify_cmd->add_option("--format", classify_format, "json | csv")->capture_default_str();

    auto* audit_cmd = app.add_subcommand("audit", "header stats + verdict for a real network");
    GraphInputFlags audit_in;
    add_graph_input(audit_cmd, audit_in);
    std::string audit_name = "network";
    double audit_budget = 600.0;
    audit_cmd->add_option("--label", audit_name, "name used in the report");
    audit_cmd->add_option("--budget", audit_budget, "wall-clock budget in seconds")
        ->capture_default_str();

    auto* convert_cmd = app.add_subcommand("convert", "edge list <-> graph6");
    GraphInputFlags convert_in;
    add_graph_input(convert_cmd, convert_in);
    std::string convert_to = "graph6";
    convert_cmd->add_option("--to", convert_to, "graph6 | edges")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    std::ofstream out_file;
    try {
        std::ostream& out = open_out(out_path, out_file);

        if (analyze_cmd->parsed()) {
            const Graph g = load_graph(analyze_in).graph;
            AnalyzeOptions opts;
            if (analyze_budget > 0)
                opts.budget =
                    std::chrono::milliseconds(static_cast<long long>(analyze_budget * 1000));
            opts.oracle_limit = analyze_exact_limit;
            const AdimReport report = analyze(g, opts);
            out << to_json(report).dump() << '\n';
            std::cerr << "verdict: " << verdict_name(report.verdict) << " (decided by "
                      << report.decided_by << ")\n";
            return report.verdict == Verdict::Undecided ? kExitBudget : kExitOk;
        }

        if (oracle_cmd->parsed()) {
            const Graph g = load_graph(oracle_in).graph;
            const AdimTable table = adim_oracle(g, oracle_limit);
            out << to_json(table).dump() << '\n';
            std::cerr << "exact antidimension " << table.adim << " over "
                      << table.witnesses.size() << " realized k values\n";
            return kExitOk;
        }

        if (harden_cmd->parsed()) {
            const Graph g = load_graph(harden_in).graph;
            std::vector<CatalogEntry> catalog;
            for (const auto& f : factors) catalog.push_back(parse_factor(f));
            const auto advice = harden(g, catalog);
            out << to_json(advice).dump() << '\n';
            std::cerr << advice.size() << " candidate embeddings ranked\n";
            return kExitOk;
        }

        if (family_cmd->parsed()) {
            if (family_list) {
                json listing = json::array();
                for (const auto& [name, hint] : family_catalog())
                    listing.push_back({{"name", name}, {"params", hint}});
                out << listing.dump() << '\n';
                return kExitOk;
            }
            if (family_name.empty()) throw InvalidGraphError("family needs --name or --list");
            out << write_graph6(make_family(family_name, family_params)) << '\n';
            return kExitOk;
        }

        if (enum_cmd->parsed()) {
            std::uint64_t count = 0;
            const GraphSink sink = [&](const Graph& g) {
                out << write_graph6(g) << '\n';
                ++count;
            };
            if (!enum_extend.empty()) {
                std::ifstream f(enum_extend);
                if (!f) throw ParseError("cannot open " + enum_extend);
                std::vector<Graph> parents;
                std::string line;
                while (std::getline(f, line))
                    if (!line.empty()) parents.push_back(parse_graph6(line));
                augment_connected(parents, sink, enum_workers);
            } else if (enum_all) {
                enumerate_all(enum_n, sink, enum_workers);
            } else {
                enumerate_connected(enum_n, sink, enum_workers);
            }
            std::cerr << count << " graphs\n";
            return kExitOk;
        }

        if (sweep_cmd->parsed()) {
            std::vector<RandomModelConfig> configs;
            if (!sweep_manifest.empty()) {
                std::ifstream f(sweep_manifest);
                if (!f) throw ParseError("cannot open " + sweep_manifest);
                json manifest = json::parse(f);
                if (manifest.is_array())
                    for (const auto& item : manifest) configs.push_back(config_from_json(item));
                else
                    configs.push_back(config_from_json(manifest));
            } else {
                if (sweep_model.empty()) throw InvalidGraphError("sweep needs --model or --manifest");
                sweep_cfg.model = model_from_name(sweep_model);
                validate(sweep_cfg);
                configs.push_back(sweep_cfg);
            }
            SweepOptions opts;
            opts.workers = sweep_workers;
            std::ostringstream csv;
            csv << "model,n,param,seed,samples,generated,connected,found,distinct_found,"
                   "connectivity,largest_density\n";
            for (const auto& cfg : configs) {
                const SweepRecord record = sweep(cfg, opts);
                if (sweep_format == "csv") {
                    csv << model_name(cfg.model) << ',' << cfg.n << ','
                        << (cfg.model == RandomModel::Gnp ? std::to_string(cfg.p)
                                                          : std::to_string(cfg.m))
                        << ',' << cfg.seed << ',' << cfg.samples << ',' << record.generated << ','
                        << record.connected << ',' << record.found << ',';
                    if (record.distinct_found) csv << *record.distinct_found;
                    csv << ",\"" << connectivity_string(record.found_connectivity) << "\",";
                    if (record.largest_found_edges >= 0)
                        csv << truncate_fraction(
                            static_cast<std::uint64_t>(record.largest_found_edges),
                            static_cast<std::uint64_t>(cfg.n) * (cfg.n - 1) / 2, 2);
                    csv << '\n';
                } else {
                    out << jsonl_record("sweep", to_json(cfg), to_json(record)).dump() << '\n';
                }
                std::cerr << "sweep " << model_name(cfg.model) << " n=" << cfg.n << ": found "
                          << record.found << " / " << record.connected << " connected\n";
            }
            if (sweep_format == "csv") out << csv.str();
            return kExitOk;
        }

        if (classify_cmd->parsed()) {
            ClassifyOptions opts;
            opts.workers = classify_workers;
            opts.density_breakdown = classify_breakdown;
            std::vector<ClassificationRow> rows;
            if (classify_enum > 0) {
                std::vector<Graph> graphs;
                enumerate_connected(classify_enum, [&](const Graph& g) { graphs.push_back(g); },
                                    classify_workers);
                std::size_t i = 0;
                rows = classify_stream(
                    [&]() -> std::optional<Graph> {
                        if (i >= graphs.size()) return std::nullopt;
                        return graphs[i++];
                    },
                    opts);
                if (classify_totals) {
                    std::uint64_t total = 0;
                    enumerate_all(classify_enum, [&](const Graph&) { ++total; }, classify_workers);
                    for (auto& row : rows) row.total_distinct = total;
                }
            } else if (!classify_file.empty()) {
                std::ifstream f(classify_file);
                if (!f) throw ParseError("cannot open " + classify_file);
                rows = classify_stream(graph6_stream(f), opts);
            } else {
                rows = classify_stream(graph6_stream(std::cin), opts);
            }
            if (classify_format == "csv") {
                out << classification_csv(rows);
            } else {
                for (const auto& row : rows)
                    out << jsonl_record("classification", {{"order", row.order}}, to_json(row))
                               .dump()
                        << '\n';
            }
            for (const auto& row : rows)
                std::cerr << "order " << row.order << ": " << row.found << " found among "
                          << row.connected << " connected\n";
            return kExitOk;
        }

        if (audit_cmd->parsed()) {
            const LabeledGraph lg = load_graph(audit_in);
            AuditOptions opts;
            opts.budget = std::chrono::milliseconds(static_cast<long long>(audit_budget * 1000));
            const NetworkAudit audit = audit_network(lg, audit_name, opts);
            out << jsonl_record("audit", {{"name", audit.name}}, to_json(audit)).dump() << '\n';
            std::cerr << audit.name << ": n=" << audit.n << " m=" << audit.m << " verdict "
                      << verdict_name(audit.verdict) << " in " << audit.decision_ms << " ms\n";
            return audit.verdict == Verdict::Undecided ? kExitBudget : kExitOk;
        }

        if (convert_cmd->parsed()) {
            const LabeledGraph lg = load_graph(convert_in);
            if (convert_to == "graph6") {
                out << write_graph6(lg.graph) << '\n';
            } else if (convert_to == "edges") {
                for (const auto& [u, v] : lg.graph.edges())
                    out << lg.labels[u] << ' ' << lg.labels[v] << '\n';
            } else {
                throw InvalidGraphError("--to must be graph6 or edges");
            }
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}
