#include "antidim/serialize.hpp"

namespace antidim {

using nlohmann::json;

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::IsOne: return "IS_ONE";
        case Verdict::NotOne: return "NOT_ONE";
        case Verdict::Undecided: return "UNDECIDED";
    }
    return "?";
}

json to_json(const AdimReport& report) {
    json bounds = json::array();
    for (const auto& b : report.bounds)
        bounds.push_back({{"kind", b.kind == BoundKind::Lower ? "LOWER" : "UPPER"},
                          {"value", b.value},
                          {"source", b.source}});
    json j{{"verdict", verdict_name(report.verdict)},
           {"bounds", bounds},
           {"decided_by", report.decided_by}};
    if (report.witness)
        j["witness"] = {{"S", report.witness->set}, {"k", report.witness->k}};
    else
        j["witness"] = nullptr;
    if (report.exact)
        j["exact"] = *report.exact;
    else
        j["exact"] = nullptr;
    return j;
}

json to_json(const AdimTable& table) {
    json per_k = json::array();
    for (const auto& [k, witness] : table.witnesses)
        per_k.push_back({{"k", k}, {"adim_k", witness.size()}, {"witness", witness}});
    return {{"adim", table.adim}, {"realized", per_k}};
}

json to_json(const std::vector<HardeningEntry>& entries) {
    json out = json::array();
    for (const auto& e : entries) {
        json j{{"construction", e.construction},
               {"factor", e.factor},
               {"bound", e.bound},
               {"theorem", e.theorem},
               {"verified", e.status == HardeningEntry::Status::Verified},
               {"product_order", e.product_order}};
        if (e.status == HardeningEntry::Status::Unsafe) j["unsafe"] = true;
        if (!e.note.empty()) j["note"] = e.note;
        out.push_back(std::move(j));
    }
    return out;
}

json to_json(const RandomModelConfig& cfg) {
    json j{{"model", model_name(cfg.model)},
           {"n", cfg.n},
           {"seed", cfg.seed},
           {"samples", cfg.samples}};
    if (cfg.model == RandomModel::Gnp)
        j["p"] = cfg.p;
    else
        j["m"] = cfg.m;
    return j;
}

namespace {

json histogram_json(const std::map<int, std::uint64_t>& histogram) {
    json h = json::object();
    for (const auto& [kappa, count] : histogram) h[std::to_string(kappa)] = count;
    return h;
}

}  // namespace

json to_json(const ClassificationRow& row) {
    json j{{"order", row.order},
           {"connected", row.connected},
           {"found", row.found},
           {"ratio", row.ratio_string()},
           {"connectivity", histogram_json(row.found_connectivity)},
           {"max_density", row.max_density_string()}};
    if (row.total_distinct)
        j["total"] = *row.total_distinct;
    else
        j["total"] = nullptr;
    if (row.skipped_disconnected) j["skipped_disconnected"] = row.skipped_disconnected;
    if (!row.breakdown_by_edges.empty()) {
        json breakdown = json::array();
        const auto pairs = static_cast<std::uint64_t>(row.order) * (row.order - 1) / 2;
        for (const auto& [edges, counts] : row.breakdown_by_edges)
            breakdown.push_back({{"edges", edges},
                                 {"density", truncate_fraction(static_cast<std::uint64_t>(edges), pairs, 2)},
                                 {"found", counts.first},
                                 {"others", counts.second}});
        j["density_breakdown"] = std::move(breakdown);
    }
    return j;
}

json to_json(const SweepRecord& record) {
    json j{{"config", to_json(record.config)},
           {"generated", record.generated},
           {"connected", record.connected},
           {"found", record.found},
           {"connectivity", histogram_json(record.found_connectivity)}};
    if (record.distinct_found)
        j["distinct_found"] = *record.distinct_found;
    else
        j["distinct_found"] = nullptr;
    if (record.largest_found_edges >= 0) {
        j["largest_found_edges"] = record.largest_found_edges;
        const auto pairs =
            static_cast<std::uint64_t>(record.config.n) * (record.config.n - 1) / 2;
        j["largest_found_density"] =
            truncate_fraction(static_cast<std::uint64_t>(record.largest_found_edges), pairs, 2);
    }
    return j;
}

json to_json(const NetworkAudit& audit) {
    json j{{"name", audit.name},
           {"n", audit.n},
           {"m", audit.m},
           {"density", audit.density},
           {"max_degree", audit.max_degree},
           {"min_degree", audit.min_degree},
           {"connected", audit.connected},
           {"component_order", audit.component_order},
           {"verdict", verdict_name(audit.verdict)},
           {"decided_by", audit.decided_by},
           {"decision_ms", audit.decision_ms}};
    if (audit.witness_k)
        j["witness_k"] = *audit.witness_k;
    else
        j["witness_k"] = nullptr;
    return j;
}

json jsonl_record(const std::string& type, json config, json metrics) {
    return {{"schema", 1}, {"type", type}, {"config", std::move(config)},
            {"metrics", std::move(metrics)}};
}

RandomModelConfig config_from_json(const json& j) {
    RandomModelConfig cfg;
    cfg.model = model_from_name(j.at("model").get<std::string>());
    cfg.n = j.at("n").get<int>();
    if (j.contains("m")) cfg.m = j["m"].get<long long>();
    if (j.contains("p")) cfg.p = j["p"].get<double>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("samples")) cfg.samples = j["samples"].get<std::uint64_t>();
    validate(cfg);
    return cfg;
}

}  // namespace antidim
