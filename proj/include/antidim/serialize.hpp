#pragma once

#include <string>

#include "json.hpp"

#include "antidim/antiresolve.hpp"
#include "antidim/experiments.hpp"
#include "antidim/products.hpp"
#include "antidim/randgen.hpp"

namespace antidim {

std::string verdict_name(Verdict v);

nlohmann::json to_json(const AdimReport& report);
nlohmann::json to_json(const AdimTable& table);
nlohmann::json to_json(const std::vector<HardeningEntry>& entries);
nlohmann::json to_json(const RandomModelConfig& cfg);
nlohmann::json to_json(const ClassificationRow& row);
nlohmann::json to_json(const SweepRecord& record);
nlohmann::json to_json(const NetworkAudit& audit);

/// JSON-lines envelope: {"schema":1,"type":...,"config":...,"metrics":...}
nlohmann::json jsonl_record(const std::string& type, nlohmann::json config,
                            nlohmann::json metrics);

RandomModelConfig config_from_json(const nlohmann::json& j);

}  // namespace antidim
