#pragma once

#include <string>

#include <json.hpp>

#include "moead/grid.hpp"
#include "moead/moead.hpp"
#include "moead/tuner.hpp"

namespace moead {

// JSON schemas. Every key is optional and falls back to the struct default;
// unknown keys are rejected with std::invalid_argument.

nlohmann::json to_json(const RunConfig& config);
RunConfig run_config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GridStudySpec& spec);
GridStudySpec grid_spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TunerConfig& config);
TunerConfig tuner_config_from_json(const nlohmann::json& j);

/// {config, seed, framework, final_population: [[x, f], ...],
///  result_set: [f, ...], archive_file, archive_size, evaluations_used}
nlohmann::json run_result_json(const RunConfig& config, const RunResult& result, const std::string& archive_file);

nlohmann::json to_json(const TuneResult& result, const TunerConfig& config);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace moead
