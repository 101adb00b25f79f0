#pragma once

#include <optional>
#include <string>

#include "cdens/learn.hpp"
#include "json.hpp"

namespace cdens::learn {

inline constexpr int kModelSchemaVersion = 1;

nlohmann::json model_to_json(const TrainedModel& model);
TrainedModel model_from_json(const nlohmann::json& doc);

nlohmann::json compound_to_json(const CompoundModel& model);
CompoundModel compound_from_json(const nlohmann::json& doc);

/// Either a single classifier or a compound pair, as stored on disk.
struct PersistedModel {
    std::optional<TrainedModel> single;
    std::optional<CompoundModel> compound;
};

void save_model_file(const std::string& path, const TrainedModel& model);
void save_model_file(const std::string& path, const CompoundModel& model);
/// Refuses documents whose schema_version differs from kModelSchemaVersion.
PersistedModel load_model_file(const std::string& path);

nlohmann::json report_to_json(const EvalReport& report);

}  // namespace cdens::learn
