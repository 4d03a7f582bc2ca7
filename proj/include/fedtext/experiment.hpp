#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "fedtext/orchestrator.hpp"

namespace fedtext {

enum class Mode { Baseline, FL, Finetuned, SweepClients };

struct IidPartition {
  int num_clients = 4;
  std::optional<uint64_t> seed;  // derived from the experiment seed if absent
};

struct NonIidPartition {
  std::map<std::string, int> language_assignment;
};

using PartitionSpec = std::variant<IidPartition, NonIidPartition>;

struct DataSource {
  std::optional<std::string> tsv;
  std::optional<SyntheticCorpusSpec> synthetic;
};

struct AttackConfig {
  AttackRatio ratio = AttackRatio::None;
  std::optional<std::vector<int>> toxic_clients;  // explicit override of the ratio rule
  std::optional<std::vector<int>> flip_map;       // defaults to FlipMap::default_map
};

struct ExperimentConfig {
  Mode mode = Mode::FL;
  uint64_t seed = 0;
  int num_classes = 20;
  uint32_t feature_dim = 1u << 16;
  int baseline_epochs = 3;  // stage-1 centralized epochs on the first data half
  DataSource train_data;
  DataSource eval_data;
  PartitionSpec partition = IidPartition{};
  AttackConfig attack;
  FLConfig fl;
  std::optional<uint64_t> fl_seed;  // derived from `seed` if absent
  std::vector<int> sweep_clients;
  std::string output = "out/experiment";
  std::optional<std::string> save_model;  // checkpoint path for the final model
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config_file(const std::filesystem::path& path);

// Canonical echo; parse_config(config_to_json(c)) reproduces c.
nlohmann::json config_to_json(const ExperimentConfig& config);

struct RunOptions {
  int threads = 0;
  bool verbose = false;
};

// Executes the configured mode end-to-end and returns the structured report.
// Identical configs produce identical reports except the "timing" subtree.
nlohmann::json run_experiment(const ExperimentConfig& config, const RunOptions& opts = {});

// Writes <output>.json (full report) and <output>.csv (flat round,metric,value
// rows with '.' decimal separator regardless of locale).
void emit_report(const nlohmann::json& report, const std::filesystem::path& output_basename);
std::string report_to_csv(const nlohmann::json& report);

}  // namespace fedtext
