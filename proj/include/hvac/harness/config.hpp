#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hvac/control/expert.hpp"
#include "hvac/dpt/dataset.hpp"
#include "hvac/dpt/deploy.hpp"
#include "hvac/dpt/pretrain.hpp"
#include "hvac/ppo/library.hpp"

namespace hvac::harness {

inline const std::vector<std::string> kControllerNames{"baseline", "expert", "sarl", "marl", "hvac-dpt"};

struct BenchmarkConfig {
  std::vector<std::string> controllers = kControllerNames;
  std::size_t seeds = 10;
  std::size_t episodes = 12;
  std::size_t horizon = env::kDefaultHorizon;
  // Explicit expert settings, or commission over `expert_grid` when absent.
  std::optional<control::ExpertConfig> expert;
  control::ExpertGrid expert_grid;
  std::size_t commission_episodes = 4;
  ppo::PpoConfig online_ppo;  // SARL / MARL, fresh at deployment

  void validate() const;
};

struct RunConfig {
  std::string name = "run";
  std::uint64_t seed = 0;
  std::filesystem::path output_dir = "runs/default";
  std::vector<std::string> train_buildings{"b_train"};
  std::string deploy_building = "b_denver";
  ppo::PpoConfig library_ppo;
  ppo::DiversityConfig diversity;
  dpt::DatasetConfig dataset;
  dpt::DptTrainConfig pretrain;
  dpt::DeployConfig deploy;
  BenchmarkConfig benchmark;

  void validate() const;
};

// Missing keys keep their defaults; unknown top-level keys are a ConfigError.
RunConfig run_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RunConfig& cfg);
nlohmann::json to_json(const BenchmarkConfig& cfg);
RunConfig load_run_config(const std::filesystem::path& path);

// Stable hashes over the canonical JSON of what each phase consumes,
// chained so a change upstream invalidates every later phase.
struct PhaseHashes {
  std::string library;
  std::string dataset;
  std::string pretrain;
  std::string deploy;
  std::string benchmark;
  std::string whole;
};

PhaseHashes phase_hashes(const RunConfig& cfg);

// Derived sub-seeds so the phases draw independent streams from cfg.seed.
std::uint64_t phase_seed(const RunConfig& cfg, const std::string& phase);

}  // namespace hvac::harness
