#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hvac/dpt/tokenizer.hpp"
#include "hvac/ppo/library.hpp"

namespace hvac::dpt {

inline constexpr int kDatasetVersion = 1;

struct Provenance {
  std::string building;
  std::size_t zone_index = 0;
  std::string tag;  // library policy that produced a_star
};

struct PretrainingSample {
  env::ZoneObservation s_query;
  std::vector<ContextItem> context;
  double a_star = 0.0;
  Provenance provenance;
};

enum class ContextSource { kZone, kBuilding };
enum class LabelPolicy { kBest, kAny };

struct DatasetConfig {
  std::size_t n_context = 64;
  std::size_t trajectories = 100;
  std::size_t samples_per_trajectory = 100;
  std::size_t horizon = env::kDefaultHorizon;
  // kZone: context from the query zone's own transitions (matches deployment);
  // kBuilding: drawn from all zones of the building.
  ContextSource context_source = ContextSource::kZone;
  // kBest: label from the zone's highest-evaluated library policy; kAny: a random one.
  LabelPolicy label_policy = LabelPolicy::kBest;
  std::uint64_t seed = 0;

  std::size_t n_samples() const { return trajectories * samples_per_trajectory; }
  void validate() const;
};

nlohmann::json to_json(const DatasetConfig& cfg);
DatasetConfig dataset_config_from_json(const nlohmann::json& j);

// Each trajectory: pick a building, give every zone a random library policy,
// roll out one stochastic episode, then draw samples_per_trajectory samples
// (zone, ordered context subsample, visited query state, mean-action label).
std::vector<PretrainingSample> generate_pretraining_dataset(const ppo::PolicyLibrary& library,
                                                            const std::vector<sim::BuildingSpec>& buildings,
                                                            const DatasetConfig& cfg);

nlohmann::json to_json(const PretrainingSample& s);
PretrainingSample sample_from_json(const nlohmann::json& j);

void write_dataset(const std::vector<PretrainingSample>& samples, const std::filesystem::path& path);
std::vector<PretrainingSample> read_dataset(const std::filesystem::path& path);

// Re-evaluates the provenance policy at s_query.
double replay_label(const ppo::PolicyLibrary& library, const PretrainingSample& sample);

}  // namespace hvac::dpt
