#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hvac/ppo/policy.hpp"
#include "hvac/ppo/trainer.hpp"
#include "hvac/sim/building.hpp"

namespace hvac::ppo {

// Sources of diversity across the library: independent runs (seed), per-run
// entropy coefficients, per-episode start months / weather draws, and
// snapshots taken at several points of each run.
struct DiversityConfig {
  std::size_t runs = 5;
  std::vector<double> snapshot_fractions{0.25, 0.5, 0.75, 1.0};
  // cycled over runs
  std::vector<double> entropy_coefs{0.0, 0.005, 0.01, 0.02};
  bool vary_start_month = true;
  std::size_t horizon = env::kDefaultHorizon;
  std::size_t eval_episodes = 5;
  std::uint64_t seed = 0;

  std::size_t tags_per_zone() const { return runs * snapshot_fractions.size(); }
  void validate() const;
};

nlohmann::json to_json(const DiversityConfig& cfg);
DiversityConfig diversity_config_from_json(const nlohmann::json& j);

struct PolicyMeta {
  std::string building;
  std::string zone;
  std::size_t zone_index = 0;
  std::string tag;
  std::size_t run = 0;
  std::uint64_t seed = 0;
  std::size_t episodes = 0;  // training episodes before this snapshot
  double entropy_coef = 0.0;
  std::string config_hash;
  std::vector<double> return_curve;  // raw training return per episode
  double initial_eval_return = 0.0;  // random-init policy, deterministic, paired seeds
  double eval_return = 0.0;          // this snapshot, same seeds
};

nlohmann::json to_json(const PolicyMeta& meta);
PolicyMeta policy_meta_from_json(const nlohmann::json& j);

struct LibraryEntry {
  PolicyMeta meta;
  PpoPolicy policy;
};

struct PolicyLibrary {
  std::vector<LibraryEntry> entries;

  std::vector<const LibraryEntry*> for_zone(const std::string& building, std::size_t zone_index) const;
  // Highest eval_return for the zone; ties keep the first entry.
  const LibraryEntry& best_for_zone(const std::string& building, std::size_t zone_index) const;
  std::vector<std::string> buildings() const;

  // library/<building>/<zone>/<tag>/{policy.ntc, meta.json} plus index.json.
  void save(const std::filesystem::path& dir) const;
  static PolicyLibrary load(const std::filesystem::path& dir);
};

// Seeds of the deterministic evaluation episodes shared by every run.
env::EpisodeConfig eval_episode(const DiversityConfig& cfg, std::size_t index);

// Mean deterministic per-zone return of `policies` over cfg.eval_episodes.
std::vector<double> evaluate_policies(const sim::BuildingSpec& building, std::span<const PpoPolicy* const> policies,
                                      const DiversityConfig& cfg);

PolicyLibrary train_policy_library(const std::vector<sim::BuildingSpec>& buildings, const DiversityConfig& diversity,
                                   const PpoConfig& cfg, const std::string& config_hash = {});

}  // namespace hvac::ppo
