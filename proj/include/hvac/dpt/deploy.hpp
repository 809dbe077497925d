#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <json.hpp>

#include "hvac/dpt/pretrain.hpp"

namespace hvac::dpt {

enum class Eviction { kFifo, kUniform };

Eviction eviction_from_string(const std::string& s);
std::string to_string(Eviction e);

// One zone's in-context dataset D^i with bounded capacity. kFifo keeps the most
// recent transitions; kUniform keeps a uniform reservoir sample of everything
// seen. Either way items stay in arrival order.
class ZoneContext {
 public:
  ZoneContext(std::size_t capacity, Eviction eviction, std::uint64_t seed);

  void add(const ContextItem& item);
  void clear();
  std::size_t size() const { return items_.size(); }
  std::size_t capacity() const { return capacity_; }
  std::size_t seen() const { return seen_; }
  std::vector<ContextItem> items() const;

 private:
  struct Slot {
    std::size_t index;
    ContextItem item;
  };
  std::size_t capacity_;
  Eviction eviction_;
  std::mt19937_64 rng_;
  std::vector<Slot> items_;
  std::size_t seen_ = 0;
};

struct DeployConfig {
  std::size_t episodes = 12;
  std::size_t horizon = env::kDefaultHorizon;
  std::size_t capacity = 0;  // 0: the context length used in pretraining
  Eviction eviction = Eviction::kFifo;
  double exploration_sigma = 0.0;
  // Ablation: contexts are emptied at every episode start.
  bool keep_context_empty = false;
  std::uint64_t seed = 0;

  void validate() const;
};

nlohmann::json to_json(const DeployConfig& cfg);
DeployConfig deploy_config_from_json(const nlohmann::json& j);

// Per-zone in-context agent around a frozen model. Contexts grow only between
// episodes; within an episode each zone's context cache is fixed.
class DptAgent {
 public:
  DptAgent(const TrainedDpt& model, const sim::BuildingSpec& building, const DeployConfig& cfg);

  void begin_episode();
  std::vector<double> act(std::span<const env::ZoneObservation> observations);
  void end_episode(const std::vector<std::vector<env::TransitionTuple>>& transitions);

  const std::vector<ZoneContext>& contexts() const { return contexts_; }

 private:
  const TrainedDpt& model_;
  std::vector<double> areas_;
  DeployConfig cfg_;
  std::vector<ZoneContext> contexts_;
  std::vector<ContextCache> caches_;
  std::mt19937_64 noise_rng_;
};

struct DeployReport {
  std::vector<int> months;                          // per episode
  std::vector<std::vector<double>> zone_energy_wh;  // [episode][zone]
  std::vector<double> episode_energy_wh;
  std::vector<std::vector<ContextItem>> final_contexts;
  std::uint64_t checksum_before = 0;
  std::uint64_t checksum_after = 0;
};

nlohmann::json to_json(const DeployReport& r, const sim::BuildingSpec& building);

// Runs cfg.episodes consecutive episodes (episode e uses env::year_episode(seed, e)).
DeployReport deploy_online(const TrainedDpt& model, const sim::BuildingSpec& building, const DeployConfig& cfg);

}  // namespace hvac::dpt
