#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "hvac/control/controller.hpp"
#include "hvac/control/expert.hpp"
#include "hvac/dpt/deploy.hpp"
#include "hvac/harness/report.hpp"
#include "hvac/ppo/trainer.hpp"

namespace hvac::harness {

// Everything a controller may need; model is required only for hvac-dpt.
struct ControllerArtifacts {
  const dpt::TrainedDpt* model = nullptr;
  dpt::DeployConfig deploy;
  control::ExpertConfig expert;
  ppo::PpoConfig online_ppo;
};

std::unique_ptr<control::Controller> make_controller(const std::string& name, const sim::BuildingSpec& building,
                                                     const ControllerArtifacts& artifacts, std::uint64_t seed,
                                                     std::size_t horizon);

struct EpisodeSummary {
  int month = 1;
  double total_wh = 0.0;
  double reward_sum = 0.0;
  std::vector<double> zone_wh;
};

struct SeedRun {
  std::string controller;
  std::size_t seed_index = 0;
  std::vector<EpisodeSummary> episodes;
};

struct BenchmarkResult {
  std::vector<MonthlyEnergyReport> reports;  // one per controller, in request order
  std::vector<SeedRun> runs;                 // ordered by (controller, seed)
};

nlohmann::json to_json(const BenchmarkResult& r);
BenchmarkResult benchmark_result_from_json(const nlohmann::json& j);

// Every controller sees the same weather/occupancy sequence for seed index s:
// episode e uses env::year_episode(mix_seed(base_seed, s), e, horizon).
BenchmarkResult benchmark(const std::vector<std::string>& controllers, const sim::BuildingSpec& building,
                          std::size_t seeds, std::size_t episodes, std::size_t horizon,
                          const ControllerArtifacts& artifacts, std::uint64_t base_seed);

// Aggregates runs into per-controller mean monthly reports.
std::vector<MonthlyEnergyReport> aggregate(const std::vector<SeedRun>& runs,
                                           const std::vector<std::string>& controllers, std::size_t zones);

}  // namespace hvac::harness
