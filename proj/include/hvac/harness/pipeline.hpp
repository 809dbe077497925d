#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hvac/control/expert.hpp"
#include "hvac/dpt/dataset.hpp"
#include "hvac/dpt/deploy.hpp"
#include "hvac/dpt/pretrain.hpp"
#include "hvac/harness/benchmark.hpp"
#include "hvac/harness/config.hpp"
#include "hvac/ppo/library.hpp"

namespace hvac::harness {

// Wraps any failure inside a phase so callers can report which one broke.
class PhaseError : public Error {
 public:
  PhaseError(std::string phase, const std::string& what)
      : Error("phase '" + phase + "' failed: " + what), phase_(std::move(phase)) {}
  const std::string& phase() const { return phase_; }

 private:
  std::string phase_;
};

inline const std::vector<std::string> kPhaseNames{"train-policies", "gen-dataset", "pretrain", "deploy", "benchmark",
                                                  "report"};

// Artifact layout under cfg.output_dir. Each phase writes <phase>.stamp with
// its config hash; a phase whose stamp matches and whose artifacts exist is
// skipped unless forced.
class Pipeline {
 public:
  explicit Pipeline(RunConfig cfg, bool force = false);

  const RunConfig& config() const { return cfg_; }
  const PhaseHashes& hashes() const { return hashes_; }
  std::filesystem::path path(const std::string& artifact) const;

  void train_policies();
  void gen_dataset();
  void pretrain();
  void deploy();
  void benchmark();
  void report();
  void run_all();
  // Dispatch by name in kPhaseNames. With force set, only `name` itself is
  // rerun; stale upstream phases still run as usual.
  void run_phase(const std::string& name);

  ppo::PolicyLibrary load_library() const;
  std::vector<dpt::PretrainingSample> load_dataset() const;
  dpt::TrainedDpt load_model() const;
  BenchmarkResult load_benchmark() const;
  control::ExpertConfig expert_config();

  // Phases actually executed (not skipped) by this instance.
  const std::vector<std::string>& executed() const { return executed_; }

 private:
  bool fresh(const std::string& phase, const std::string& hash, const std::vector<std::string>& artifacts) const;
  bool forced(const std::string& phase) const;
  void stamp(const std::string& phase, const std::string& hash) const;
  template <typename F>
  void guarded(const std::string& phase, const std::string& hash, const std::vector<std::string>& artifacts, F&& body);

  RunConfig cfg_;
  PhaseHashes hashes_;
  bool force_;
  std::string force_only_;
  std::vector<std::string> executed_;
};

}  // namespace hvac::harness
