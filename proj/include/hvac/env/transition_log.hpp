#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hvac/env/environment.hpp"

namespace hvac::env {

// One line of a transition log:
// {"s":[6],"a":float,"s_next":[6],"r":float,"zone":int,"t":int,"episode":int}
struct TransitionRecord {
  TransitionTuple transition;
  std::size_t zone = 0;
  std::size_t t = 0;
  std::size_t episode = 0;
};

nlohmann::json to_json(const TransitionTuple& tr);
TransitionTuple transition_from_json(const nlohmann::json& j);

std::string to_jsonl_line(const TransitionRecord& rec);
TransitionRecord record_from_jsonl_line(const std::string& line);

class TransitionLogWriter {
 public:
  explicit TransitionLogWriter(const std::filesystem::path& path);
  void write(const TransitionRecord& rec);

 private:
  std::ofstream out_;
};

std::vector<TransitionRecord> read_transition_log(const std::filesystem::path& path);

}  // namespace hvac::env
