#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <json.hpp>

#include "hvac/dpt/model.hpp"
#include "hvac/env/environment.hpp"

namespace hvac::dpt {

// Token layout (20 values):
//   query:   [s(6), 0 x 14]
//   context: [s(6), a, r_norm, s'(6), 1 (type flag), 0 x 5]
inline constexpr std::size_t kTypeFlagSlot = 14;

// A context transition plus the floor area of the zone it came from; rewards
// are normalized per square metre so buildings of different size share a scale.
struct ContextItem {
  env::TransitionTuple transition;
  double floor_area = 1.0;
};

struct TokenNormalizer {
  env::NormStats obs = env::NormStats::defaults();
  double reward_mean = 0.0;  // of r / floor_area
  double reward_std = 1.0;

  static TokenNormalizer fit(std::span<const ContextItem> items);
  void validate() const;
};

nlohmann::json to_json(const TokenNormalizer& n);
TokenNormalizer token_normalizer_from_json(const nlohmann::json& j);

std::array<Real, kTokenDim> query_token(const env::ZoneObservation& s, const TokenNormalizer& norm);
std::array<Real, kTokenDim> context_token(const ContextItem& item, const TokenNormalizer& norm);

// [query, context_1..context_j] as a [(j+1) x 20] tensor. Throws
// ContractViolation when j exceeds max_context.
Tensor tokenize(const env::ZoneObservation& s_query, std::span<const ContextItem> context,
                const TokenNormalizer& norm, std::size_t max_context = 256);
// Context rows only, [j x 20] (the layout the model consumes).
Tensor context_tokens(std::span<const ContextItem> context, const TokenNormalizer& norm);

struct Detokenized {
  env::ZoneObservation s_query;
  std::vector<ContextItem> context;
};

// Inverse of tokenize(); floor areas must be supplied per context row.
Detokenized detokenize(const Tensor& tokens, const TokenNormalizer& norm, std::span<const double> floor_areas);

}  // namespace hvac::dpt
