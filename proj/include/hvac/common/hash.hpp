#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace hvac {

// 64-bit FNV-1a. Used for config hashes and parameter checksums.
class Fnv1a {
 public:
  void update(std::span<const std::byte> bytes);
  void update(std::string_view text);
  std::uint64_t digest() const { return state_; }
  std::string hex() const;

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

std::uint64_t fnv1a(std::string_view text);
std::string to_hex(std::uint64_t value);

// Derive an independent stream seed from a base seed and a salt sequence.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt);

}  // namespace hvac
