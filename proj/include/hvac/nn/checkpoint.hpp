#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hvac/nn/tensor.hpp"

// "NTC1" container: magic, u32 tensor count, then per tensor u16 name length,
// name bytes, u8 rank, u32 dims, little-endian f32 data.
namespace hvac::nn {

struct NamedTensor {
  std::string name;
  Tensor value;
};

std::string encode_checkpoint(const std::vector<const Parameter*>& params);
std::vector<NamedTensor> decode_checkpoint(const std::string& bytes);

void save_checkpoint(const std::vector<const Parameter*>& params, const std::filesystem::path& path);
std::vector<NamedTensor> load_checkpoint(const std::filesystem::path& path);

// Copies tensors into `params` by name. Every parameter must be present with
// a matching shape; extra tensors in the file are an error too.
void restore_parameters(const std::vector<NamedTensor>& tensors, const std::vector<Parameter*>& params);

// FNV-1a over the encoded container.
std::uint64_t parameter_checksum(const std::vector<const Parameter*>& params);

}  // namespace hvac::nn
