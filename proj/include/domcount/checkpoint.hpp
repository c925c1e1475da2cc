#pragma once

// Per-row checkpoints of a configuration list: a one-line text header
// followed by length-prefixed (code, weight vector) records.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "domcount/ring.hpp"
#include "domcount/sweep.hpp"

namespace domcount {

struct CheckpointHeader {
  int version = 1;
  std::string family;
  int m = 0;
  int n = 0;
  int row = 0;
  std::string ring;
  std::size_t stride = 1;

  bool same_run(const CheckpointHeader& o) const {
    return version == o.version && family == o.family && m == o.m && n == o.n && ring == o.ring &&
           stride == o.stride;
  }
};

void write_checkpoint(const std::filesystem::path& path, const CheckpointHeader& header,
                      const ConfigurationList<std::uint32_t>& list);
void write_checkpoint(const std::filesystem::path& path, const CheckpointHeader& header,
                      const ConfigurationList<BigInt>& list);

template <class Value>
struct Checkpoint {
  CheckpointHeader header;
  ConfigurationList<Value> list;
};

/// Returns nullopt when the file is missing; throws on a malformed file.
std::optional<Checkpoint<std::uint32_t>> read_checkpoint_mod(const std::filesystem::path& path);
std::optional<Checkpoint<BigInt>> read_checkpoint_exact(const std::filesystem::path& path);

std::filesystem::path checkpoint_path(const std::filesystem::path& dir, const CheckpointHeader& header);

}  // namespace domcount
