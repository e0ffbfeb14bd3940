// SPDX-License-Identifier: Apache-2.0
#pragma once

// Single-file checkpoint: header (format_version, global_step, config_hash,
// config_json), every named network parameter and both Adam states.

#include <cstdint>
#include <filesystem>
#include <string>

#include "puppetgan/config.hpp"

namespace puppet {

class TrainingState;

inline constexpr std::int64_t kCheckpointFormatVersion = 1;

struct CheckpointHeader {
    std::int64_t format_version = kCheckpointFormatVersion;
    std::int64_t global_step = 0;
    std::uint64_t config_hash = 0;
    std::string config_json;
};

void save_checkpoint(const std::filesystem::path& path, TrainingState& state);

CheckpointHeader read_checkpoint_header(const std::filesystem::path& path);

/// Builds a fresh state from the stored config and restores everything.
/// Throws FormatError on a version mismatch or a config_hash that does not
/// match the stored config.
TrainingState load_checkpoint(const std::filesystem::path& path);

/// Restores into an existing state; additionally requires its config hash to match.
void load_checkpoint_into(const std::filesystem::path& path, TrainingState& state);

}  // namespace puppet
