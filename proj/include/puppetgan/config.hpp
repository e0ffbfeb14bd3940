// SPDX-License-Identifier: Apache-2.0
#pragma once

// Experiment configuration: JSON with sections data / model / loss / train / eval.
// Unknown keys are rejected. Overrides use dotted keys ("train.total_steps=1").

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "puppetgan/domains.hpp"
#include "puppetgan/losses.hpp"
#include "puppetgan/nets.hpp"

namespace puppet {

struct DataConfig {
    /// Attribute of interest per slot, e.g. {"rotation"} or {"rotation", "size"}.
    std::vector<std::string> aoi{"rotation"};
    /// "matched", "smaller_synth" or "unscaled_real".
    std::string shift_preset = "matched";
    int image_size = 32;
    DomainSpec synthetic = default_synthetic_domain();
    DomainSpec real = default_real_proxy_domain();
    /// Optional external IDX archive for the real domain.
    std::string real_images;
    std::string real_labels;
    /// Optional directory written by generate-data; training then samples from its archives.
    std::string dataset_dir;
    int num_triplets = 4096;
    int num_real = 4096;

    std::vector<Attribute> aoi_attributes() const;
};

struct TrainConfig {
    double gen_lr = 2e-4;
    double disc_lr = 5e-5;
    double adam_beta1 = 0.5;
    double adam_beta2 = 0.999;
    double end_lr_fraction = 0.01;
    double decay_power = 1.0;
    /// Steps over which the learning rates decay; 0 means total_steps.
    std::int64_t decay_steps = 0;
    int batch_size = 64;
    std::int64_t total_steps = 20000;
    double noise_sigma = 0.2;
    /// Steps over which sigma decays linearly to zero; negative means total_steps / 2.
    std::int64_t noise_decay_steps = -1;
    std::uint64_t seed = 0;
    bool baseline_mode = false;
    std::int64_t checkpoint_every = 1000;
    std::int64_t log_every = 10;
    int threads = 1;

    void validate() const;
    std::int64_t effective_decay_steps() const { return decay_steps > 0 ? decay_steps : total_steps; }
    std::int64_t effective_noise_steps() const { return noise_decay_steps >= 0 ? noise_decay_steps : total_steps / 2; }
};

struct EvalConfig {
    std::string model_tag = "puppetgan";
    int num_pairs = 2000;
    int v_rest_inputs = 200;
    int v_rest_refs = 16;
    std::uint64_t seed = 12345;
    int classifier_steps = 3000;
    int classifier_batch = 64;
    double classifier_lr = 1e-3;
    int classifier_holdout = 2000;
    double classifier_min_accuracy = 0.95;
    bool saturation_probe = false;
    int saturation_points = 13;
    double saturation_extent = 2.0;
    int mosaic_rows = 6;
    int mosaic_cols = 8;
};

struct ExperimentConfig {
    DataConfig data;
    NetworkConfig model;
    LossWeights loss;
    TrainConfig train;
    EvalConfig eval;
    std::vector<std::string> presets;

    /// Cross-section checks and derived settings (split_embedding follows baseline_mode).
    void finalize();
    void validate() const;
};

nlohmann::json to_json(const ExperimentConfig& cfg);
/// Missing keys keep their defaults; unknown keys throw ConfigError naming the key.
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::filesystem::path& path);
void save_config(const std::filesystem::path& path, const ExperimentConfig& cfg);

/// Applies "section.key=value"; the value is parsed as JSON, falling back to a string.
void apply_override(ExperimentConfig& cfg, std::string_view assignment);
/// Applies several assignments together; cross-field checks run once, after all of them.
void apply_overrides(ExperimentConfig& cfg, const std::vector<std::string>& assignments);

/// Named presets: two_enc, one_dec, k16, d64, smaller_synth, unscaled_real, baseline, desk.
void apply_preset(ExperimentConfig& cfg, std::string_view name);
std::vector<std::string> preset_names();

/// FNV-1a over the canonical JSON of the data, model and loss sections.
std::uint64_t config_hash(const ExperimentConfig& cfg);
std::string hash_hex(std::uint64_t h);

}  // namespace puppet
