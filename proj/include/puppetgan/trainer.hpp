// SPDX-License-Identifier: Apache-2.0
#pragma once

// Two-phase joint update: one Adam step on every encoder/decoder parameter
// against the weighted total, then one Adam step on every discriminator
// parameter against the least-squares discriminator term.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include <torch/torch.h>

#include "puppetgan/config.hpp"
#include "puppetgan/idx.hpp"
#include "puppetgan/losses.hpp"
#include "puppetgan/nets.hpp"

namespace puppet {

struct LearningRates {
    double gen = 0.0;
    double disc = 0.0;
};

/// Polynomial decay from the initial rates to end_lr_fraction of them.
LearningRates lr_at(std::int64_t step, const TrainConfig& cfg);
/// Linear decay from noise_sigma to 0 over effective_noise_steps().
double noise_sigma_at(std::int64_t step, const TrainConfig& cfg);

/// One training batch plus, for multi-slot models, one triplet batch per slot.
struct TrainingBatch {
    Batch batch;
    std::vector<TripletBatch> slot_triplets;
};

/// Deterministic batch provider: the batch for a given step depends only on (seed, step).
class BatchSource {
public:
    virtual ~BatchSource() = default;
    virtual TrainingBatch batch(std::int64_t step) = 0;
};

/// Renders triplets and real images on demand from the configured domains.
class ProceduralSource : public BatchSource {
public:
    ProceduralSource(const ExperimentConfig& cfg, const LabeledImages* real_archive = nullptr);
    TrainingBatch batch(std::int64_t step) override;

private:
    ExperimentConfig cfg_;
    const LabeledImages* real_archive_;
};

/// Samples from archives written by generate-data.
class ArchiveSource : public BatchSource {
public:
    ArchiveSource(const ExperimentConfig& cfg, const std::filesystem::path& dataset_dir);
    TrainingBatch batch(std::int64_t step) override;

private:
    int batch_size_;
    std::uint64_t seed_;
    std::vector<torch::Tensor> triplets_;  // one [N, 3, 1, S, S] tensor per slot
    torch::Tensor real_;                   // [M, 1, S, S]
};

std::unique_ptr<BatchSource> make_batch_source(const ExperimentConfig& cfg);

/// Networks, optimizers and the step counter of one run.
class TrainingState {
public:
    explicit TrainingState(const ExperimentConfig& cfg);

    const ExperimentConfig& config() const { return cfg_; }
    PuppetNets& nets() { return nets_; }
    torch::optim::Adam& gen_optimizer() { return *gen_opt_; }
    torch::optim::Adam& disc_optimizer() { return *disc_opt_; }
    std::int64_t global_step() const { return step_; }
    void set_global_step(std::int64_t s) { step_ = s; }

private:
    ExperimentConfig cfg_;
    PuppetNets nets_{nullptr};
    std::unique_ptr<torch::optim::Adam> gen_opt_;
    std::unique_ptr<torch::optim::Adam> disc_opt_;
    std::int64_t step_ = 0;
};

/// Runs both phases for the current global step and advances it. Throws
/// NumericalError naming the first non-finite term. With
/// `discriminator_phase` false only phase 1 runs (used to inspect the
/// parameter partition).
LossReport train_step(TrainingState& state, const TrainingBatch& batch, bool discriminator_phase = true);

struct FitOptions {
    std::filesystem::path run_dir;  // checkpoints and loss.csv go here
    std::optional<std::filesystem::path> resume_from;
    std::function<void(std::int64_t, const LossReport&)> on_log;
};

/// Trains up to total_steps, writing periodic checkpoints, the CSV loss log and
/// a final checkpoint. Returns the final checkpoint path. On a numerical abort
/// the last good state is written to checkpoint_last_good.pt before rethrowing.
std::filesystem::path fit(const ExperimentConfig& cfg, BatchSource& source, const FitOptions& opts);

}  // namespace puppet
