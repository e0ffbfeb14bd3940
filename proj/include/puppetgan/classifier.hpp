// SPDX-License-Identifier: Apache-2.0
#pragma once

// LeNet-style digit classifier used to check class preservation.

#include <cstdint>
#include <filesystem>
#include <vector>

#include <torch/torch.h>

#include "puppetgan/config.hpp"
#include "puppetgan/idx.hpp"

namespace puppet {

class LeNetImpl : public torch::nn::Module {
public:
    explicit LeNetImpl(int image_size);
    torch::Tensor forward(const torch::Tensor& x);

private:
    torch::nn::Conv2d conv1_{nullptr}, conv2_{nullptr};
    torch::nn::Linear fc1_{nullptr}, fc2_{nullptr}, fc3_{nullptr};
};
TORCH_MODULE(LeNet);

class Classifier {
public:
    explicit Classifier(int image_size = 32);

    bool trained() const { return trained_; }
    double holdout_accuracy() const { return holdout_accuracy_; }
    int image_size() const { return image_size_; }

    /// Trains on labeled real-domain images; procedural domains supply their class ids.
    /// Throws StateError when the held-out accuracy stays below eval.classifier_min_accuracy.
    void fit(const DomainSpec& real, const LabeledImages* archive, const EvalConfig& eval);

    /// Arg-max class per image; throws StateError when untrained.
    std::vector<int> predict(const torch::Tensor& images);

    void save(const std::filesystem::path& path);
    void load(const std::filesystem::path& path);

private:
    int image_size_;
    LeNet net_;
    bool trained_ = false;
    double holdout_accuracy_ = 0.0;
};

/// Labeled draw of `count` real-domain images (procedural or archive).
std::pair<torch::Tensor, torch::Tensor> labeled_real_batch(const DomainSpec& real, const LabeledImages* archive,
                                                           std::uint64_t seed, int count);

}  // namespace puppet
