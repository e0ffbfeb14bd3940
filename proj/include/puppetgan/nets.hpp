// SPDX-License-Identifier: Apache-2.0
#pragma once

// Shared encoder, domain decoders, patch discriminators and the attribute
// combination operator C_K(x, y) = G_K(E_attr(x), E_rest(y)).
//
// Layout (S = image_size, C = base_channels):
//   encoder trunk : reflect-pad 3 + 7x7 conv (C) -> 3x3/2 conv (2C) -> 3x3/2 conv (4C), ReLUs,
//                   num_residual_blocks residual blocks at S/4, fully-connected bottleneck
//   decoder       : fully-connected (4C x S/4 x S/4) -> residual blocks ->
//                   2 x [bilinear x2 upsample, 3x3 conv, ReLU] -> reflect-pad 3 + 7x7 conv -> tanh
//   discriminator : discriminator_layers x [4x4/2 conv, LeakyReLU 0.2] -> 3x3 conv to one channel;
//                   raw scores on an (S / 2^layers) square patch map
// The residual blocks sit before the bottleneck in the encoder and mirror it in the decoder.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <torch/torch.h>

#include "puppetgan/image.hpp"

namespace puppet {

/// A is the real domain, B the synthetic one.
enum class Domain { A, B };

std::string_view domain_name(Domain d);
/// Throws DomainError for anything other than "A"/"B" (case-insensitive, also "real"/"synthetic").
Domain parse_domain(std::string_view tag);

struct NetworkConfig {
    int image_size = 32;
    int base_channels = 8;
    int num_residual_blocks = 6;
    int bottleneck_total = 128;
    int attr_dim_k = 32;
    int num_attr_slots = 1;
    bool shared_encoder = true;
    bool shared_decoder = false;
    int discriminator_layers = 4;
    int disc_base_channels = 16;
    bool instance_norm = true;
    /// Std of the zero-mean Gaussian used for every conv/linear kernel; biases start at 0.
    double init_std = 0.02;
    /// False for the non-disentangled baseline: C_K(x, y) then decodes the whole code of x.
    bool split_embedding = true;

    int rest_dim() const { return bottleneck_total - num_attr_slots * attr_dim_k; }
    int score_map_size() const { return image_size >> discriminator_layers; }
    void validate() const;
};

/// Split latent code of a batch: one [N, k] tensor per attribute slot plus an [N, d_rest] tensor.
struct Embedding {
    std::vector<torch::Tensor> attr;
    torch::Tensor rest;

    torch::Tensor flat() const;
};

/// Attribute part from `attr_src`, rest part from `rest_src`.
Embedding mix(const Embedding& attr_src, const Embedding& rest_src);
/// Slot s from `slot_sources[s]`, rest from `rest_src`.
Embedding mix_slots(const std::vector<const Embedding*>& slot_sources, const Embedding& rest_src);

/// Encoder/decoder pair as seen by the losses. Test doubles implement this directly.
class Generator {
public:
    virtual ~Generator() = default;
    virtual Embedding encode(const torch::Tensor& x) = 0;
    virtual torch::Tensor decode(Domain k, const Embedding& e) = 0;
    virtual bool split_embedding() const { return true; }
};

class Critic {
public:
    virtual ~Critic() = default;
    virtual torch::Tensor discriminate(Domain k, const torch::Tensor& x) = 0;
};

/// C_K(x, y) without memoization.
torch::Tensor combine(Generator& gen, Domain k, const torch::Tensor& x, const torch::Tensor& y);

class ResidualBlockImpl : public torch::nn::Module {
public:
    ResidualBlockImpl(int channels, bool instance_norm);
    torch::Tensor forward(const torch::Tensor& x);

private:
    torch::nn::Conv2d conv1_{nullptr}, conv2_{nullptr};
    bool norm_;
};
TORCH_MODULE(ResidualBlock);

class EncoderTrunkImpl : public torch::nn::Module {
public:
    EncoderTrunkImpl(const NetworkConfig& cfg, int out_dim);
    torch::Tensor forward(const torch::Tensor& x);

private:
    torch::nn::Sequential body_{nullptr};
    torch::nn::Linear fc_{nullptr};
};
TORCH_MODULE(EncoderTrunk);

class DecoderImpl : public torch::nn::Module {
public:
    explicit DecoderImpl(const NetworkConfig& cfg);
    torch::Tensor forward(const torch::Tensor& code);

private:
    int channels_, side_;
    torch::nn::Linear fc_{nullptr};
    torch::nn::Sequential body_{nullptr};
};
TORCH_MODULE(Decoder);

class DiscriminatorImpl : public torch::nn::Module {
public:
    explicit DiscriminatorImpl(const NetworkConfig& cfg);
    torch::Tensor forward(const torch::Tensor& x);

private:
    torch::nn::Sequential body_{nullptr};
};
TORCH_MODULE(Discriminator);

/// All trainable networks of one model.
class PuppetNetsImpl : public torch::nn::Module, public Generator, public Critic {
public:
    explicit PuppetNetsImpl(NetworkConfig cfg);

    const NetworkConfig& config() const { return cfg_; }

    Embedding encode(const torch::Tensor& x) override;
    torch::Tensor decode(Domain k, const Embedding& e) override;
    torch::Tensor discriminate(Domain k, const torch::Tensor& x) override;
    bool split_embedding() const override { return cfg_.split_embedding; }

    /// Encoder and decoder parameters (updated in the generator phase).
    std::vector<torch::Tensor> generator_parameters() const;
    /// Discriminator parameters (updated in the discriminator phase).
    std::vector<torch::Tensor> discriminator_parameters() const;
    void set_discriminators_trainable(bool on);

    torch::nn::Module& decoder_module(Domain k);

private:
    void check_image(const torch::Tensor& x) const;

    NetworkConfig cfg_;
    EncoderTrunk encoder_{nullptr};       // shared trunk, or the attribute trunk when not shared
    EncoderTrunk rest_encoder_{nullptr};  // only when shared_encoder == false
    Decoder decoder_a_{nullptr};
    Decoder decoder_b_{nullptr};  // aliases decoder_a_ when shared_decoder
    Discriminator disc_a_{nullptr};
    Discriminator disc_b_{nullptr};
};
TORCH_MODULE(PuppetNets);

/// Total trainable scalar count.
std::int64_t parameter_count(const torch::nn::Module& m);

/// [N, 1, S, S] float tensor from rasters.
torch::Tensor to_tensor(const std::vector<const Image*>& images);
torch::Tensor to_tensor(const std::vector<Image>& images);
/// Row `index` of an [N, 1, S, S] tensor as a raster.
Image to_image(const torch::Tensor& batch, std::int64_t index);

}  // namespace puppet
