// SPDX-License-Identifier: Apache-2.0
#pragma once

// Supervised L1 constraints, least-squares adversarial terms and their weighted total.
//
// Every penalty is the mean absolute difference over pixels and batch. Losses
// are evaluated against a ForwardPass, which memoizes encodings, combinations
// and noisy copies of images so that terms sharing an intermediate image
// (e.g. C_A(a, a) in reconstruction and in the adversarial streams) reuse one
// forward evaluation.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include <torch/torch.h>

#include "puppetgan/nets.hpp"

namespace puppet {

struct LossWeights {
    double w_rec = 10.0;
    double w_dis = 10.0;
    double w_cyc = 10.0;
    double w_attr = 5.0;
    double w_rest = 3.0;
    double w_gan = 1.0;

    void validate() const;
    LossWeights scaled(double factor) const;
};

/// Scalar values of every term of one evaluation.
struct LossReport {
    double rec = 0.0;
    double dis = 0.0;
    double cyc = 0.0;
    double attr_cycle_1 = 0.0;
    double attr_cycle_2 = 0.0;
    double gan_generator = 0.0;
    double gan_discriminator = 0.0;
    double total = 0.0;

    static std::string csv_header();  // step,rec,dis,cyc,attr1,attr2,gan_g,gan_d,total
    std::string csv_row(std::int64_t step) const;
};

/// Differentiable terms; undefined tensors count as zero.
struct LossTerms {
    torch::Tensor rec, dis, cyc, attr1, attr2, gan_generator;
};

double total_loss(const LossWeights& w, const LossReport& components);
torch::Tensor total_loss(const LossWeights& w, const LossTerms& terms);

/// One training batch: individual real images `a`, demonstration triplets, and
/// the individual synthetic images `b` (the b3 column unless given separately).
struct Batch {
    torch::Tensor a;
    torch::Tensor b1, b2, b3;

    const torch::Tensor& b() const { return b3; }
    std::int64_t real_count() const { return a.defined() ? a.size(0) : 0; }
    std::int64_t triplet_count() const { return b3.defined() ? b3.size(0) : 0; }
};

struct TripletBatch {
    torch::Tensor b1, b2, b3;
};

/// clip(image + N(0, sigma^2), -1, 1) using a seeded generator.
torch::Tensor add_instance_noise(const torch::Tensor& image, double sigma, std::uint64_t seed);

/// Memoized forward evaluation over one batch.
class ForwardPass {
public:
    ForwardPass(Generator& gen, double noise_sigma = 0.0, std::uint64_t noise_seed = 0);

    Generator& generator() { return gen_; }

    const Embedding& embed(const torch::Tensor& x);
    /// Encodes several images in a single batched call and caches the pieces.
    void embed_all(const std::vector<torch::Tensor>& xs);

    /// C_K(x, y); when the generator does not split its code the result depends on x only.
    torch::Tensor combine(Domain k, const torch::Tensor& x, const torch::Tensor& y);
    /// Batched C_K over several (x, y) pairs sharing K.
    void combine_all(Domain k, const std::vector<std::pair<torch::Tensor, torch::Tensor>>& pairs);
    /// G_K with attribute slot s from slot_sources[s] and rest from rest_src.
    torch::Tensor combine_slots(Domain k, const std::vector<torch::Tensor>& slot_sources, const torch::Tensor& rest_src);

    /// Instance-noised copy of x (memoized; identity when sigma == 0). With
    /// stop_gradient the memoized copy is detached from the graph that produced x.
    torch::Tensor noisy(const torch::Tensor& x, bool stop_gradient = false);

    /// Every generated image, keyed by (K1, K2, K3), used by the adversarial terms.
    struct Stream {
        Domain source_x, source_y, target;
        torch::Tensor fake;
    };
    std::vector<Stream> adversarial_streams(const Batch& batch);

private:
    using Key = const void*;
    static Key key(const torch::Tensor& t) { return t.unsafeGetTensorImpl(); }

    Generator& gen_;
    double sigma_;
    std::uint64_t noise_seed_;
    std::uint64_t noise_calls_ = 0;
    std::unordered_map<Key, std::pair<torch::Tensor, Embedding>> embeddings_;
    std::map<std::tuple<int, Key, Key>, std::tuple<torch::Tensor, torch::Tensor, torch::Tensor>> combined_;
    std::map<std::pair<Key, bool>, std::pair<torch::Tensor, torch::Tensor>> noisy_;
};

/// (a) mean over both domains of |x - C_K(x, x)|.
torch::Tensor reconstruction_loss(ForwardPass& pass, const Batch& batch);
/// (b) mean |b3 - C_B(noisy(b1), noisy(b2))|.
torch::Tensor disentanglement_loss(ForwardPass& pass, const TripletBatch& triplets);
/// (c) |a - C_A(C_B(a,a), C_B(a,a))| plus the symmetric synthetic-side term.
torch::Tensor cycle_loss(ForwardPass& pass, const Batch& batch);
/// (d, first) |b3 - C_B(noisy(ã), noisy(b2))| with ã = C_A(b1, a); gradients flow through ã.
torch::Tensor attr_cycle_loss_1(ForwardPass& pass, const Batch& batch);
/// Multi-slot form of the first attribute cycle for the triplets of slot `slot`:
/// ã takes slot `slot` from b1 and everything else from a; the synthetic
/// decode takes slot `slot` from ã and everything else from b2.
torch::Tensor attr_cycle_loss_1_slot(ForwardPass& pass, const torch::Tensor& a, const TripletBatch& t, int slot);
/// (d, second) |a - C_A(stopgrad(noisy(b̃)), noisy(a))| with b̃ = C_B(a, b).
torch::Tensor attr_cycle_loss_2(ForwardPass& pass, const Batch& batch);

struct GanTerms {
    torch::Tensor generator;
    torch::Tensor discriminator;
};

/// Least-squares terms summed over the eight (K1, K2, K3) streams. The
/// discriminator term sees detached fakes.
GanTerms gan_losses(ForwardPass& pass, Critic& critic, const Batch& batch);
torch::Tensor gan_generator_loss(ForwardPass& pass, Critic& critic, const Batch& batch);
torch::Tensor gan_discriminator_loss(ForwardPass& pass, Critic& critic, const Batch& batch);

/// Sum over slots s of mean |b3^s - G_B(slot s from noisy(b1^s), everything else from noisy(b2^s))|.
torch::Tensor multi_attribute_disentanglement_loss(ForwardPass& pass, std::span<const TripletBatch> triplets_per_slot);

/// Which terms are active. Baseline mode drops dis/attr1/attr2.
struct LossSelection {
    bool disentanglement = true;
    bool attribute_cycles = true;
};

/// Every generator-side term on one batch. `report.gan_discriminator` is left at 0;
/// the trainer fills it in once the discriminator phase has evaluated it.
struct LossEvaluation {
    LossTerms terms;
    LossReport report;
    torch::Tensor total;
};

/// With two or more attribute slots, `slot_triplets` holds one triplet batch per slot
/// (slot 0 normally being the batch's own triplets) and the multi-slot forms of the
/// disentanglement and first attribute-cycle terms are used.
LossEvaluation evaluate_losses(ForwardPass& pass, Critic& critic, const Batch& batch, const LossWeights& weights,
                               const LossSelection& select, std::span<const TripletBatch> slot_triplets = {});

}  // namespace puppet
