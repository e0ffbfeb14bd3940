// SPDX-License-Identifier: Apache-2.0
#pragma once

// Evaluation protocol: paired (real input, synthetic reference, output)
// measurements, class preservation, correlation and divergence metrics,
// output variance across references, and the saturation sweep.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <torch/torch.h>

#include "puppetgan/classifier.hpp"
#include "puppetgan/config.hpp"
#include "puppetgan/nets.hpp"
#include "puppetgan/png.hpp"

namespace puppet {

/// Produces C_A(reference, real) for paired batches.
class Manipulator {
public:
    virtual ~Manipulator() = default;
    virtual torch::Tensor manipulate(const torch::Tensor& references, const torch::Tensor& reals) = 0;
};

class NetsManipulator : public Manipulator {
public:
    explicit NetsManipulator(PuppetNets nets, int chunk = 256);
    torch::Tensor manipulate(const torch::Tensor& references, const torch::Tensor& reals) override;

private:
    PuppetNets nets_;
    int chunk_;
};

/// Returns the real input unchanged.
class IdentityManipulator : public Manipulator {
public:
    torch::Tensor manipulate(const torch::Tensor&, const torch::Tensor& reals) override { return reals.clone(); }
};

/// Returns the synthetic reference unchanged.
class CopySyntheticManipulator : public Manipulator {
public:
    torch::Tensor manipulate(const torch::Tensor& refs, const torch::Tensor&) override { return refs.clone(); }
};

class FunctionManipulator : public Manipulator {
public:
    using Fn = std::function<torch::Tensor(const torch::Tensor&, const torch::Tensor&)>;
    explicit FunctionManipulator(Fn fn) : fn_(std::move(fn)) {}
    torch::Tensor manipulate(const torch::Tensor& refs, const torch::Tensor& reals) override { return fn_(refs, reals); }

private:
    Fn fn_;
};

/// Measured values of one attribute, paired by sample index.
struct AttributeSeries {
    std::string name;
    std::vector<double> values;
};

struct MetricsReport {
    std::string model;
    std::string attribute;
    double acc = 0.0;
    double r_attr_syn = 0.0;
    double r_rest_syn = 0.0;
    double v_rest = 0.0;
    double j_attr_syn = 0.0;
    double j_rest_syn = 0.0;
    double j_attr_gen = 0.0;
    double j_rest_gen = 0.0;

    std::map<std::string, double> r_rest_by_attribute;
    int attr_dim_k = 0;
    int bottleneck_total = 0;
    std::int64_t steps = 0;
    int pairs = 0;
    int dropped = 0;
    bool drop_warning = false;
    double classifier_holdout_accuracy = 0.0;

    static std::string csv_header();
    std::string csv_row() const;
    /// Throws SchemaError when a field is outside its documented range.
    void validate() const;
};

/// Fraction of matching predictions; throws ArgumentError on length mismatch or empty input.
double classifier_accuracy(const std::vector<int>& generated, const std::vector<int>& real_inputs);
double classifier_accuracy(const torch::Tensor& generated, const torch::Tensor& real_inputs, Classifier& classifier);

/// Mean over pixels of the population variance, across references, of C_A(ref_j, real).
double v_rest(Manipulator& model, const torch::Tensor& real_input, const torch::Tensor& references);

/// References sharing one AoI value; every other field drawn at random.
torch::Tensor references_sharing_aoi(const DomainSpec& synthetic, Attribute aoi, std::uint64_t seed, int count,
                                     std::optional<double> aoi_value = std::nullopt);

/// Paired evaluation inputs drawn with the eval seed.
struct EvaluationSet {
    torch::Tensor reals;       // [N, 1, S, S]
    torch::Tensor references;  // [N, 1, S, S]
};
EvaluationSet make_evaluation_set(const ExperimentConfig& cfg, const LabeledImages* archive);

struct EvaluationResult {
    MetricsReport report;
    std::vector<AttributeSeries> series;  // "<attr>_<real|synthetic|output>" for rotation and size
};

EvaluationResult evaluate(Manipulator& model, Classifier& classifier, const ExperimentConfig& cfg,
                          const LabeledImages* archive, const std::string& model_tag, std::int64_t steps);

struct SaturationPoint {
    double aoi_value = 0.0;
    bool in_training_range = false;
    double mean_response = 0.0;
    double min_pixel = 0.0;
    double max_pixel = 0.0;
};

struct SaturationReport {
    std::vector<SaturationPoint> points;
    bool outputs_in_range = true;
    bool monotone = true;            // non-decreasing within the tolerance
    double tolerance = 5.0;
    double in_range_max_response = 0.0;
    Canvas grid;  // rows = real inputs, columns = AoI values
};

SaturationReport saturation_probe(Manipulator& model, const ExperimentConfig& cfg, const LabeledImages* archive);

/// Grid with cell (i, j) = C_A(reference_j, real_i).
std::vector<std::vector<Image>> manipulation_grid(Manipulator& model, const torch::Tensor& reals,
                                                  const torch::Tensor& references);

}  // namespace puppet
