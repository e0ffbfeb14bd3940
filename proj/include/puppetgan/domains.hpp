// SPDX-License-Identifier: Apache-2.0
#pragma once

// Procedural digit domains with fully known generative parameters.
//
// Glyphs are seven-segment skeletons rasterized as anti-aliased strokes. The
// synthetic style draws the skeleton verbatim; the real-proxy style perturbs
// control points, bows segments, varies stroke width per segment and applies a
// smooth displacement warp, so the two domains differ visually while sharing
// the same controllable attributes.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "puppetgan/image.hpp"

namespace puppet {

enum class Attribute { Class, Rotation, Size, Stroke, Offset };

Attribute parse_attribute(std::string_view name);
std::string_view attribute_name(Attribute a);

struct AttributeVector {
    int class_id = 0;
    double rotation_deg = 0.0;   // counter-clockwise about the image center
    double size_scale = 1.0;     // multiplier on the base glyph height
    double stroke_width = 2.0;   // pixels
    std::array<double, 2> offset_xy{0.0, 0.0};  // pixels, x to the right, y downwards

    bool operator==(const AttributeVector&) const = default;
};

/// Exact equality of a single attribute field.
bool same_attribute(const AttributeVector& x, const AttributeVector& y, Attribute a);
/// Exact equality of every field except `a`.
bool same_except(const AttributeVector& x, const AttributeVector& y, Attribute a);
/// Overwrite field `a` of `dst` with the value stored in `src`.
void copy_attribute(AttributeVector& dst, const AttributeVector& src, Attribute a);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool contains(double v) const { return v >= lo && v <= hi; }
    bool operator==(const Interval&) const = default;
};

enum class DomainStyle { SyntheticSans, RealProxyHandwritten, ExternalIdx };

std::string_view style_name(DomainStyle s);
DomainStyle parse_style(std::string_view name);

struct AttributeRanges {
    std::array<int, 2> class_id{0, 9};
    Interval rotation_deg{-40.0, 40.0};
    Interval size_scale{0.6, 1.3};
    Interval stroke_width{1.5, 3.0};
    Interval offset_x{-2.0, 2.0};
    Interval offset_y{-2.0, 2.0};

    bool operator==(const AttributeRanges&) const = default;
};

/// Perturbation amplitudes of the real-proxy style. All zero reproduces the synthetic render.
struct Perturbation {
    double point_jitter = 0.035;   // std of skeleton control points, glyph-height units
    double bow = 0.06;             // std of segment bowing, glyph-height units
    double stroke_noise = 0.2;     // std of log stroke-width multiplier per segment
    double warp_amplitude = 0.7;   // pixels
    double warp_wavelength = 18.0; // pixels

    bool operator==(const Perturbation&) const = default;
};

struct DomainSpec {
    std::string name = "synthetic";
    DomainStyle style = DomainStyle::SyntheticSans;
    AttributeRanges ranges;
    int image_size = 32;
    Perturbation perturbation;

    /// Throws ConfigError when ranges are empty or image_size < 16.
    void validate() const;
    bool in_range(const AttributeVector& p) const;
};

DomainSpec default_synthetic_domain(int image_size = 32);
DomainSpec default_real_proxy_domain(int image_size = 32);

/// Distribution-shift presets: "matched", "smaller_synth", "unscaled_real".
void apply_shift_preset(std::string_view preset, DomainSpec& synthetic, DomainSpec& real);

struct GlyphImage {
    Image pixels;
    std::optional<AttributeVector> source_params;
    std::optional<int> label;  // set for external archives that carry labels
};

/// Deterministic in (params, spec, seed). The seed only drives real-proxy perturbations.
GlyphImage render_glyph(const AttributeVector& params, const DomainSpec& spec, std::uint64_t seed);

/// Uniform draw of every field from the spec ranges.
AttributeVector sample_attributes(std::mt19937_64& rng, const DomainSpec& spec);

struct SyntheticTriplet {
    GlyphImage b1;
    GlyphImage b2;
    GlyphImage b3;
    Attribute aoi = Attribute::Rotation;
};

/// (b1, b3) share the attribute of interest; (b2, b3) share everything else.
SyntheticTriplet sample_triplet(std::uint64_t rng_seed, const DomainSpec& spec, Attribute aoi);
SyntheticTriplet sample_triplet(std::uint64_t rng_seed, const DomainSpec& spec, std::string_view aoi_name);

/// Throws ContractError unless the triplet satisfies the sharing contract exactly.
void check_triplet_contract(const SyntheticTriplet& t);

struct LabeledImages;

/// Draws individual images of the real domain.
class RealSampler {
public:
    explicit RealSampler(DomainSpec spec);
    RealSampler(DomainSpec spec, const LabeledImages& dataset);

    const DomainSpec& spec() const { return spec_; }
    GlyphImage sample(std::uint64_t rng_seed) const;
    /// Index drawn for an external archive; exposed for the uniformity check.
    std::size_t sample_index(std::uint64_t rng_seed) const;

private:
    DomainSpec spec_;
    const LabeledImages* dataset_ = nullptr;
};

GlyphImage sample_real(std::uint64_t rng_seed, const DomainSpec& spec, const LabeledImages* dataset = nullptr);

/// SplitMix64 mixing used to derive independent per-item seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace puppet
