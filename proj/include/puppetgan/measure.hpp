// SPDX-License-Identifier: Apache-2.0
#pragma once

// Image-moment attribute measurements and the statistics used to compare them.
//
// Moments are taken over intensities shifted from [-1, 1] to [0, 1] so the
// background carries no mass. Axis convention: mu20 is the second central
// moment along rows (downwards), mu02 along columns (rightwards), mu11 their
// cross moment. With that convention
//     theta = 1/2 * atan2(2 mu11, mu20 - mu02)
// is the counter-clockwise tilt of the principal axis away from vertical:
// an upright bar measures 0, a horizontal line 90.

#include <span>
#include <vector>

#include "puppetgan/domains.hpp"
#include "puppetgan/image.hpp"

namespace puppet {

struct Moments {
    double m00 = 0.0;
    double row_mean = 0.0;
    double col_mean = 0.0;
    double mu20 = 0.0;
    double mu02 = 0.0;
    double mu11 = 0.0;
};

Moments image_moments(const Image& img);

/// Minimum ink mass (in pixels at full intensity) for an orientation to be defined.
inline constexpr double kMinOrientationMass = 0.5;

/// Degrees in (-90, 90]; throws UndefinedMeasurementError for empty or isotropic images.
double measure_rotation(const Image& img);
/// Radius of gyration in pixels; throws UndefinedMeasurementError for zero mass.
double measure_size(const Image& img);
/// Measurement of a moment-measurable attribute (rotation or size).
double measure_attribute(const Image& img, Attribute a);
bool is_measurable(Attribute a);

/// Product-moment correlation; needs >= 3 paired values with nonzero variance.
double pearson_r(std::span<const double> xs, std::span<const double> ys);
/// Pearson correlation of average ranks.
double spearman_r(std::span<const double> xs, std::span<const double> ys);

/// Grid resolution used when integrating the density estimates.
inline constexpr int kJsdGridPoints = 4097;

/// Scott's-rule bandwidth sigma * n^(-1/5) for a 1-D Gaussian KDE.
double scott_bandwidth(std::span<const double> samples);

/// Base-2 Jensen-Shannon divergence between Gaussian KDEs of two samples (>= 30 each).
/// Densities are evaluated on kJsdGridPoints points spanning both samples padded by
/// six bandwidths, renormalized with the trapezoid rule, then integrated.
double js_divergence(std::span<const double> samples_a, std::span<const double> samples_b);

}  // namespace puppet
