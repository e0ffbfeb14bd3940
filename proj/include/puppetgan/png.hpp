// SPDX-License-Identifier: Apache-2.0
#pragma once

// 8-bit grayscale PNG input/output and image mosaics.

#include <filesystem>
#include <vector>

#include "puppetgan/image.hpp"

namespace puppet {

/// Rectangular grayscale raster in [-1, 1], row-major.
struct Canvas {
    int width = 0;
    int height = 0;
    std::vector<float> px;

    float at(int row, int col) const { return px[static_cast<std::size_t>(row) * width + col]; }
};

void write_png(const std::filesystem::path& path, const Canvas& canvas);
void write_png(const std::filesystem::path& path, const Image& img);
/// Reads any PNG, converting to 8-bit grayscale and then to [-1, 1].
Image read_png(const std::filesystem::path& path);

/// Row-major grid of equally sized tiles separated by `gap` pixels of background (-1).
Canvas mosaic(const std::vector<std::vector<Image>>& rows, int gap = 1);

}  // namespace puppet
