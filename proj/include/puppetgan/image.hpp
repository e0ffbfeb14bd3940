// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace puppet {

/// Square single-channel raster. Model-facing pixel values live in [-1, 1].
class Image {
public:
    Image() = default;
    explicit Image(int size, float fill = -1.0f) : size_(size), px_(static_cast<std::size_t>(size) * size, fill) {}
    Image(int size, std::vector<float> pixels);

    int size() const noexcept { return size_; }
    std::size_t count() const noexcept { return px_.size(); }
    bool empty() const noexcept { return px_.empty(); }

    float& at(int row, int col) { return px_[static_cast<std::size_t>(row) * size_ + col]; }
    float at(int row, int col) const { return px_[static_cast<std::size_t>(row) * size_ + col]; }

    std::span<float> pixels() noexcept { return px_; }
    std::span<const float> pixels() const noexcept { return px_; }

    bool operator==(const Image&) const = default;

private:
    int size_ = 0;
    std::vector<float> px_;
};

/// Linear byte map: 0 -> -1, 255 -> +1.
inline float byte_to_unit(std::uint8_t b) { return static_cast<float>(b) / 127.5f - 1.0f; }

/// Inverse of byte_to_unit with clamping and rounding to nearest.
std::uint8_t unit_to_byte(float v);

/// Bilinear resample to a new square size (pixel-center aligned).
Image resample(const Image& src, int new_size);

}  // namespace puppet
