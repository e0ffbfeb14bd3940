// SPDX-License-Identifier: Apache-2.0
#pragma once

// IDX archives: big-endian, magic 0x000008NN (unsigned byte payload, NN dims),
// one 32-bit big-endian size per dimension, then the raw payload.

#include <cstdint>
#include <filesystem>
#include <vector>

#include "puppetgan/image.hpp"

namespace puppet {

inline constexpr std::uint32_t kIdxImageMagic = 0x00000803;
inline constexpr std::uint32_t kIdxLabelMagic = 0x00000801;

struct IdxArray {
    std::vector<std::uint32_t> dims;
    std::vector<std::uint8_t> data;

    std::uint32_t magic() const { return 0x00000800u | static_cast<std::uint32_t>(dims.size()); }
};

/// Reads an unsigned-byte IDX file; throws FormatError naming the file and byte offset.
IdxArray read_idx(const std::filesystem::path& path);
void write_idx(const std::filesystem::path& path, const IdxArray& array);

struct LabeledImages {
    std::vector<Image> images;
    std::vector<int> labels;
};

/// Loads an image/label archive pair, rescales to `image_size` and maps bytes into [-1, 1].
LabeledImages load_idx(const std::filesystem::path& images_path, const std::filesystem::path& labels_path,
                       int image_size);

/// Quantizes images to 8 bits and writes the pair of archives.
void save_idx(const std::filesystem::path& images_path, const std::filesystem::path& labels_path,
              const LabeledImages& set);

}  // namespace puppet
