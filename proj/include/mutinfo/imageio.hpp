#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>

#include "mutinfo/image.hpp"

namespace mutinfo {

/// File could not be opened or read.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File content is not a decodable PNG or JPEG.
struct DecodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Decodes a PNG or JPEG file (sniffed by magic bytes, not extension),
/// converts to grayscale with BT.601 luma weights (round half up), and
/// bilinearly resizes to `size` when given. Alpha channels are dropped;
/// 16-bit samples keep their high byte.
GrayImage load_grayscale(const std::filesystem::path& path,
                         std::optional<TargetSize> size = std::nullopt);

}  // namespace mutinfo
