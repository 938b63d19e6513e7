#include "mutinfo/image.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

namespace mutinfo {

namespace detail {

void require_valid_size(TargetSize size) {
    if (size.width < 1 || size.height < 1) {
        throw std::invalid_argument("image dimensions must be >= 1, got " +
                                    std::to_string(size.width) + "x" +
                                    std::to_string(size.height));
    }
}

}  // namespace detail

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    detail::require_valid_size({width, height});
    const auto expected = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (pixels_.size() != expected) {
        throw std::invalid_argument("pixel buffer has " + std::to_string(pixels_.size()) +
                                    " values, expected " + std::to_string(expected) + " for " +
                                    std::to_string(width) + "x" + std::to_string(height));
    }
}

GrayImage GrayImage::filled(int width, int height, std::uint8_t value) {
    detail::require_valid_size({width, height});
    return GrayImage(width, height,
                     std::vector<std::uint8_t>(
                         static_cast<std::size_t>(width) * static_cast<std::size_t>(height), value));
}

GrayImage synth_uniform_levels(std::span<const std::uint8_t> levels, TargetSize size) {
    detail::require_valid_size(size);
    if (levels.empty() || levels.size() > 256) {
        throw std::invalid_argument("level list must contain 1..256 values, got " +
                                    std::to_string(levels.size()));
    }
    std::unordered_set<int> seen;
    for (std::uint8_t v : levels) {
        if (!seen.insert(v).second) {
            throw std::invalid_argument("level list contains duplicate value " + std::to_string(v));
        }
    }
    const auto total = static_cast<std::size_t>(size.width) * static_cast<std::size_t>(size.height);
    if (total % levels.size() != 0) {
        throw std::invalid_argument("pixel count " + std::to_string(total) +
                                    " is not divisible by " + std::to_string(levels.size()) +
                                    " levels");
    }
    const std::size_t band = total / levels.size();
    std::vector<std::uint8_t> pixels(total);
    for (std::size_t i = 0; i < total; ++i) {
        pixels[i] = levels[i / band];
    }
    return GrayImage(size.width, size.height, std::move(pixels));
}

}  // namespace mutinfo
