#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mutinfo {

/// Requested output dimensions for resizing; both sides must be >= 1.
struct TargetSize {
    int width = 0;
    int height = 0;

    friend bool operator==(const TargetSize&, const TargetSize&) = default;
};

/// Immutable 8-bit grayscale image, pixels stored row-major.
class GrayImage {
public:
    GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

    /// Constant image of the given value.
    static GrayImage filled(int width, int height, std::uint8_t value);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t pixel_count() const { return pixels_.size(); }
    std::span<const std::uint8_t> pixels() const { return pixels_; }

    std::uint8_t at(int x, int y) const {
        return pixels_[static_cast<std::size_t>(y) * width_ + x];
    }

    bool same_shape(const GrayImage& other) const {
        return width_ == other.width_ && height_ == other.height_;
    }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> pixels_;
};

/// Banded test image: each listed level fills (width*height)/levels.size()
/// consecutive row-major pixels, so the marginal distribution is exactly
/// uniform over the listed levels. Levels must be distinct and the pixel
/// count divisible by their number.
GrayImage synth_uniform_levels(std::span<const std::uint8_t> levels, TargetSize size);

namespace detail {
void require_valid_size(TargetSize size);

/// "x.5" rounds up; inputs are never negative in this codebase.
inline int round_half_up(double v) {
    return static_cast<int>(v + 0.5);
}
}  // namespace detail

}  // namespace mutinfo
