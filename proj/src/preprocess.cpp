#include "mutinfo/preprocess.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>

namespace mutinfo {

namespace {

constexpr std::size_t kParallelPixelThreshold = std::size_t{1} << 20;

}  // namespace

GrayImage resize(const GrayImage& img, TargetSize size) {
    detail::require_valid_size(size);
    if (size.width == img.width() && size.height == img.height()) {
        return img;
    }

    const int src_w = img.width();
    const int src_h = img.height();
    const double scale_x = static_cast<double>(src_w) / size.width;
    const double scale_y = static_cast<double>(src_h) / size.height;
    const auto src = img.pixels();

    std::vector<std::uint8_t> out(static_cast<std::size_t>(size.width) * size.height);
    const bool big = out.size() >= kParallelPixelThreshold;

#pragma omp parallel for schedule(static) if (big)
    for (int oy = 0; oy < size.height; ++oy) {
        double fy = (oy + 0.5) * scale_y - 0.5;
        fy = std::clamp(fy, 0.0, static_cast<double>(src_h - 1));
        const int y0 = static_cast<int>(fy);
        const int y1 = std::min(y0 + 1, src_h - 1);
        const double dy = fy - y0;

        for (int ox = 0; ox < size.width; ++ox) {
            double fx = (ox + 0.5) * scale_x - 0.5;
            fx = std::clamp(fx, 0.0, static_cast<double>(src_w - 1));
            const int x0 = static_cast<int>(fx);
            const int x1 = std::min(x0 + 1, src_w - 1);
            const double dx = fx - x0;

            const double p00 = src[static_cast<std::size_t>(y0) * src_w + x0];
            const double p10 = src[static_cast<std::size_t>(y0) * src_w + x1];
            const double p01 = src[static_cast<std::size_t>(y1) * src_w + x0];
            const double p11 = src[static_cast<std::size_t>(y1) * src_w + x1];

            // Lerp form keeps constants and grid-aligned samples exact.
            const double top = p00 + dx * (p10 - p00);
            const double bottom = p01 + dx * (p11 - p01);
            const double v = top + dy * (bottom - top);

            out[static_cast<std::size_t>(oy) * size.width + ox] =
                static_cast<std::uint8_t>(std::clamp(detail::round_half_up(v), 0, 255));
        }
    }
    return GrayImage(size.width, size.height, std::move(out));
}

GrayImage normalize_intensity(const GrayImage& img) {
    const auto src = img.pixels();
    const auto [lo_it, hi_it] = std::minmax_element(src.begin(), src.end());
    const int lo = *lo_it;
    const int hi = *hi_it;
    if (lo == hi) {
        return img;  // degenerate range, identity
    }

    // 256-entry LUT; the stretch depends only on the pixel value. Dividing
    // last keeps exact midpoints (e.g. 127.5) exact before rounding.
    std::array<std::uint8_t, 256> lut{};
    for (int v = lo; v <= hi; ++v) {
        const double stretched = (v - lo) * 255.0 / (hi - lo);
        lut[v] = static_cast<std::uint8_t>(std::clamp(detail::round_half_up(stretched), 0, 255));
    }

    std::vector<std::uint8_t> out(src.size());
    const bool big = out.size() >= kParallelPixelThreshold;
    const std::int64_t n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static) if (big)
    for (std::int64_t i = 0; i < n; ++i) {
        out[i] = lut[src[i]];
    }
    return GrayImage(img.width(), img.height(), std::move(out));
}

}  // namespace mutinfo
