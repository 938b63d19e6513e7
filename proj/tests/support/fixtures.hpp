#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "mutinfo/image.hpp"

namespace fixtures {

inline mutinfo::GrayImage noise(int width, int height, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<std::uint8_t> px(static_cast<std::size_t>(width) * height);
    for (auto& p : px) {
        p = static_cast<std::uint8_t>(rng() & 0xFF);
    }
    return mutinfo::GrayImage(width, height, std::move(px));
}

inline mutinfo::GrayImage horizontal_gradient(int width, int height) {
    std::vector<std::uint8_t> px(static_cast<std::size_t>(width) * height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            px[static_cast<std::size_t>(y) * width + x] =
                static_cast<std::uint8_t>(width > 1 ? x * 255 / (width - 1) : 0);
        }
    }
    return mutinfo::GrayImage(width, height, std::move(px));
}

inline mutinfo::GrayImage vertical_gradient(int width, int height) {
    std::vector<std::uint8_t> px(static_cast<std::size_t>(width) * height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            px[static_cast<std::size_t>(y) * width + x] =
                static_cast<std::uint8_t>(height > 1 ? y * 255 / (height - 1) : 0);
        }
    }
    return mutinfo::GrayImage(width, height, std::move(px));
}

inline mutinfo::GrayImage radial_blob(int width, int height) {
    std::vector<std::uint8_t> px(static_cast<std::size_t>(width) * height);
    const double cx = (width - 1) / 2.0;
    const double cy = (height - 1) / 2.0;
    const double reach = std::sqrt(cx * cx + cy * cy);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double d = std::sqrt((x - cx) * (x - cx) + (y - cy) * (y - cy));
            const double v = 255.0 * (1.0 - (reach > 0 ? d / reach : 0.0));
            px[static_cast<std::size_t>(y) * width + x] =
                static_cast<std::uint8_t>(std::lround(v));
        }
    }
    return mutinfo::GrayImage(width, height, std::move(px));
}

inline mutinfo::GrayImage stripes(int width, int height, int period) {
    std::vector<std::uint8_t> px(static_cast<std::size_t>(width) * height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            px[static_cast<std::size_t>(y) * width + x] = (x / period) % 2 ? 255 : 0;
        }
    }
    return mutinfo::GrayImage(width, height, std::move(px));
}

}  // namespace fixtures
