#pragma once

#include "mutinfo/image.hpp"

namespace mutinfo {

/// Bilinear resize with center-aligned sampling and edge clamping.
/// Resizing to the source dimensions returns a pixel-identical image.
GrayImage resize(const GrayImage& img, TargetSize size);

/// Linear min-max stretch to [0, 255], rounded half up. A constant image
/// is returned unchanged. Idempotent and monotone.
GrayImage normalize_intensity(const GrayImage& img);

}  // namespace mutinfo
