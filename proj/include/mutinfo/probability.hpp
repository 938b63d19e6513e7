#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mutinfo/image.hpp"

namespace mutinfo {

/// One bin per 8-bit intensity level.
inline constexpr int kLevels = 256;

/// Per-level pixel counts of one image. sum(counts) == total >= 1.
struct IntensityHistogram {
    std::array<std::uint64_t, kLevels> counts{};
    std::uint64_t total = 0;
};

/// Marginal probability mass function over the 256 intensity levels.
struct ProbDist {
    std::array<double, kLevels> probs{};
};

/// 256x256 co-occurrence counts, row-major: counts[a * 256 + b] is the
/// number of pixel positions where the first image has value a and the
/// second has value b.
struct JointHistogram {
    std::vector<std::uint64_t> counts;  // kLevels * kLevels
    std::uint64_t total = 0;

    std::uint64_t at(int a, int b) const {
        return counts[static_cast<std::size_t>(a) * kLevels + b];
    }
};

/// Joint probability mass function over intensity pairs.
struct JointProbDist {
    std::vector<double> probs;  // kLevels * kLevels, row-major

    double at(int a, int b) const {
        return probs[static_cast<std::size_t>(a) * kLevels + b];
    }
};

IntensityHistogram marginal_histogram(const GrayImage& img);

ProbDist to_pdf(const IntensityHistogram& hist);

/// Both images must share dimensions; the pipeline's resize step is the
/// remedy for mismatched inputs. Accumulation is parallelized for large
/// images and is bit-identical to sequential counting.
JointHistogram joint_histogram(const GrayImage& a, const GrayImage& b);

JointProbDist to_joint_pdf(const JointHistogram& jh);

/// Marginal of the first image (sums over the second axis).
ProbDist marginal_a(const JointProbDist& joint);
/// Marginal of the second image (sums over the first axis).
ProbDist marginal_b(const JointProbDist& joint);

}  // namespace mutinfo
