#include "mutinfo/probability.hpp"

#include <omp.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mutinfo {

namespace {

// Below this pixel count the per-thread scratch outweighs the counting work.
constexpr std::size_t kParallelPixelThreshold = std::size_t{1} << 20;

constexpr std::size_t kJointBins = static_cast<std::size_t>(kLevels) * kLevels;

std::string shape_of(const GrayImage& img) {
    return std::to_string(img.width()) + "x" + std::to_string(img.height());
}

}  // namespace

IntensityHistogram marginal_histogram(const GrayImage& img) {
    IntensityHistogram hist;
    const auto px = img.pixels();
    const std::int64_t n = static_cast<std::int64_t>(px.size());

    if (px.size() < kParallelPixelThreshold) {
        for (std::uint8_t v : px) {
            ++hist.counts[v];
        }
    } else {
        // Per-thread counters merged per bin; integer sums are
        // order-independent, so this matches sequential counting exactly.
        std::vector<std::array<std::uint64_t, kLevels>> locals;
#pragma omp parallel
        {
#pragma omp single
            locals.assign(static_cast<std::size_t>(omp_get_num_threads()), {});
            auto& local = locals[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
            for (std::int64_t i = 0; i < n; ++i) {
                ++local[px[i]];
            }
#pragma omp for schedule(static)
            for (int v = 0; v < kLevels; ++v) {
                std::uint64_t sum = 0;
                for (const auto& local_counts : locals) {
                    sum += local_counts[v];
                }
                hist.counts[v] = sum;
            }
        }
    }
    hist.total = px.size();
    return hist;
}

ProbDist to_pdf(const IntensityHistogram& hist) {
    ProbDist pdf;
    const double total = static_cast<double>(hist.total);
    for (int v = 0; v < kLevels; ++v) {
        pdf.probs[v] = static_cast<double>(hist.counts[v]) / total;
    }
    return pdf;
}

JointHistogram joint_histogram(const GrayImage& a, const GrayImage& b) {
    if (!a.same_shape(b)) {
        throw std::invalid_argument("joint histogram needs equal shapes, got " + shape_of(a) +
                                    " and " + shape_of(b));
    }
    JointHistogram jh;
    jh.counts.assign(kJointBins, 0);
    jh.total = a.pixel_count();

    const auto pa = a.pixels();
    const auto pb = b.pixels();
    const std::int64_t n = static_cast<std::int64_t>(pa.size());

    if (pa.size() < kParallelPixelThreshold) {
        for (std::int64_t i = 0; i < n; ++i) {
            ++jh.counts[static_cast<std::size_t>(pa[i]) * kLevels + pb[i]];
        }
        return jh;
    }

    std::vector<std::vector<std::uint64_t>> locals;
#pragma omp parallel
    {
#pragma omp single
        locals.resize(static_cast<std::size_t>(omp_get_num_threads()));
        auto& local = locals[static_cast<std::size_t>(omp_get_thread_num())];
        local.assign(kJointBins, 0);
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            ++local[static_cast<std::size_t>(pa[i]) * kLevels + pb[i]];
        }
#pragma omp for schedule(static)
        for (std::int64_t bin = 0; bin < static_cast<std::int64_t>(kJointBins); ++bin) {
            std::uint64_t sum = 0;
            for (const auto& local_counts : locals) {
                sum += local_counts[bin];
            }
            jh.counts[bin] = sum;
        }
    }
    return jh;
}

JointProbDist to_joint_pdf(const JointHistogram& jh) {
    JointProbDist pdf;
    pdf.probs.resize(kJointBins);
    const double total = static_cast<double>(jh.total);
    const std::int64_t bins = static_cast<std::int64_t>(kJointBins);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < bins; ++i) {
        pdf.probs[i] = static_cast<double>(jh.counts[i]) / total;
    }
    return pdf;
}

ProbDist marginal_a(const JointProbDist& joint) {
    ProbDist pdf;
    for (int u = 0; u < kLevels; ++u) {
        double sum = 0.0;
        const double* row = joint.probs.data() + static_cast<std::size_t>(u) * kLevels;
        for (int v = 0; v < kLevels; ++v) {
            sum += row[v];
        }
        pdf.probs[u] = sum;
    }
    return pdf;
}

ProbDist marginal_b(const JointProbDist& joint) {
    ProbDist pdf;
    // Fixed row order keeps each column sum deterministic.
    for (int u = 0; u < kLevels; ++u) {
        const double* row = joint.probs.data() + static_cast<std::size_t>(u) * kLevels;
        for (int v = 0; v < kLevels; ++v) {
            pdf.probs[v] += row[v];
        }
    }
    return pdf;
}

}  // namespace mutinfo
