#include "mutinfo/metrics.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace mutinfo {

namespace {

constexpr std::size_t kParallelPixelThreshold = std::size_t{1} << 20;

// Summation dips this far below zero on near-independent inputs.
constexpr double kNegativeEpsilon = 1e-12;

double clamp_negative_noise(double v) {
    return (v < 0.0 && v > -kNegativeEpsilon) ? 0.0 : v;
}

// Partial sums per row of the 256x256 joint grid. Each row is summed
// left to right by a single worker and the row partials are reduced in
// fixed order, so the result does not depend on the thread count.
template <typename RowTerm>
double row_partitioned_sum(RowTerm&& row_term) {
    std::array<double, kLevels> partial{};
#pragma omp parallel for schedule(static)
    for (int u = 0; u < kLevels; ++u) {
        partial[u] = row_term(u);
    }
    double sum = 0.0;
    for (int u = 0; u < kLevels; ++u) {
        sum += partial[u];
    }
    return sum;
}

}  // namespace

Bits entropy(const ProbDist& p) {
    double h = 0.0;
    for (int v = 0; v < kLevels; ++v) {
        const double pv = p.probs[v];
        if (pv > 0.0) {
            h -= pv * std::log2(pv);
        }
    }
    return {h};
}

Bits entropy(const GrayImage& img) {
    return entropy(to_pdf(marginal_histogram(img)));
}

Bits joint_entropy(const JointProbDist& j) {
    const double h = row_partitioned_sum([&](int u) {
        const double* row = j.probs.data() + static_cast<std::size_t>(u) * kLevels;
        double s = 0.0;
        for (int v = 0; v < kLevels; ++v) {
            if (row[v] > 0.0) {
                s -= row[v] * std::log2(row[v]);
            }
        }
        return s;
    });
    return {h};
}

Bits conditional_entropy(const JointProbDist& j, Var given) {
    const ProbDist cond = given == Var::B ? marginal_b(j) : marginal_a(j);
    const double h = joint_entropy(j).value - entropy(cond).value;
    return {clamp_negative_noise(h)};
}

Bits mutual_information(const JointProbDist& j) {
    const ProbDist pa = marginal_a(j);
    const ProbDist pb = marginal_b(j);

    const double mi = row_partitioned_sum([&](int u) {
        const double pu = pa.probs[u];
        if (pu <= 0.0) {
            return 0.0;
        }
        const double* row = j.probs.data() + static_cast<std::size_t>(u) * kLevels;
        double s = 0.0;
        for (int v = 0; v < kLevels; ++v) {
            const double puv = row[v];
            // Marginal zeros cannot carry joint mass, but keep the guard.
            if (puv > 0.0 && pb.probs[v] > 0.0) {
                s += puv * std::log2(puv / (pu * pb.probs[v]));
            }
        }
        return s;
    });
    return {clamp_negative_noise(mi)};
}

Bits mutual_information(const GrayImage& a, const GrayImage& b) {
    return mutual_information(to_joint_pdf(joint_histogram(a, b)));
}

GrayImage merge_images(const GrayImage& a, const GrayImage& b) {
    if (!a.same_shape(b)) {
        throw std::invalid_argument("merge needs equal shapes, got " + std::to_string(a.width()) +
                                    "x" + std::to_string(a.height()) + " and " +
                                    std::to_string(b.width()) + "x" + std::to_string(b.height()));
    }
    const auto pa = a.pixels();
    const auto pb = b.pixels();
    std::vector<std::uint8_t> out(pa.size());
    const std::int64_t n = static_cast<std::int64_t>(out.size());
    const bool big = out.size() >= kParallelPixelThreshold;
#pragma omp parallel for schedule(static) if (big)
    for (std::int64_t i = 0; i < n; ++i) {
        // Integer mean rounded half up.
        out[i] = static_cast<std::uint8_t>((static_cast<unsigned>(pa[i]) + pb[i] + 1) / 2);
    }
    return GrayImage(a.width(), a.height(), std::move(out));
}

Bits information_gain(const GrayImage& a, const GrayImage& b) {
    return {entropy(a).value - entropy(merge_images(a, b)).value};
}

}  // namespace mutinfo
