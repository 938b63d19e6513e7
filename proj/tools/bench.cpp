#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mutinfo/matrix.hpp"
#include "mutinfo/metrics.hpp"
#include "mutinfo/probability.hpp"
#include "mutinfo/reference.hpp"

using namespace mutinfo;

namespace {

GrayImage noise_image(int width, int height, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<std::uint8_t> px(static_cast<std::size_t>(width) * height);
    for (auto& p : px) {
        p = static_cast<std::uint8_t>(rng() & 0xFF);
    }
    return GrayImage(width, height, std::move(px));
}

template <typename F>
double time_ms(F&& fn, int repeats) {
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i) {
        fn();
    }
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / repeats;
}

bool report(const char* name, double serial_ms, double parallel_ms, bool agree) {
    std::printf("%-24s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms, agree ? "agree" : "MISMATCH");
    return agree;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run serially\n");
#endif

    const GrayImage a = noise_image(2048, 2048, 1);
    const GrayImage b = noise_image(2048, 2048, 2);
    bool ok = true;

    {
        JointHistogram hs, hp;
        const double ts = time_ms([&] { hs = ref::joint_histogram(a, b); }, 3);
        const double tp = time_ms([&] { hp = joint_histogram(a, b); }, 3);
        ok &= report("joint histogram", ts, tp, hs.counts == hp.counts && hs.total == hp.total);
    }

    {
        double ms = 0.0, mp = 0.0;
        const double ts = time_ms([&] { ms = ref::mutual_information(a, b); }, 3);
        const double tp = time_ms([&] { mp = mutual_information(a, b).value; }, 3);
        ok &= report("mutual information", ts, tp, std::fabs(ms - mp) <= 1e-12);
    }

    {
        std::vector<LabeledImage> images;
        for (int i = 0; i < 8; ++i) {
            images.push_back({"img" + std::to_string(i),
                              noise_image(512, 512, static_cast<std::uint32_t>(100 + i))});
        }
        MetricMatrix s, p;
        const double ts =
            time_ms([&] { s = ref::pairwise_matrix(images, MetricKind::MutualInformation); }, 1);
        const double tp =
            time_ms([&] { p = pairwise_matrix(images, MetricKind::MutualInformation); }, 1);
        bool agree = s.labels == p.labels && s.values.size() == p.values.size();
        for (std::size_t i = 0; agree && i < s.values.size(); ++i) {
            agree = std::fabs(s.values[i] - p.values[i]) <= 1e-12;
        }
        ok &= report("pairwise MI matrix 8x8", ts, tp, agree);
    }

    if (!ok) {
        std::printf("benchmark detected disagreement between serial and parallel paths\n");
        return 1;
    }
    return 0;
}
