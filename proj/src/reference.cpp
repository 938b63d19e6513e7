#include "mutinfo/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace mutinfo::ref {

IntensityHistogram marginal_histogram(const GrayImage& img) {
    IntensityHistogram hist;
    for (std::uint8_t v : img.pixels()) {
        ++hist.counts[v];
    }
    hist.total = img.pixel_count();
    return hist;
}

JointHistogram joint_histogram(const GrayImage& a, const GrayImage& b) {
    if (!a.same_shape(b)) {
        throw std::invalid_argument("joint histogram needs equal shapes");
    }
    JointHistogram jh;
    jh.counts.assign(static_cast<std::size_t>(kLevels) * kLevels, 0);
    jh.total = a.pixel_count();
    const auto pa = a.pixels();
    const auto pb = b.pixels();
    for (std::size_t i = 0; i < pa.size(); ++i) {
        ++jh.counts[static_cast<std::size_t>(pa[i]) * kLevels + pb[i]];
    }
    return jh;
}

double entropy(const ProbDist& p) {
    double h = 0.0;
    for (int v = 0; v < kLevels; ++v) {
        if (p.probs[v] > 0.0) {
            h -= p.probs[v] * std::log2(p.probs[v]);
        }
    }
    return h;
}

double entropy(const GrayImage& img) {
    return ref::entropy(to_pdf(ref::marginal_histogram(img)));
}

double joint_entropy(const JointProbDist& j) {
    double h = 0.0;
    for (const double p : j.probs) {
        if (p > 0.0) {
            h -= p * std::log2(p);
        }
    }
    return h;
}

double mutual_information(const GrayImage& a, const GrayImage& b) {
    const JointHistogram jh = ref::joint_histogram(a, b);
    const double total = static_cast<double>(jh.total);

    double pa[kLevels] = {};
    double pb[kLevels] = {};
    for (int u = 0; u < kLevels; ++u) {
        for (int v = 0; v < kLevels; ++v) {
            const double p = static_cast<double>(jh.at(u, v)) / total;
            pa[u] += p;
            pb[v] += p;
        }
    }

    double mi = 0.0;
    for (int u = 0; u < kLevels; ++u) {
        for (int v = 0; v < kLevels; ++v) {
            const double puv = static_cast<double>(jh.at(u, v)) / total;
            if (puv > 0.0 && pa[u] > 0.0 && pb[v] > 0.0) {
                mi += puv * std::log2(puv / (pa[u] * pb[v]));
            }
        }
    }
    return mi;
}

double conditional_entropy(const JointProbDist& j, Var given) {
    // sum_y p(y) H(X|Y=y), expanded without the chain rule.
    double h = 0.0;
    for (int y = 0; y < kLevels; ++y) {
        double py = 0.0;
        for (int x = 0; x < kLevels; ++x) {
            py += given == Var::B ? j.at(x, y) : j.at(y, x);
        }
        if (py <= 0.0) {
            continue;
        }
        double hy = 0.0;
        for (int x = 0; x < kLevels; ++x) {
            const double pxy = given == Var::B ? j.at(x, y) : j.at(y, x);
            if (pxy > 0.0) {
                const double cond = pxy / py;
                hy -= cond * std::log2(cond);
            }
        }
        h += py * hy;
    }
    return h;
}

GrayImage merge_images(const GrayImage& a, const GrayImage& b) {
    if (!a.same_shape(b)) {
        throw std::invalid_argument("merge needs equal shapes");
    }
    const auto pa = a.pixels();
    const auto pb = b.pixels();
    std::vector<std::uint8_t> out(pa.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<std::uint8_t>((static_cast<unsigned>(pa[i]) + pb[i] + 1) / 2);
    }
    return GrayImage(a.width(), a.height(), std::move(out));
}

double information_gain(const GrayImage& a, const GrayImage& b) {
    return ref::entropy(a) - ref::entropy(ref::merge_images(a, b));
}

namespace {

JointProbDist naive_joint_pdf(const GrayImage& a, const GrayImage& b) {
    const JointHistogram jh = ref::joint_histogram(a, b);
    JointProbDist pdf;
    pdf.probs.resize(jh.counts.size());
    for (std::size_t i = 0; i < jh.counts.size(); ++i) {
        pdf.probs[i] = static_cast<double>(jh.counts[i]) / static_cast<double>(jh.total);
    }
    return pdf;
}

double metric_value_serial(MetricKind kind, const GrayImage& a, const GrayImage& b) {
    switch (kind) {
        case MetricKind::MutualInformation:
            return ref::mutual_information(a, b);
        case MetricKind::EntropyOfMerge:
            return ref::entropy(ref::merge_images(a, b));
        case MetricKind::InformationGain:
            return ref::information_gain(a, b);
        case MetricKind::JointEntropy:
            return ref::joint_entropy(naive_joint_pdf(a, b));
        case MetricKind::ConditionalEntropy:
            return ref::conditional_entropy(naive_joint_pdf(a, b), Var::B);
    }
    throw std::invalid_argument("unknown metric kind");
}

}  // namespace

MetricMatrix pairwise_matrix(std::span<const LabeledImage> images, MetricKind kind) {
    if (images.empty()) {
        throw std::invalid_argument("pairwise matrix needs at least one image");
    }
    const std::size_t n = images.size();
    MetricMatrix m;
    m.kind = kind;
    for (const auto& li : images) {
        m.labels.push_back(li.label);
    }
    m.values.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m.values[i * n + j] = metric_value_serial(kind, images[i].image, images[j].image);
        }
    }
    return m;
}

}  // namespace mutinfo::ref
