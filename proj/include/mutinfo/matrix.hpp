#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mutinfo/image.hpp"
#include "mutinfo/metrics.hpp"

namespace mutinfo {

enum class MetricKind {
    MutualInformation,
    EntropyOfMerge,
    InformationGain,
    JointEntropy,
    ConditionalEntropy,
};

/// Canonical token, also used by the CLI and the JSON "kind" field.
std::string_view to_string(MetricKind kind);
std::optional<MetricKind> metric_kind_from_string(std::string_view name);

/// MI, entropy-of-merge and joint entropy are symmetric in their inputs;
/// information gain and conditional entropy are not.
bool is_symmetric(MetricKind kind);

struct LabeledImage {
    std::string label;
    GrayImage image;
};

/// Labeled n x n matrix of pairwise metric values in bits, row-major.
struct MetricMatrix {
    std::vector<std::string> labels;
    MetricKind kind = MetricKind::MutualInformation;
    std::vector<double> values;  // n * n

    std::size_t size() const { return labels.size(); }
    double at(std::size_t i, std::size_t j) const { return values[i * size() + j]; }

    friend bool operator==(const MetricMatrix&, const MetricMatrix&) = default;
};

/// The metric value for one ordered pair of equal-shape images.
/// For ConditionalEntropy this is H(a|b); for InformationGain,
/// H(a) - H(merge(a,b)).
double metric_value(MetricKind kind, const GrayImage& a, const GrayImage& b);

/// Computes the chosen metric for every ordered pair. Symmetric kinds
/// compute each unordered pair once and mirror, so the result is exactly
/// symmetric. Pair computations fan out to OpenMP workers; each cell has
/// one writer, so the output is deterministic. All images must share one
/// shape and the list must be non-empty.
MetricMatrix pairwise_matrix(std::span<const LabeledImage> images, MetricKind kind);

enum class MatrixFormat { Csv, Json };

/// Input bytes violate the format grammar.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// CSV: header row of ",label1,label2,..." then one "label,v1,v2,..." row
/// per image; values print in shortest round-trip form, "\n" endings.
/// JSON: object with "kind", "labels", "values". Parsing the output
/// reproduces the matrix bit-exactly.
std::string serialize_matrix(const MetricMatrix& m, MatrixFormat format);

/// Inverse of serialize_matrix. The CSV grammar does not carry the metric
/// kind, so `csv_kind` is required for CSV input; JSON reads its own
/// "kind" field. Structural violations throw ParseError (with the line
/// for CSV); non-square data throws std::invalid_argument.
MetricMatrix parse_matrix(std::string_view bytes, MatrixFormat format,
                          std::optional<MetricKind> csv_kind = std::nullopt);

struct PlotPoint {
    std::string pair;  // "labelA|labelB"
    double value = 0.0;

    friend bool operator==(const PlotPoint&, const PlotPoint&) = default;
};

/// Row-major flattening of the matrix into n^2 labeled points.
std::vector<PlotPoint> plot_series(const MetricMatrix& m);

}  // namespace mutinfo
