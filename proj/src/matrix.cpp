#include "mutinfo/matrix.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstddef>
#include <utility>

#include <json.hpp>

namespace mutinfo {

namespace {

constexpr std::array<std::pair<MetricKind, std::string_view>, 5> kKindNames{{
    {MetricKind::MutualInformation, "mi"},
    {MetricKind::EntropyOfMerge, "entropy-merge"},
    {MetricKind::InformationGain, "info-gain"},
    {MetricKind::JointEntropy, "joint-entropy"},
    {MetricKind::ConditionalEntropy, "cond-entropy"},
}};

/// Shortest decimal form that parses back to the identical double.
std::string format_value(double v) {
    std::array<char, 32> buf;
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

double parse_value(std::string_view token, std::size_t line_no) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError("csv line " + std::to_string(line_no) + ": bad numeric value '" +
                         std::string(token) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

void require_clean_label(const std::string& label) {
    if (label.find(',') != std::string::npos || label.find('\n') != std::string::npos) {
        throw std::invalid_argument("label '" + label + "' contains ',' or newline");
    }
}

std::string serialize_csv(const MetricMatrix& m) {
    std::string out;
    for (const auto& label : m.labels) {
        require_clean_label(label);
        out += ',';
        out += label;
    }
    out += '\n';
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        out += m.labels[i];
        for (std::size_t j = 0; j < n; ++j) {
            out += ',';
            out += format_value(m.values[i * n + j]);
        }
        out += '\n';
    }
    return out;
}

MetricMatrix parse_csv(std::string_view bytes, MetricKind kind) {
    std::vector<std::string_view> lines = split(bytes, '\n');
    // A trailing newline yields one empty trailing entry.
    while (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    if (lines.empty()) {
        throw ParseError("csv line 1: empty input");
    }

    const auto header = split(lines[0], ',');
    if (header.size() < 2 || !header[0].empty()) {
        throw ParseError("csv line 1: header must start with an empty cell followed by labels");
    }
    MetricMatrix m;
    m.kind = kind;
    m.labels.assign(header.begin() + 1, header.end());
    const std::size_t n = m.labels.size();

    if (lines.size() - 1 != n) {
        throw std::invalid_argument("csv: " + std::to_string(n) + " labels but " +
                                    std::to_string(lines.size() - 1) + " data rows");
    }
    m.values.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t line_no = i + 2;
        const auto fields = split(lines[i + 1], ',');
        if (fields.size() != n + 1) {
            throw ParseError("csv line " + std::to_string(line_no) + ": expected " +
                             std::to_string(n + 1) + " fields, got " +
                             std::to_string(fields.size()));
        }
        if (fields[0] != m.labels[i]) {
            throw ParseError("csv line " + std::to_string(line_no) + ": row label '" +
                             std::string(fields[0]) + "' does not match header label '" +
                             m.labels[i] + "'");
        }
        for (std::size_t j = 0; j < n; ++j) {
            m.values.push_back(parse_value(fields[j + 1], line_no));
        }
    }
    return m;
}

std::string serialize_json(const MetricMatrix& m) {
    nlohmann::json doc;
    doc["kind"] = to_string(m.kind);
    doc["labels"] = m.labels;
    const std::size_t n = m.size();
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t j = 0; j < n; ++j) {
            row.push_back(m.values[i * n + j]);
        }
        rows.push_back(std::move(row));
    }
    doc["values"] = std::move(rows);
    return doc.dump() + "\n";
}

MetricMatrix parse_json(std::string_view bytes) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("json: top-level value must be an object");
    }
    for (const char* field : {"kind", "labels", "values"}) {
        if (!doc.contains(field)) {
            throw ParseError(std::string("json: missing \"") + field + "\" field");
        }
    }
    if (!doc["kind"].is_string()) {
        throw ParseError("json: \"kind\" must be a string");
    }
    const auto kind = metric_kind_from_string(doc["kind"].get<std::string>());
    if (!kind) {
        throw ParseError("json: unknown metric kind '" + doc["kind"].get<std::string>() + "'");
    }

    MetricMatrix m;
    m.kind = *kind;
    if (!doc["labels"].is_array()) {
        throw ParseError("json: \"labels\" must be an array");
    }
    for (const auto& l : doc["labels"]) {
        if (!l.is_string()) {
            throw ParseError("json: labels must be strings");
        }
        m.labels.push_back(l.get<std::string>());
    }
    const std::size_t n = m.labels.size();
    const auto& rows = doc["values"];
    if (!rows.is_array() || rows.size() != n) {
        throw std::invalid_argument("json: values must be a " + std::to_string(n) + "x" +
                                    std::to_string(n) + " array");
    }
    m.values.reserve(n * n);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n) {
            throw std::invalid_argument("json: values must be a " + std::to_string(n) + "x" +
                                        std::to_string(n) + " array");
        }
        for (const auto& v : row) {
            if (!v.is_number()) {
                throw ParseError("json: matrix entries must be numbers");
            }
            m.values.push_back(v.get<double>());
        }
    }
    return m;
}

void require_common_shape(std::span<const LabeledImage> images) {
    if (images.empty()) {
        throw std::invalid_argument("pairwise matrix needs at least one image");
    }
    const GrayImage& first = images.front().image;
    std::string offenders;
    for (const auto& [label, image] : images) {
        if (!image.same_shape(first)) {
            offenders += offenders.empty() ? "" : ", ";
            offenders += label;
        }
    }
    if (!offenders.empty()) {
        throw std::invalid_argument("images differ in shape from '" + images.front().label +
                                    "' (" + std::to_string(first.width()) + "x" +
                                    std::to_string(first.height()) + "): " + offenders);
    }
}

}  // namespace

std::string_view to_string(MetricKind kind) {
    for (const auto& [k, name] : kKindNames) {
        if (k == kind) return name;
    }
    return "unknown";
}

std::optional<MetricKind> metric_kind_from_string(std::string_view name) {
    for (const auto& [k, n] : kKindNames) {
        if (n == name) return k;
    }
    return std::nullopt;
}

bool is_symmetric(MetricKind kind) {
    switch (kind) {
        case MetricKind::MutualInformation:
        case MetricKind::EntropyOfMerge:
        case MetricKind::JointEntropy:
            return true;
        case MetricKind::InformationGain:
        case MetricKind::ConditionalEntropy:
            return false;
    }
    return false;
}

double metric_value(MetricKind kind, const GrayImage& a, const GrayImage& b) {
    // Symmetric metrics are evaluated in a canonical operand order so the
    // result is bitwise independent of argument order, not merely close.
    if (is_symmetric(kind)) {
        const auto pa = a.pixels();
        const auto pb = b.pixels();
        if (std::lexicographical_compare(pb.begin(), pb.end(), pa.begin(), pa.end())) {
            return metric_value(kind, b, a);
        }
    }
    switch (kind) {
        case MetricKind::MutualInformation:
            return mutual_information(a, b).value;
        case MetricKind::EntropyOfMerge:
            return entropy(merge_images(a, b)).value;
        case MetricKind::InformationGain:
            return information_gain(a, b).value;
        case MetricKind::JointEntropy:
            return joint_entropy(to_joint_pdf(joint_histogram(a, b))).value;
        case MetricKind::ConditionalEntropy:
            return conditional_entropy(to_joint_pdf(joint_histogram(a, b)), Var::B).value;
    }
    throw std::invalid_argument("unknown metric kind");
}

MetricMatrix pairwise_matrix(std::span<const LabeledImage> images, MetricKind kind) {
    require_common_shape(images);

    const std::size_t n = images.size();
    MetricMatrix m;
    m.kind = kind;
    m.labels.reserve(n);
    for (const auto& li : images) {
        m.labels.push_back(li.label);
    }
    m.values.assign(n * n, 0.0);

    // One task per unordered pair; each writes only its own cells.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    const std::int64_t tasks = static_cast<std::int64_t>(pairs.size());

    switch (kind) {
        case MetricKind::MutualInformation:
        case MetricKind::JointEntropy:
#pragma omp parallel for schedule(dynamic)
            for (std::int64_t t = 0; t < tasks; ++t) {
                const auto [i, j] = pairs[t];
                const double v = metric_value(kind, images[i].image, images[j].image);
                m.values[i * n + j] = v;
                m.values[j * n + i] = v;
            }
            break;

        case MetricKind::EntropyOfMerge:
        case MetricKind::InformationGain:
#pragma omp parallel for schedule(dynamic)
            for (std::int64_t t = 0; t < tasks; ++t) {
                const auto [i, j] = pairs[t];
                const double v = entropy(merge_images(images[i].image, images[j].image)).value;
                m.values[i * n + j] = v;
                m.values[j * n + i] = v;
            }
            if (kind == MetricKind::InformationGain) {
                // gain[i][j] = H(i) - H(merge(i,j)); merge(i,i) == i makes the
                // entropy-of-merge diagonal exactly H(i), so the gain diagonal
                // is exactly zero.
                std::vector<double> self_entropy(n);
                for (std::size_t i = 0; i < n; ++i) {
                    self_entropy[i] = m.values[i * n + i];
                }
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0; j < n; ++j) {
                        m.values[i * n + j] = self_entropy[i] - m.values[i * n + j];
                    }
                }
            }
            break;

        case MetricKind::ConditionalEntropy:
#pragma omp parallel for schedule(dynamic)
            for (std::int64_t t = 0; t < tasks; ++t) {
                const auto [i, j] = pairs[t];
                const auto joint = to_joint_pdf(joint_histogram(images[i].image, images[j].image));
                m.values[i * n + j] = conditional_entropy(joint, Var::B).value;  // H(i|j)
                m.values[j * n + i] = conditional_entropy(joint, Var::A).value;  // H(j|i)
            }
            break;
    }
    return m;
}

std::string serialize_matrix(const MetricMatrix& m, MatrixFormat format) {
    return format == MatrixFormat::Csv ? serialize_csv(m) : serialize_json(m);
}

MetricMatrix parse_matrix(std::string_view bytes, MatrixFormat format,
                          std::optional<MetricKind> csv_kind) {
    if (format == MatrixFormat::Csv) {
        if (!csv_kind) {
            throw std::invalid_argument("csv carries no metric kind; pass one explicitly");
        }
        return parse_csv(bytes, *csv_kind);
    }
    return parse_json(bytes);
}

std::vector<PlotPoint> plot_series(const MetricMatrix& m) {
    const std::size_t n = m.size();
    std::vector<PlotPoint> points;
    points.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            points.push_back({m.labels[i] + "|" + m.labels[j], m.values[i * n + j]});
        }
    }
    return points;
}

}  // namespace mutinfo
