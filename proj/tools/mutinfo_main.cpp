#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mutinfo/imageio.hpp"
#include "mutinfo/matrix.hpp"
#include "mutinfo/preprocess.hpp"

namespace fs = std::filesystem;
using namespace mutinfo;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;

struct Options {
    std::vector<std::string> inputs;
    std::string metric = "mi";
    std::string size_text = "256x256";
    bool normalize = false;
    std::string format = "csv";
    std::string output = "-";
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

TargetSize parse_size(const std::string& text) {
    const auto sep = text.find('x');
    if (sep == std::string::npos || sep == 0 || sep + 1 >= text.size()) {
        throw UsageError("--size expects WxH, got '" + text + "'");
    }
    try {
        const int w = std::stoi(text.substr(0, sep));
        const int h = std::stoi(text.substr(sep + 1));
        if (w < 1 || h < 1) {
            throw UsageError("--size dimensions must be >= 1, got '" + text + "'");
        }
        return {w, h};
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("--size expects WxH, got '" + text + "'");
    }
}

MetricKind parse_metric(const std::string& name) {
    if (const auto kind = metric_kind_from_string(name)) {
        return *kind;
    }
    throw UsageError("unknown metric '" + name +
                     "' (expected mi|entropy-merge|info-gain|joint-entropy|cond-entropy)");
}

MatrixFormat parse_format(const std::string& name) {
    if (name == "csv") return MatrixFormat::Csv;
    if (name == "json") return MatrixFormat::Json;
    throw UsageError("unknown format '" + name + "' (expected csv|json)");
}

std::string metric_phrase(MetricKind kind) {
    switch (kind) {
        case MetricKind::MutualInformation: return "mutual information";
        case MetricKind::EntropyOfMerge: return "entropy of merge";
        case MetricKind::InformationGain: return "information gain";
        case MetricKind::JointEntropy: return "joint entropy";
        case MetricKind::ConditionalEntropy: return "conditional entropy";
    }
    return "metric";
}

GrayImage load_input(const std::string& path, TargetSize size, bool normalize) {
    GrayImage img = load_grayscale(path, size);
    return normalize ? normalize_intensity(img) : img;
}

bool has_image_extension(const fs::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

// One directory enumerates *.png/*.jpg/*.jpeg in lexicographic filename
// order; otherwise every input must be a file path.
std::vector<std::string> resolve_inputs(const std::vector<std::string>& inputs) {
    if (inputs.size() == 1 && fs::is_directory(inputs[0])) {
        std::vector<fs::path> found;
        for (const auto& entry : fs::directory_iterator(inputs[0])) {
            if (entry.is_regular_file() && has_image_extension(entry.path())) {
                found.push_back(entry.path());
            }
        }
        std::sort(found.begin(), found.end(), [](const fs::path& a, const fs::path& b) {
            return a.filename().string() < b.filename().string();
        });
        if (found.empty()) {
            throw UsageError("directory '" + inputs[0] + "' contains no PNG or JPEG files");
        }
        std::vector<std::string> paths;
        for (const auto& p : found) {
            paths.push_back(p.string());
        }
        return paths;
    }
    for (const auto& p : inputs) {
        if (fs::is_directory(p)) {
            throw UsageError("'" + p + "' is a directory; pass one directory or only files");
        }
    }
    return inputs;
}

std::vector<LabeledImage> load_collection(const Options& opt) {
    const TargetSize size = parse_size(opt.size_text);
    std::vector<LabeledImage> images;
    for (const auto& path : resolve_inputs(opt.inputs)) {
        images.push_back({fs::path(path).filename().string(), load_input(path, size, opt.normalize)});
    }
    return images;
}

void write_output(const std::string& target, const std::string& bytes) {
    if (target == "-") {
        std::cout << bytes;
        std::cout.flush();
        return;
    }
    std::ofstream out(target, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + target + "' for writing");
    }
    out << bytes;
    if (!out) {
        throw IoError("failed writing to '" + target + "'");
    }
}

std::string format_15sig(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

int run_compare(const Options& opt) {
    const MetricKind kind = parse_metric(opt.metric);
    const TargetSize size = parse_size(opt.size_text);
    const GrayImage a = load_input(opt.inputs[0], size, opt.normalize);
    const GrayImage b = load_input(opt.inputs[1], size, opt.normalize);
    const double value = metric_value(kind, a, b);

    const std::string label_a = fs::path(opt.inputs[0]).filename().string();
    const std::string label_b = fs::path(opt.inputs[1]).filename().string();
    std::cout << "The " << metric_phrase(kind) << " between '" << label_a << "' and '" << label_b
              << "' is: " << format_15sig(value) << "\n";
    return kExitOk;
}

int run_matrix(const Options& opt) {
    const MetricKind kind = parse_metric(opt.metric);
    const MatrixFormat format = parse_format(opt.format);
    const auto images = load_collection(opt);
    const MetricMatrix m = pairwise_matrix(images, kind);
    write_output(opt.output, serialize_matrix(m, format));
    return kExitOk;
}

int run_plot_data(const Options& opt) {
    const MetricKind kind = parse_metric(opt.metric);
    const auto images = load_collection(opt);
    const MetricMatrix m = pairwise_matrix(images, kind);

    std::string csv = "pair,value\n";
    for (const auto& point : plot_series(m)) {
        csv += point.pair;
        csv += ',';
        char buf[32];
        const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), point.value);
        csv.append(buf, end);
        csv += '\n';
    }
    write_output(opt.output, csv);
    return kExitOk;
}

void add_common_flags(CLI::App* cmd, Options& opt, bool with_output) {
    cmd->add_option("--metric", opt.metric,
                    "Metric: mi|entropy-merge|info-gain|joint-entropy|cond-entropy")
        ->capture_default_str();
    cmd->add_option("--size", opt.size_text, "Working size WxH applied to every image")
        ->capture_default_str();
    cmd->add_flag("--normalize", opt.normalize, "Min-max stretch intensities after loading");
    if (with_output) {
        cmd->add_option("--format", opt.format, "Matrix format: csv|json")->capture_default_str();
        cmd->add_option("--output", opt.output, "Output path, or - for stdout")
            ->capture_default_str();
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Information-theoretic similarity measures over grayscale images"};
    app.require_subcommand(1);

    Options cmp_opt, mat_opt, plot_opt;

    auto* cmp = app.add_subcommand("compare", "Print one metric value for a pair of images");
    cmp->add_option("a", cmp_opt.inputs, "Two image files")->required()->expected(2);
    add_common_flags(cmp, cmp_opt, false);

    auto* mat = app.add_subcommand("matrix", "Pairwise metric matrix over an image collection");
    mat->add_option("inputs", mat_opt.inputs, "Image files, or one directory")
        ->required()
        ->expected(-1);
    add_common_flags(mat, mat_opt, true);

    auto* plot = app.add_subcommand("plot-data", "Flattened pair,value series for plotting");
    plot->add_option("inputs", plot_opt.inputs, "Image files, or one directory")
        ->required()
        ->expected(-1);
    add_common_flags(plot, plot_opt, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmp->parsed()) return run_compare(cmp_opt);
        if (mat->parsed()) return run_matrix(mat_opt);
        return run_plot_data(plot_opt);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const DecodeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
