#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "mutinfo/matrix.hpp"
#include "mutinfo/metrics.hpp"
#include "mutinfo/reference.hpp"
#include "support/fixtures.hpp"

using namespace mutinfo;

namespace {

const MetricKind kAllKinds[] = {
    MetricKind::MutualInformation, MetricKind::EntropyOfMerge,   MetricKind::InformationGain,
    MetricKind::JointEntropy,      MetricKind::ConditionalEntropy,
};

std::vector<LabeledImage> noise_collection(int n, int side, std::uint32_t seed) {
    std::vector<LabeledImage> images;
    for (int i = 0; i < n; ++i) {
        images.push_back({"img" + std::to_string(i),
                          fixtures::noise(side, side, seed + static_cast<std::uint32_t>(i))});
    }
    return images;
}

}  // namespace

TEST_CASE("metric kind tokens round-trip") {
    for (MetricKind kind : kAllKinds) {
        CHECK(metric_kind_from_string(to_string(kind)) == kind);
    }
    CHECK(to_string(MetricKind::MutualInformation) == "mi");
    CHECK(to_string(MetricKind::EntropyOfMerge) == "entropy-merge");
    CHECK(to_string(MetricKind::InformationGain) == "info-gain");
    CHECK(to_string(MetricKind::JointEntropy) == "joint-entropy");
    CHECK(to_string(MetricKind::ConditionalEntropy) == "cond-entropy");
    CHECK(!metric_kind_from_string("entropy").has_value());
    CHECK(!metric_kind_from_string("").has_value());
}

TEST_CASE("symmetry classification") {
    CHECK(is_symmetric(MetricKind::MutualInformation));
    CHECK(is_symmetric(MetricKind::EntropyOfMerge));
    CHECK(is_symmetric(MetricKind::JointEntropy));
    CHECK(!is_symmetric(MetricKind::InformationGain));
    CHECK(!is_symmetric(MetricKind::ConditionalEntropy));
}

TEST_CASE("single image yields a 1x1 matrix") {
    const GrayImage img = fixtures::noise(32, 32, 1);
    const std::vector<LabeledImage> one = {{"solo", img}};
    const MetricMatrix m = pairwise_matrix(one, MetricKind::MutualInformation);
    REQUIRE(m.size() == 1);
    CHECK(m.labels[0] == "solo");
    CHECK(std::fabs(m.at(0, 0) - entropy(img).value) <= 1e-12);
}

TEST_CASE("pairwise_matrix rejects empty and mismatched input") {
    CHECK_THROWS_AS(pairwise_matrix({}, MetricKind::MutualInformation), std::invalid_argument);

    const std::vector<LabeledImage> bad = {{"a", GrayImage::filled(2, 2, 0)},
                                           {"b", GrayImage::filled(3, 2, 0)}};
    CHECK_THROWS_AS(pairwise_matrix(bad, MetricKind::MutualInformation), std::invalid_argument);
}

TEST_CASE("deterministically coupled images give log2(3) in every MI cell") {
    const std::uint8_t la[] = {0, 100, 200};
    const std::uint8_t lb[] = {10, 110, 210};
    const std::vector<LabeledImage> pair = {{"a", synth_uniform_levels(la, {3, 2})},
                                            {"b", synth_uniform_levels(lb, {3, 2})}};
    const MetricMatrix m = pairwise_matrix(pair, MetricKind::MutualInformation);
    for (double v : m.values) {
        CHECK(std::fabs(v - std::log2(3.0)) <= 1e-12);
    }
}

TEST_CASE("symmetric kinds produce exactly symmetric matrices") {
    const auto images = noise_collection(4, 48, 50);
    for (MetricKind kind :
         {MetricKind::MutualInformation, MetricKind::EntropyOfMerge, MetricKind::JointEntropy}) {
        const MetricMatrix m = pairwise_matrix(images, kind);
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::size_t j = 0; j < m.size(); ++j) {
                REQUIRE(m.at(i, j) == m.at(j, i));
            }
        }
    }
}

TEST_CASE("metric_value is bitwise argument-order independent for symmetric kinds") {
    const GrayImage a = fixtures::noise(48, 48, 55);
    const GrayImage b = fixtures::noise(48, 48, 56);
    for (MetricKind kind :
         {MetricKind::MutualInformation, MetricKind::EntropyOfMerge, MetricKind::JointEntropy}) {
        CHECK(metric_value(kind, a, b) == metric_value(kind, b, a));
    }
}

TEST_CASE("MI diagonal equals each image's entropy") {
    const auto images = noise_collection(3, 64, 60);
    const MetricMatrix m = pairwise_matrix(images, MetricKind::MutualInformation);
    for (std::size_t i = 0; i < m.size(); ++i) {
        CHECK(std::fabs(m.at(i, i) - entropy(images[i].image).value) <= 1e-12);
    }
}

TEST_CASE("information gain diagonal is exactly zero") {
    const auto images = noise_collection(4, 64, 70);
    const MetricMatrix m = pairwise_matrix(images, MetricKind::InformationGain);
    for (std::size_t i = 0; i < m.size(); ++i) {
        CHECK(m.at(i, i) == 0.0);
    }
}

TEST_CASE("entropy-merge diagonal equals the image entropy bit-exactly") {
    const auto images = noise_collection(3, 64, 80);
    const MetricMatrix m = pairwise_matrix(images, MetricKind::EntropyOfMerge);
    for (std::size_t i = 0; i < m.size(); ++i) {
        CHECK(m.at(i, i) == entropy(images[i].image).value);
    }
}

TEST_CASE("conditional entropy matrix stores H(row|column)") {
    const std::vector<LabeledImage> pair = {{"a", GrayImage(2, 2, {0, 0, 1, 1})},
                                            {"b", GrayImage(2, 2, {0, 0, 0, 1})}};
    const MetricMatrix m = pairwise_matrix(pair, MetricKind::ConditionalEntropy);
    CHECK(std::fabs(m.at(0, 1) - 0.6887218755408672) <= 1e-12);  // H(a|b)
    CHECK(std::fabs(m.at(1, 0) - 0.5) <= 1e-12);                 // H(b|a)
    CHECK(m.at(0, 0) == 0.0);
    CHECK(m.at(1, 1) == 0.0);
}

TEST_CASE("metric_value agrees with the matrix cells") {
    const auto images = noise_collection(3, 32, 90);
    for (MetricKind kind : kAllKinds) {
        const MetricMatrix m = pairwise_matrix(images, kind);
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::size_t j = 0; j < m.size(); ++j) {
                REQUIRE(std::fabs(m.at(i, j) -
                                  metric_value(kind, images[i].image, images[j].image)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("parallel pairwise matrix matches the serial reference") {
    const auto images = noise_collection(5, 64, 100);
    for (MetricKind kind : kAllKinds) {
        const MetricMatrix fast = pairwise_matrix(images, kind);
        const MetricMatrix slow = ref::pairwise_matrix(images, kind);
        REQUIRE(fast.labels == slow.labels);
        REQUIRE(fast.kind == slow.kind);
        REQUIRE(fast.values.size() == slow.values.size());
        for (std::size_t i = 0; i < fast.values.size(); ++i) {
            REQUIRE(std::fabs(fast.values[i] - slow.values[i]) <= 1e-12);
        }
    }
}

TEST_CASE("permuting the collection permutes the matrix") {
    const auto images = noise_collection(4, 48, 110);
    const std::vector<LabeledImage> shuffled = {images[2], images[0], images[3], images[1]};
    const std::size_t perm[] = {2, 0, 3, 1};  // shuffled[i] == images[perm[i]]
    const MetricMatrix m = pairwise_matrix(images, MetricKind::MutualInformation);
    const MetricMatrix s = pairwise_matrix(shuffled, MetricKind::MutualInformation);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(s.labels[i] == images[perm[i]].label);
        for (std::size_t j = 0; j < 4; ++j) {
            REQUIRE(std::fabs(s.at(i, j) - m.at(perm[i], perm[j])) <= 1e-12);
        }
    }
}

TEST_CASE("1x1 zero matrix serializes to the canonical CSV") {
    MetricMatrix m;
    m.labels = {"a"};
    m.kind = MetricKind::MutualInformation;
    m.values = {0.0};
    CHECK(serialize_matrix(m, MatrixFormat::Csv) == ",a\na,0\n");
}

TEST_CASE("CSV serialization round-trips bit-exactly") {
    const auto images = noise_collection(4, 32, 120);
    for (MetricKind kind : kAllKinds) {
        const MetricMatrix m = pairwise_matrix(images, kind);
        const std::string csv = serialize_matrix(m, MatrixFormat::Csv);
        const MetricMatrix back = parse_matrix(csv, MatrixFormat::Csv, kind);
        REQUIRE(back == m);
    }
}

TEST_CASE("JSON serialization round-trips bit-exactly") {
    const auto images = noise_collection(3, 32, 130);
    for (MetricKind kind : kAllKinds) {
        const MetricMatrix m = pairwise_matrix(images, kind);
        const std::string json = serialize_matrix(m, MatrixFormat::Json);
        const MetricMatrix back = parse_matrix(json, MatrixFormat::Json);
        REQUIRE(back == m);
    }
}

TEST_CASE("negative and subnormal-free values survive the CSV round trip") {
    MetricMatrix m;
    m.labels = {"x", "y"};
    m.kind = MetricKind::InformationGain;
    m.values = {0.0, -1.2143902873523269, 0.018990041437732, std::log2(3.0)};
    const MetricMatrix back =
        parse_matrix(serialize_matrix(m, MatrixFormat::Csv), MatrixFormat::Csv, m.kind);
    CHECK(back == m);
}

TEST_CASE("CSV parsing requires an explicit kind") {
    CHECK_THROWS_AS(parse_matrix(",a\na,0\n", MatrixFormat::Csv), std::invalid_argument);
}

TEST_CASE("malformed CSV raises ParseError naming the line") {
    const MetricKind k = MetricKind::MutualInformation;
    CHECK_THROWS_WITH_AS(parse_matrix("", MatrixFormat::Csv, k), doctest::Contains("line 1"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_matrix("a,b\na,0\n", MatrixFormat::Csv, k),
                         doctest::Contains("line 1"), ParseError);
    // Row with too many values.
    CHECK_THROWS_WITH_AS(parse_matrix(",a,b\na,0,0,0\nb,0,0\n", MatrixFormat::Csv, k),
                         doctest::Contains("line 2"), ParseError);
    // Row label does not match the header.
    CHECK_THROWS_WITH_AS(parse_matrix(",a,b\na,0,0\nc,0,0\n", MatrixFormat::Csv, k),
                         doctest::Contains("line 3"), ParseError);
    // Non-numeric cell.
    CHECK_THROWS_WITH_AS(parse_matrix(",a\na,zero\n", MatrixFormat::Csv, k),
                         doctest::Contains("line 2"), ParseError);
}

TEST_CASE("CSV with wrong row count is rejected as non-square") {
    CHECK_THROWS_AS(
        parse_matrix(",a,b\na,0,0\n", MatrixFormat::Csv, MetricKind::MutualInformation),
        std::invalid_argument);
}

TEST_CASE("malformed JSON raises ParseError") {
    CHECK_THROWS_AS(parse_matrix("{", MatrixFormat::Json), ParseError);
    CHECK_THROWS_WITH_AS(parse_matrix(R"({"labels":["a"],"values":[0.0]})", MatrixFormat::Json),
                         doctest::Contains("kind"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_matrix(R"({"kind":"mi","labels":["a"]})", MatrixFormat::Json),
        doctest::Contains("values"), ParseError);
    CHECK_THROWS_AS(
        parse_matrix(R"({"kind":"nope","labels":["a"],"values":[0.0]})", MatrixFormat::Json),
        ParseError);
    CHECK_THROWS_AS(
        parse_matrix(R"({"kind":"mi","labels":["a"],"values":[0.0,1.0]})", MatrixFormat::Json),
        std::invalid_argument);
}

TEST_CASE("labels with separators cannot be serialized to CSV") {
    MetricMatrix m;
    m.labels = {"a,b"};
    m.kind = MetricKind::MutualInformation;
    m.values = {0.0};
    CHECK_THROWS_AS(serialize_matrix(m, MatrixFormat::Csv), std::invalid_argument);
}

TEST_CASE("plot_series flattens row-major with pipe-joined labels") {
    MetricMatrix m;
    m.labels = {"a", "b"};
    m.kind = MetricKind::JointEntropy;
    m.values = {1.0, 2.0, 3.0, 4.0};
    const auto points = plot_series(m);
    REQUIRE(points.size() == 4);
    CHECK(points[0] == PlotPoint{"a|a", 1.0});
    CHECK(points[1] == PlotPoint{"a|b", 2.0});
    CHECK(points[2] == PlotPoint{"b|a", 3.0});
    CHECK(points[3] == PlotPoint{"b|b", 4.0});
}

TEST_CASE("plot_series of a 1x1 matrix") {
    MetricMatrix m;
    m.labels = {"solo"};
    m.kind = MetricKind::MutualInformation;
    m.values = {7.5};
    const auto points = plot_series(m);
    REQUIRE(points.size() == 1);
    CHECK(points[0] == PlotPoint{"solo|solo", 7.5});
}
