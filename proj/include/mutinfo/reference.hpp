#pragma once

#include "mutinfo/image.hpp"
#include "mutinfo/matrix.hpp"
#include "mutinfo/metrics.hpp"
#include "mutinfo/probability.hpp"

// Serial reference implementations: straight-line textbook loops with no
// parallelism and no shared code with the optimized kernels. Tests use
// them as the independent oracle and mutinfo_bench as the baseline.
namespace mutinfo::ref {

IntensityHistogram marginal_histogram(const GrayImage& img);

JointHistogram joint_histogram(const GrayImage& a, const GrayImage& b);

double entropy(const ProbDist& p);

double entropy(const GrayImage& img);

double joint_entropy(const JointProbDist& j);

/// Full 256x256 double loop over the alphabet with explicit zero-skip,
/// single left-to-right accumulator, marginals summed from the joint.
double mutual_information(const GrayImage& a, const GrayImage& b);

/// By the definition sum_y p(y) H(X|Y=y) rather than H(X,Y) - H(Y),
/// giving a second algebraic route for cross-checking.
double conditional_entropy(const JointProbDist& j, Var given);

GrayImage merge_images(const GrayImage& a, const GrayImage& b);

double information_gain(const GrayImage& a, const GrayImage& b);

/// Computes all n^2 ordered pairs independently, serially.
MetricMatrix pairwise_matrix(std::span<const LabeledImage> images, MetricKind kind);

}  // namespace mutinfo::ref
