#pragma once

#include <compare>

#include "mutinfo/image.hpp"
#include "mutinfo/probability.hpp"

namespace mutinfo {

/// A log2-based information quantity. Finite for every valid distribution.
struct Bits {
    double value = 0.0;

    friend auto operator<=>(const Bits&, const Bits&) = default;
};

/// Shannon entropy -sum p log2 p with 0*log0 := 0. Range [0, 8] for an
/// 8-bit alphabet.
Bits entropy(const ProbDist& p);

/// Entropy of the joint distribution. Range [0, 16].
Bits joint_entropy(const JointProbDist& j);

/// Which variable of a JointProbDist is conditioned on.
enum class Var { A, B };

/// H(X|Y) computed as H(A,B) - H(Y). conditional_entropy(j, Var::B) is
/// H(A|B). Clamped to 0 when floating-point summation dips within 1e-12
/// below zero.
Bits conditional_entropy(const JointProbDist& j, Var given);

/// Mutual information in bits, marginals derived from the joint itself.
/// Terms with zero joint probability are skipped. Clamped to 0 when
/// within 1e-12 below zero.
Bits mutual_information(const JointProbDist& j);

/// MI of an image pair through the full histogram pipeline.
Bits mutual_information(const GrayImage& a, const GrayImage& b);

/// Entropy of an image's intensity distribution.
Bits entropy(const GrayImage& img);

/// Pixel-wise arithmetic mean, rounded half up. Commutative, and
/// merge(x, x) is pixel-identical to x.
GrayImage merge_images(const GrayImage& a, const GrayImage& b);

/// H(a) - H(merge(a, b)). Exactly zero for a == b; negative when merging
/// raises entropy.
Bits information_gain(const GrayImage& a, const GrayImage& b);

}  // namespace mutinfo
