#pragma once

#include <Eigen/Core>
#include <utility>

namespace avreid {

// Row-major keeps each feature row contiguous.
using FeatureMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using DistanceMatrix = FeatureMatrix;

// Rows below this norm count as zero vectors.
inline constexpr double kZeroNormEps = 1e-12;

// Divides every row by its L2 norm. Throws ZeroVectorError on any all-zero
// row instead of clamping.
FeatureMatrix normalize(const FeatureMatrix& features);

// d(i,j) = 1 - <a_i, b_j> / (|a_i| |b_j|), in [0, 2].
// Throws DimensionMismatchError when column counts differ, ZeroVectorError on
// zero rows.
DistanceMatrix cosine_distance_matrix(const FeatureMatrix& a, const FeatureMatrix& b);

// Pullback of cosine_distance_matrix: given dL/dD returns {dL/dA, dL/dB}.
// For the self-distance case pass the same matrix twice and sum both results.
std::pair<FeatureMatrix, FeatureMatrix> cosine_distance_backward(const FeatureMatrix& a, const FeatureMatrix& b,
                                                                 const DistanceMatrix& grad);

}  // namespace avreid
