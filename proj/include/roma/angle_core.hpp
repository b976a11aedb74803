#pragma once

#include "roma/matrix.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace roma {

/// Largest N for which the pairwise routines materialize a dense N x N matrix.
inline constexpr std::size_t kDefaultFullMatrixCap = 20000;

/// Per-point minimum acute angle and its descending-sorted view.
struct AngleScores {
    std::vector<double> scores;         // q_i, indexed by original column
    std::vector<std::size_t> order;     // column indices by descending score, ties by ascending index
    std::vector<double> sorted_scores;  // scores[order[l]]

    /// Builds the sorted view from raw per-column scores.
    static AngleScores from_scores(std::vector<double> scores);
};

/// x_i . x_j with k summed sequentially from 0 to n-1. Every Gram entry in the
/// library goes through this order so results are reproducible bit for bit.
double column_dot(const NormalizedMatrix& x, std::size_t i, std::size_t j);

/// Full symmetric Gram matrix X^T X.
Eigen::MatrixXd gram_matrix(const NormalizedMatrix& x, std::size_t cap = kDefaultFullMatrixCap);

/// theta_ij = acos(clamp(x_i . x_j)) in [0, pi]. Throws InvalidArgument if N > cap.
Eigen::MatrixXd pairwise_principal_angles(const NormalizedMatrix& x,
                                          std::size_t cap = kDefaultFullMatrixCap);

/// phi_ij = acos(|clamp(x_i . x_j)|) in [0, pi/2]. Throws InvalidArgument if N > cap.
Eigen::MatrixXd pairwise_acute_angles(const NormalizedMatrix& x,
                                      std::size_t cap = kDefaultFullMatrixCap);

/// q_i = min_{j != i} phi_ij from a precomputed acute-angle matrix.
AngleScores min_angle_scores(const Eigen::MatrixXd& phi);

/// Same result as min_angle_scores(pairwise_acute_angles(x)) without storing the
/// N x N matrix: row blocks of the Gram matrix are streamed, and
/// q_i = acos(max_{j != i} |x_i . x_j|).
AngleScores acute_angle_scores(const NormalizedMatrix& x);

}  // namespace roma
