#pragma once

#include "roma/matrix.hpp"
#include "roma/rng.hpp"
#include "roma/subspace.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace roma {

/// Parameters of the column-sparse outlier model: a uniformly random r-dimensional
/// subspace in R^n holding round((1 - gamma) N) unit inliers, the remaining points
/// uniform on the unit sphere S^(n-1).
struct SynthSpec {
    std::size_t n = 100;
    std::size_t N = 1000;
    std::size_t r = 10;
    double gamma = 0.25;
    std::optional<double> snr_db;
    std::uint64_t seed = 0;

    void validate() const;

    /// round-half-up of (1 - gamma) N
    std::size_t inlier_count() const;
    std::size_t outlier_count() const { return N - inlier_count(); }
};

struct LabeledDataset {
    DataMatrix matrix;
    std::vector<std::size_t> true_inliers;   // ascending
    std::vector<std::size_t> true_outliers;  // ascending
    SubspaceBasis truth_basis;
};

/// Haar-distributed r-dimensional subspace of R^n (QR of an n x r Gaussian matrix).
SubspaceBasis sample_subspace_basis(std::size_t n, std::size_t r, Rng& rng);

/// `count` points uniform on span(basis) intersected with the unit sphere.
Eigen::MatrixXd sample_inliers(const SubspaceBasis& basis, std::size_t count, Rng& rng);

/// `count` points uniform on S^(n-1).
Eigen::MatrixXd sample_outliers(std::size_t n, std::size_t count, Rng& rng);

/// Noise variance per coordinate so that E||w||^2 = 10^(-snr_db/10) for unit points.
double noise_variance(std::size_t n, double snr_db);

/// Dataset with explicit inlier/outlier counts; columns are placed at a uniformly
/// random permutation. With snr_db set, N(0, noise_variance) noise is added to every
/// column.
LabeledDataset assemble_dataset(std::size_t n, std::size_t r, std::size_t inliers,
                                std::size_t outliers, std::optional<double> snr_db, Rng& rng);

LabeledDataset assemble_dataset(const SynthSpec& spec, Rng& rng);

/// Uses a generator seeded with spec.seed.
LabeledDataset assemble_dataset(const SynthSpec& spec);

}  // namespace roma
