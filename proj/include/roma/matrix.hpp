#pragma once

#include <Eigen/Dense>

#include <cstddef>

namespace roma {

/// n x N observations, one point per column. Entries are finite, n >= 2, N >= 2.
class DataMatrix {
public:
    explicit DataMatrix(Eigen::MatrixXd values);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(values_.rows()); }
    std::size_t count() const noexcept { return static_cast<std::size_t>(values_.cols()); }
    const Eigen::MatrixXd& values() const noexcept { return values_; }

private:
    Eigen::MatrixXd values_;
};

/// Same shape as the source DataMatrix with every column scaled to unit Euclidean norm.
/// Only obtainable through normalize_columns().
class NormalizedMatrix {
public:
    std::size_t dim() const noexcept { return static_cast<std::size_t>(values_.rows()); }
    std::size_t count() const noexcept { return static_cast<std::size_t>(values_.cols()); }
    const Eigen::MatrixXd& values() const noexcept { return values_; }

private:
    friend NormalizedMatrix normalize_columns(const DataMatrix& m);
    explicit NormalizedMatrix(Eigen::MatrixXd values) : values_(std::move(values)) {}

    Eigen::MatrixXd values_;
};

/// Divides every column by its Euclidean norm.
/// Throws ZeroColumn when a column norm is at most 1e-12 * sqrt(n).
NormalizedMatrix normalize_columns(const DataMatrix& m);

}  // namespace roma
