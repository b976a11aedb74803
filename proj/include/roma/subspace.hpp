#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <span>

namespace roma {

/// n x r matrix with orthonormal columns (r may be 0 for the trivial subspace).
class SubspaceBasis {
public:
    /// Throws InvalidArgument unless basis^T basis = I within 1e-10 (Frobenius).
    explicit SubspaceBasis(Eigen::MatrixXd basis);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(basis_.rows()); }
    std::size_t rank() const noexcept { return static_cast<std::size_t>(basis_.cols()); }
    const Eigen::MatrixXd& basis() const noexcept { return basis_; }

private:
    Eigen::MatrixXd basis_;
};

/// Left singular vectors of `points` (columns are points).
///
/// Without a hint the retained rank counts singular values above
/// 1e-8 * max(n, #points) * sigma_max; with a hint it is min(hint, #points, n).
/// Throws EmptyInlierSet for a matrix without columns.
SubspaceBasis recover_basis(const Eigen::MatrixXd& points,
                            std::optional<std::size_t> rank_hint = std::nullopt);

/// Columns of `m` at `indices`, in the given order.
Eigen::MatrixXd select_columns(const Eigen::MatrixXd& m, std::span<const std::size_t> indices);

/// log10( ||U - Uhat Uhat^T U||_F / ||U||_F ).
/// Throws DimensionMismatch if the ambient dimensions differ, InvalidArgument for an
/// empty truth basis.
double log_recovery_error(const SubspaceBasis& truth, const SubspaceBasis& estimate);

}  // namespace roma
