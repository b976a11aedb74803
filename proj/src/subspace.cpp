#include "roma/subspace.hpp"

#include "roma/errors.hpp"

#include <algorithm>
#include <cmath>

namespace roma {

SubspaceBasis::SubspaceBasis(Eigen::MatrixXd basis) : basis_(std::move(basis)) {
    if (basis_.rows() == 0) throw InvalidArgument("subspace basis needs n >= 1");
    if (basis_.cols() > basis_.rows()) throw InvalidArgument("subspace rank exceeds dimension");
    const Eigen::MatrixXd gram = basis_.transpose() * basis_;
    const double err =
        (gram - Eigen::MatrixXd::Identity(basis_.cols(), basis_.cols())).norm();
    if (!(err <= 1e-10)) throw InvalidArgument("subspace basis is not orthonormal");
}

SubspaceBasis recover_basis(const Eigen::MatrixXd& points, std::optional<std::size_t> rank_hint) {
    if (points.cols() == 0) throw EmptyInlierSet();
    const std::size_t n = static_cast<std::size_t>(points.rows());
    const std::size_t count = static_cast<std::size_t>(points.cols());

    Eigen::BDCSVD<Eigen::MatrixXd> svd(points, Eigen::ComputeThinU);
    const Eigen::VectorXd& sigma = svd.singularValues();

    std::size_t rank = 0;
    if (rank_hint) {
        rank = std::min({*rank_hint, count, n});
    } else if (sigma.size() > 0 && sigma(0) > 0.0) {
        const double cutoff =
            1e-8 * static_cast<double>(std::max(n, count)) * sigma(0);
        while (rank < static_cast<std::size_t>(sigma.size()) &&
               sigma(static_cast<Eigen::Index>(rank)) > cutoff) {
            ++rank;
        }
    }
    return SubspaceBasis(svd.matrixU().leftCols(static_cast<Eigen::Index>(rank)));
}

Eigen::MatrixXd select_columns(const Eigen::MatrixXd& m, std::span<const std::size_t> indices) {
    Eigen::MatrixXd out(m.rows(), static_cast<Eigen::Index>(indices.size()));
    for (std::size_t k = 0; k < indices.size(); ++k) {
        out.col(static_cast<Eigen::Index>(k)) = m.col(static_cast<Eigen::Index>(indices[k]));
    }
    return out;
}

double log_recovery_error(const SubspaceBasis& truth, const SubspaceBasis& estimate) {
    if (truth.dim() != estimate.dim()) {
        throw DimensionMismatch("truth and estimate live in different ambient dimensions");
    }
    if (truth.rank() == 0) throw InvalidArgument("truth basis must have rank >= 1");
    const Eigen::MatrixXd& u = truth.basis();
    const Eigen::MatrixXd& uh = estimate.basis();
    const Eigen::MatrixXd residual = u - uh * (uh.transpose() * u);
    return std::log10(residual.norm() / u.norm());
}

}  // namespace roma
