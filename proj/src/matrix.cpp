#include "roma/matrix.hpp"

#include "roma/errors.hpp"

#include <cmath>
#include <string>

namespace roma {

DataMatrix::DataMatrix(Eigen::MatrixXd values) : values_(std::move(values)) {
    if (values_.rows() < 2 || values_.cols() < 2) {
        throw InvalidArgument("data matrix must be at least 2 x 2, got " +
                              std::to_string(values_.rows()) + " x " +
                              std::to_string(values_.cols()));
    }
    if (!values_.allFinite()) throw InvalidArgument("data matrix has non-finite entries");
}

NormalizedMatrix normalize_columns(const DataMatrix& m) {
    const Eigen::MatrixXd& v = m.values();
    const Eigen::Index n = v.rows();
    const double min_norm = 1e-12 * std::sqrt(static_cast<double>(n));

    Eigen::MatrixXd out(n, v.cols());
    for (Eigen::Index c = 0; c < v.cols(); ++c) {
        const double* col = v.col(c).data();
        double sq = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) sq += col[k] * col[k];
        const double norm = std::sqrt(sq);
        if (!(norm > min_norm)) throw ZeroColumn(static_cast<std::size_t>(c));
        double* dst = out.col(c).data();
        for (Eigen::Index k = 0; k < n; ++k) dst[k] = col[k] / norm;
    }
    return NormalizedMatrix(std::move(out));
}

}  // namespace roma
