#include "roma/synthetic.hpp"

#include "roma/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace roma {
namespace {

Eigen::MatrixXd gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXd g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    // column by column so the stream layout matches the column-major matrix
    for (Eigen::Index c = 0; c < g.cols(); ++c)
        for (Eigen::Index k = 0; k < g.rows(); ++k) g(k, c) = normal(rng);
    return g;
}

void normalize_in_place(Eigen::MatrixXd& m) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        double norm = m.col(c).norm();
        // a Gaussian column is zero with probability 0
        if (norm > 0.0) m.col(c) /= norm;
    }
}

}  // namespace

void SynthSpec::validate() const {
    if (r < 3 || r >= n) {
        throw InvalidArgument("need 3 <= r < n, got r = " + std::to_string(r) +
                              ", n = " + std::to_string(n));
    }
    if (!(gamma >= 0.0 && gamma < 1.0)) throw InvalidArgument("gamma must lie in [0, 1)");
    if (N < 2) throw InvalidArgument("need N >= 2");
    if (inlier_count() < 1) throw InvalidArgument("spec yields no inliers");
    if (snr_db && !std::isfinite(*snr_db)) throw InvalidArgument("snr_db must be finite");
}

std::size_t SynthSpec::inlier_count() const {
    const double exact = (1.0 - gamma) * static_cast<double>(N);
    return std::min(N, static_cast<std::size_t>(std::floor(exact + 0.5)));
}

SubspaceBasis sample_subspace_basis(std::size_t n, std::size_t r, Rng& rng) {
    if (r < 1 || r >= n) throw InvalidArgument("sample_subspace_basis needs 1 <= r < n");
    const Eigen::MatrixXd g = gaussian_matrix(n, r, rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(g.rows(), g.cols());
    const Eigen::MatrixXd& packed = qr.matrixQR();
    // sign-fix so that diag(R) > 0, which makes Q Haar distributed
    for (Eigen::Index c = 0; c < q.cols(); ++c)
        if (packed(c, c) < 0.0) q.col(c) = -q.col(c);
    return SubspaceBasis(std::move(q));
}

Eigen::MatrixXd sample_inliers(const SubspaceBasis& basis, std::size_t count, Rng& rng) {
    if (count < 1) throw InvalidArgument("sample_inliers needs count >= 1");
    Eigen::MatrixXd coeffs = gaussian_matrix(basis.rank(), count, rng);
    normalize_in_place(coeffs);
    Eigen::MatrixXd points = basis.basis() * coeffs;
    // re-normalize to absorb rounding of the basis product
    normalize_in_place(points);
    return points;
}

Eigen::MatrixXd sample_outliers(std::size_t n, std::size_t count, Rng& rng) {
    if (count < 1) throw InvalidArgument("sample_outliers needs count >= 1");
    Eigen::MatrixXd points = gaussian_matrix(n, count, rng);
    normalize_in_place(points);
    return points;
}

double noise_variance(std::size_t n, double snr_db) {
    return std::pow(10.0, -snr_db / 10.0) / static_cast<double>(n);
}

LabeledDataset assemble_dataset(std::size_t n, std::size_t r, std::size_t inliers,
                                std::size_t outliers, std::optional<double> snr_db, Rng& rng) {
    if (inliers < 1) throw InvalidArgument("dataset needs at least one inlier");
    const std::size_t total = inliers + outliers;

    SubspaceBasis basis = sample_subspace_basis(n, r, rng);
    const Eigen::MatrixXd in_pts = sample_inliers(basis, inliers, rng);
    Eigen::MatrixXd out_pts;
    if (outliers > 0) out_pts = sample_outliers(n, outliers, rng);

    std::vector<std::size_t> position(total);
    std::iota(position.begin(), position.end(), std::size_t{0});
    std::shuffle(position.begin(), position.end(), rng);

    Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(total));
    std::vector<std::size_t> in_idx, out_idx;
    in_idx.reserve(inliers);
    out_idx.reserve(outliers);
    for (std::size_t k = 0; k < total; ++k) {
        const auto dst = static_cast<Eigen::Index>(position[k]);
        if (k < inliers) {
            m.col(dst) = in_pts.col(static_cast<Eigen::Index>(k));
            in_idx.push_back(position[k]);
        } else {
            m.col(dst) = out_pts.col(static_cast<Eigen::Index>(k - inliers));
            out_idx.push_back(position[k]);
        }
    }
    std::sort(in_idx.begin(), in_idx.end());
    std::sort(out_idx.begin(), out_idx.end());

    if (snr_db) {
        const double sigma = std::sqrt(noise_variance(n, *snr_db));
        m += sigma * gaussian_matrix(n, total, rng);
    }

    return LabeledDataset{DataMatrix(std::move(m)), std::move(in_idx), std::move(out_idx),
                          std::move(basis)};
}

LabeledDataset assemble_dataset(const SynthSpec& spec, Rng& rng) {
    spec.validate();
    return assemble_dataset(spec.n, spec.r, spec.inlier_count(), spec.outlier_count(),
                            spec.snr_db, rng);
}

LabeledDataset assemble_dataset(const SynthSpec& spec) {
    Rng rng(spec.seed);
    return assemble_dataset(spec, rng);
}

}  // namespace roma
