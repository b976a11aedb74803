#include "roma/detector.hpp"

#include "roma/errors.hpp"
#include "roma/parallel.hpp"
#include "roma/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace roma {

std::optional<double> RomaPartition::min_outlier_score() const {
    if (cut_index == 0) return std::nullopt;
    return scores.sorted_scores[cut_index - 1];
}

std::optional<double> RomaPartition::max_inlier_score() const {
    if (cut_index >= scores.sorted_scores.size()) return std::nullopt;
    return scores.sorted_scores[cut_index];
}

RomaPartition partition_scores(AngleScores scores, double threshold) {
    RomaPartition p;
    p.threshold = threshold;
    // sorted_scores is non-increasing, so the points above threshold form a prefix
    const auto& sorted = scores.sorted_scores;
    p.cut_index = static_cast<std::size_t>(
        std::partition_point(sorted.begin(), sorted.end(),
                             [&](double q) { return q > threshold; }) -
        sorted.begin());
    p.outliers.assign(scores.order.begin(),
                      scores.order.begin() + static_cast<std::ptrdiff_t>(p.cut_index));
    p.inliers.assign(scores.order.begin() + static_cast<std::ptrdiff_t>(p.cut_index),
                     scores.order.end());
    std::sort(p.outliers.begin(), p.outliers.end());
    std::sort(p.inliers.begin(), p.inliers.end());
    p.scores = std::move(scores);
    return p;
}

RomaPartition detect(const DataMatrix& m, double alpha) {
    const double zeta = roma_threshold({m.dim(), m.count(), alpha});
    return partition_scores(acute_angle_scores(normalize_columns(m)), zeta);
}

bool separation_condition(std::size_t n, std::size_t r) {
    if (r < 1 || r >= n) throw InvalidArgument("separation_condition needs n > r >= 1");
    const double bound =
        2.0 + 2.0 * (static_cast<double>(n) - 2.0) / (9.0 * std::numbers::pi);
    return static_cast<double>(r) < bound;
}

double non_erp_inlier_bound(const NonErpQuery& q, CdfMode mode, AngleCdf cdf) {
    if (!(q.zeta > 0.0 && q.zeta < std::numbers::pi / 2.0)) {
        throw InvalidArgument("zeta must lie in (0, pi/2)");
    }
    const AngleDistribution inlier_dist(static_cast<double>(q.r));
    const AngleDistribution outlier_dist(static_cast<double>(q.n));

    auto cdf_at = [&](const AngleDistribution& dist) {
        return cdf == AngleCdf::acute ? phi_cdf(dist, q.zeta, mode)
                                      : theta_cdf(dist, q.zeta, mode);
    };
    const double f_in = cdf_at(inlier_dist);
    const double f_out = cdf_at(outlier_dist);
    if (!(f_in > 0.0)) throw DegenerateCdf("inlier angle cdf underflows at zeta");
    return 1.0 + (1.0 - q.alpha) / f_in - q.gamma * static_cast<double>(q.N) * f_out / f_in;
}

ErpEstimate erp_failure_estimate(const ErpQuery& q) {
    if (q.trials < 100) throw InvalidArgument("erp estimate needs at least 100 trials");
    SynthSpec spec{q.n, q.N, q.r, q.gamma, std::nullopt, q.seed};
    spec.validate();
    const std::size_t inliers = spec.inlier_count();
    const std::size_t outliers = spec.outlier_count();

    // 1 when min_{j != k} theta_kj > zeta for the inlier k of that trial
    std::vector<unsigned char> exceeded(q.trials, 0);
    parallel_for(q.trials, [&](std::size_t t) {
        Rng rng(derive_seed(q.seed, t));
        const SubspaceBasis basis = sample_subspace_basis(q.n, q.r, rng);
        const Eigen::MatrixXd in_pts = sample_inliers(basis, inliers, rng);
        double max_cos = -1.0;
        const Eigen::VectorXd xk = in_pts.col(0);
        for (Eigen::Index j = 1; j < in_pts.cols(); ++j)
            max_cos = std::max(max_cos, xk.dot(in_pts.col(j)));
        if (outliers > 0) {
            const Eigen::MatrixXd out_pts = sample_outliers(q.n, outliers, rng);
            max_cos = std::max(max_cos, (out_pts.transpose() * xk).maxCoeff());
        }
        const double min_theta = std::acos(std::clamp(max_cos, -1.0, 1.0));
        exceeded[t] = min_theta > q.zeta ? 1 : 0;
    });

    std::size_t hits = 0;
    for (unsigned char e : exceeded) hits += e;
    const double trials = static_cast<double>(q.trials);
    const double p_hat = static_cast<double>(hits) / trials;
    const double bound = std::clamp(static_cast<double>(inliers) * p_hat, 0.0, 1.0);
    return {bound, p_hat, std::sqrt(p_hat * (1.0 - p_hat) / trials), inliers};
}

GuaranteeReport guarantee_report(std::size_t n, std::size_t r, std::size_t N, double gamma,
                                 double alpha, std::size_t trials, std::uint64_t seed,
                                 CdfMode mode) {
    const double zeta = roma_threshold({n, N, alpha});
    GuaranteeReport report{};
    report.separation_ok = separation_condition(n, r);
    report.non_erp_inlier_bound = non_erp_inlier_bound({n, r, N, gamma, alpha, zeta}, mode);
    report.erp_failure_prob_bound =
        erp_failure_prob_bound({n, r, N, gamma, zeta, trials, seed});
    return report;
}

}  // namespace roma
