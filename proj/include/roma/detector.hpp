#pragma once

#include "roma/angle_core.hpp"
#include "roma/matrix.hpp"
#include "roma/threshold_stats.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace roma {

inline constexpr double kDefaultAlpha = 0.05;

/// Outcome of outlier removal.
///
/// The first cut_index entries of scores.order are the estimated outliers, the rest
/// the estimated inliers. Every outlier scores above `threshold`, every inlier at or
/// below it.
struct RomaPartition {
    std::vector<std::size_t> outliers;  // ascending
    std::vector<std::size_t> inliers;   // ascending
    double threshold = 0.0;
    std::size_t cut_index = 0;
    AngleScores scores;

    /// Every point was flagged; no subspace can be recovered from the inliers.
    bool all_outliers() const noexcept { return inliers.empty(); }

    /// Smallest score among estimated outliers, absent when there are none.
    std::optional<double> min_outlier_score() const;
    /// Largest score among estimated inliers, absent when there are none.
    std::optional<double> max_inlier_score() const;
};

/// Parameter-free outlier removal: normalize, score every point by its minimum acute
/// angle, and flag each point whose score exceeds roma_threshold({n, N, alpha}).
/// Deterministic; throws ZeroColumn for degenerate columns.
RomaPartition detect(const DataMatrix& m, double alpha = kDefaultAlpha);

/// Partition for precomputed scores and threshold.
RomaPartition partition_scores(AngleScores scores, double threshold);

/// True iff r < 2 + 2 (n - 2) / (9 pi), the regime where inlier and outlier scores
/// separate well.
bool separation_condition(std::size_t n, std::size_t r);

/// Which angle cdf feeds the non-ERP bound. `acute` uses F_phi = 2 F_theta, the law
/// of the angles the detector actually thresholds. `principal` plugs in F_theta,
/// which reproduces the commonly quoted worked values of the bound.
enum class AngleCdf { acute, principal };

struct NonErpQuery {
    std::size_t n;
    std::size_t r;
    std::size_t N;
    double gamma;
    double alpha;
    double zeta;
};

/// Right-hand side of
///   N_I < 1 + (1 - alpha) / F_I(zeta) - gamma N F_O(zeta) / F_I(zeta),
/// below which the detector cannot recover all inliers with probability 1 - alpha.
/// F_I uses d = r, F_O uses d = n. Throws DegenerateCdf if F_I(zeta) == 0.
double non_erp_inlier_bound(const NonErpQuery& q, CdfMode mode = CdfMode::gauss,
                            AngleCdf cdf = AngleCdf::acute);

struct ErpQuery {
    std::size_t n;
    std::size_t r;
    std::size_t N;
    double gamma;
    double zeta;
    std::size_t trials;
    std::uint64_t seed;
};

struct ErpEstimate {
    double bound;         // min(1, N_I * p_hat)
    double p_hat;         // fraction of trials with min_j theta_kj > zeta
    double p_hat_stderr;  // binomial standard error of p_hat
    std::size_t inliers;  // N_I
};

/// Monte Carlo estimate of N_I * P(min_{j != k} theta_kj > zeta) for an inlier k,
/// the probability bound on failing exact inlier recovery. Requires trials >= 100.
ErpEstimate erp_failure_estimate(const ErpQuery& q);

inline double erp_failure_prob_bound(const ErpQuery& q) { return erp_failure_estimate(q).bound; }

struct GuaranteeReport {
    bool separation_ok;
    double non_erp_inlier_bound;
    double erp_failure_prob_bound;
};

GuaranteeReport guarantee_report(std::size_t n, std::size_t r, std::size_t N, double gamma,
                                 double alpha, std::size_t trials, std::uint64_t seed,
                                 CdfMode mode = CdfMode::gauss);

}  // namespace roma
