#pragma once

#include "roma/bench/table.hpp"
#include "roma/cop.hpp"
#include "roma/detector.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace roma::bench {

inline constexpr std::size_t kDefaultTrials = 200;

// Every experiment gives grid cell c, trial t the generator
// derive_seed(derive_seed(seed, c), t), so rows do not depend on the worker count.

/// Outlier-score bound check over a grid of outlier fractions.
/// Columns: gamma, trial, n_inliers, n_outliers, zeta, q_O, q_I_max, oip_pass,
/// mean_q_I_max (mean of q_I_max over the trials of that gamma).
struct ValidateBoundConfig {
    std::size_t n = 100;
    std::size_t N = 1000;
    std::size_t r = 10;
    std::vector<double> gammas{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    std::size_t trials = kDefaultTrials;
    std::uint64_t seed = 0;
    double alpha = kDefaultAlpha;
    std::optional<double> snr_db;
};
Table run_validate_bound(const ValidateBoundConfig& cfg);

/// Percentage of true inliers kept over (r/n, N_I) with N fixed.
/// Columns: r_over_n, r, n_inliers, n_outliers, trials, inlier_recovery_pct, oip_pct.
struct PhaseInliersConfig {
    std::size_t n = 300;
    std::size_t N = 2000;
    std::vector<double> r_over_n{0.02, 0.06, 0.1, 0.14, 0.18, 0.22};
    std::vector<std::size_t> inlier_counts{100, 500, 900, 1300, 1700};
    std::size_t trials = kDefaultTrials;
    std::uint64_t seed = 0;
    double alpha = kDefaultAlpha;
};
Table run_phase_inliers(const PhaseInliersConfig& cfg);

/// Percentage of trials with LRE below -5 after outlier removal and PCA.
/// Columns: n_inliers, n_outliers, trials, success_pct, median_lre.
struct PhaseSubspaceConfig {
    std::size_t n = 100;
    std::size_t r = 10;
    std::vector<std::size_t> inlier_counts{20, 40, 100, 200};
    std::vector<std::size_t> outlier_counts{100, 500, 1000};
    std::size_t trials = kDefaultTrials;
    std::uint64_t seed = 0;
    double alpha = kDefaultAlpha;
};
inline constexpr double kRecoveredLre = -5.0;
Table run_phase_subspace(const PhaseSubspaceConfig& cfg);

/// ROMA against Coherence Pursuit on identical datasets.
/// Columns: algorithm, n_s, norm, gamma, n_inliers, n_outliers, trial, lre,
/// runtime_seconds, inliers_kept, outliers_kept, inliers_dropped, outliers_dropped.
/// For ROMA n_s and norm are "NA". runtime_seconds is "NA" unless `timing` is set,
/// keeping the default output reproducible.
struct CompareConfig {
    std::size_t n = 100;
    std::size_t r = 10;
    std::vector<std::pair<std::size_t, std::size_t>> points{{750, 250}};  // (inliers, outliers)
    std::vector<std::size_t> n_s{30};
    CoherenceNorm norm = CoherenceNorm::l2;
    std::size_t trials = kDefaultTrials;
    std::uint64_t seed = 0;
    double alpha = kDefaultAlpha;
    bool timing = false;
};
Table run_compare(const CompareConfig& cfg);

/// (inliers, outliers) pairs for each gamma at total N, using the synthetic
/// generator's rounding of (1 - gamma) N.
std::vector<std::pair<std::size_t, std::size_t>> points_from_gammas(const std::vector<double>& gammas,
                                                                    std::size_t N);

/// Cartesian product of inlier and outlier counts.
std::vector<std::pair<std::size_t, std::size_t>> points_from_counts(
    const std::vector<std::size_t>& inliers, const std::vector<std::size_t>& outliers);

}  // namespace roma::bench
