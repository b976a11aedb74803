#include "roma/bench/experiments.hpp"

#include "roma/errors.hpp"
#include "roma/parallel.hpp"
#include "roma/subspace.hpp"
#include "roma/synthetic.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

namespace roma::bench {
namespace {

using Clock = std::chrono::steady_clock;

void require_trials(std::size_t trials) {
    if (trials < 1) throw InvalidArgument("trials must be >= 1");
}

Rng trial_rng(std::uint64_t seed, std::size_t cell, std::size_t trial) {
    return Rng(derive_seed(derive_seed(seed, cell), trial));
}

std::size_t count_common(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::size_t common = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++common; ++ia; ++ib; }
    }
    return common;
}

bool contains_all(const std::vector<std::size_t>& superset, const std::vector<std::size_t>& subset) {
    return std::includes(superset.begin(), superset.end(), subset.begin(), subset.end());
}

SubspaceBasis basis_or_empty(const DataMatrix& m, const std::vector<std::size_t>& kept,
                             std::optional<std::size_t> rank_hint) {
    if (kept.empty()) return SubspaceBasis(Eigen::MatrixXd(m.dim(), 0));
    return recover_basis(select_columns(m.values(), kept), rank_hint);
}

double median(std::vector<double> v) {
    if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> points_from_gammas(const std::vector<double>& gammas,
                                                                    std::size_t N) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (double g : gammas) {
        SynthSpec spec;
        spec.N = N;
        spec.gamma = g;
        if (!(g >= 0.0 && g < 1.0)) throw InvalidArgument("gamma must lie in [0, 1)");
        const std::size_t in = spec.inlier_count();
        if (in < 1) throw InvalidArgument("gamma leaves no inliers");
        out.emplace_back(in, N - in);
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> points_from_counts(
    const std::vector<std::size_t>& inliers, const std::vector<std::size_t>& outliers) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t in : inliers)
        for (std::size_t o : outliers) out.emplace_back(in, o);
    return out;
}

Table run_validate_bound(const ValidateBoundConfig& cfg) {
    require_trials(cfg.trials);
    if (cfg.gammas.empty()) throw InvalidArgument("gamma grid is empty");
    for (double g : cfg.gammas)
        if (!(g > 0.0 && g < 1.0)) throw InvalidArgument("gamma grid must lie in (0, 1)");

    struct TrialResult {
        std::size_t inliers, outliers;
        double zeta, q_o, q_i_max;
        bool oip;
    };
    const std::size_t cells = cfg.gammas.size();
    std::vector<TrialResult> results(cells * cfg.trials);

    parallel_for(results.size(), [&](std::size_t task) {
        const std::size_t cell = task / cfg.trials;
        const std::size_t trial = task % cfg.trials;
        SynthSpec spec{cfg.n, cfg.N, cfg.r, cfg.gammas[cell], cfg.snr_db, cfg.seed};
        Rng rng = trial_rng(cfg.seed, cell, trial);
        const LabeledDataset data = assemble_dataset(spec, rng);
        const RomaPartition p = detect(data.matrix, cfg.alpha);

        double q_o = std::numeric_limits<double>::quiet_NaN();
        if (!data.true_outliers.empty()) {
            q_o = std::numeric_limits<double>::infinity();
            for (std::size_t i : data.true_outliers) q_o = std::min(q_o, p.scores.scores[i]);
        }
        double q_i = -std::numeric_limits<double>::infinity();
        for (std::size_t i : data.true_inliers) q_i = std::max(q_i, p.scores.scores[i]);

        results[task] = {data.true_inliers.size(), data.true_outliers.size(), p.threshold, q_o,
                         q_i, contains_all(p.outliers, data.true_outliers)};
    });

    Table table;
    table.columns = {"gamma", "trial", "n_inliers", "n_outliers", "zeta",
                     "q_O",   "q_I_max", "oip_pass", "mean_q_I_max"};
    for (std::size_t cell = 0; cell < cells; ++cell) {
        double sum = 0.0;
        for (std::size_t t = 0; t < cfg.trials; ++t) sum += results[cell * cfg.trials + t].q_i_max;
        const double mean_q_i = sum / static_cast<double>(cfg.trials);
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            const TrialResult& r = results[cell * cfg.trials + t];
            table.rows.push_back({cfg.gammas[cell], as_int(t), as_int(r.inliers),
                                  as_int(r.outliers), r.zeta, r.q_o, r.q_i_max,
                                  std::int64_t{r.oip ? 1 : 0}, mean_q_i});
        }
    }
    return table;
}

Table run_phase_inliers(const PhaseInliersConfig& cfg) {
    require_trials(cfg.trials);
    if (cfg.r_over_n.empty() || cfg.inlier_counts.empty()) throw InvalidArgument("empty grid");

    std::vector<std::size_t> ranks;
    for (double ratio : cfg.r_over_n) {
        const auto r = static_cast<std::size_t>(std::llround(ratio * static_cast<double>(cfg.n)));
        if (r < 1 || r >= cfg.n) throw InvalidArgument("r/n grid yields r outside [1, n)");
        ranks.push_back(r);
    }
    for (std::size_t in : cfg.inlier_counts)
        if (in < 1 || in > cfg.N) throw InvalidArgument("inlier counts must lie in [1, N]");

    const std::size_t cells = ranks.size() * cfg.inlier_counts.size();
    struct TrialResult {
        double recovery;
        bool oip;
    };
    std::vector<TrialResult> results(cells * cfg.trials);

    parallel_for(results.size(), [&](std::size_t task) {
        const std::size_t cell = task / cfg.trials;
        const std::size_t trial = task % cfg.trials;
        const std::size_t r = ranks[cell / cfg.inlier_counts.size()];
        const std::size_t in = cfg.inlier_counts[cell % cfg.inlier_counts.size()];
        Rng rng = trial_rng(cfg.seed, cell, trial);
        const LabeledDataset data = assemble_dataset(cfg.n, r, in, cfg.N - in, std::nullopt, rng);
        const RomaPartition p = detect(data.matrix, cfg.alpha);
        const double kept = static_cast<double>(count_common(p.inliers, data.true_inliers));
        results[task] = {100.0 * kept / static_cast<double>(in),
                         contains_all(p.outliers, data.true_outliers)};
    });

    Table table;
    table.columns = {"r_over_n", "r", "n_inliers", "n_outliers", "trials",
                     "inlier_recovery_pct", "oip_pct"};
    for (std::size_t cell = 0; cell < cells; ++cell) {
        const std::size_t ri = cell / cfg.inlier_counts.size();
        const std::size_t in = cfg.inlier_counts[cell % cfg.inlier_counts.size()];
        double recovery = 0.0;
        std::size_t oip = 0;
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            recovery += results[cell * cfg.trials + t].recovery;
            oip += results[cell * cfg.trials + t].oip ? 1 : 0;
        }
        const double trials = static_cast<double>(cfg.trials);
        table.rows.push_back({cfg.r_over_n[ri], as_int(ranks[ri]), as_int(in), as_int(cfg.N - in),
                              as_int(cfg.trials), recovery / trials,
                              100.0 * static_cast<double>(oip) / trials});
    }
    return table;
}

Table run_phase_subspace(const PhaseSubspaceConfig& cfg) {
    require_trials(cfg.trials);
    const auto points = points_from_counts(cfg.inlier_counts, cfg.outlier_counts);
    if (points.empty()) throw InvalidArgument("empty grid");
    for (const auto& [in, out] : points)
        if (in < 1 || in + out < 2) throw InvalidArgument("each cell needs >= 1 inlier and >= 2 points");

    std::vector<double> lre(points.size() * cfg.trials);
    parallel_for(lre.size(), [&](std::size_t task) {
        const std::size_t cell = task / cfg.trials;
        const std::size_t trial = task % cfg.trials;
        const auto [in, out] = points[cell];
        Rng rng = trial_rng(cfg.seed, cell, trial);
        const LabeledDataset data = assemble_dataset(cfg.n, cfg.r, in, out, std::nullopt, rng);
        const RomaPartition p = detect(data.matrix, cfg.alpha);
        lre[task] = log_recovery_error(data.truth_basis,
                                       basis_or_empty(data.matrix, p.inliers, std::nullopt));
    });

    Table table;
    table.columns = {"n_inliers", "n_outliers", "trials", "success_pct", "median_lre"};
    for (std::size_t cell = 0; cell < points.size(); ++cell) {
        const auto first = lre.begin() + static_cast<std::ptrdiff_t>(cell * cfg.trials);
        std::vector<double> cell_lre(first, first + static_cast<std::ptrdiff_t>(cfg.trials));
        const auto ok = std::count_if(cell_lre.begin(), cell_lre.end(),
                                      [](double v) { return v < kRecoveredLre; });
        table.rows.push_back({as_int(points[cell].first), as_int(points[cell].second),
                              as_int(cfg.trials),
                              100.0 * static_cast<double>(ok) / static_cast<double>(cfg.trials),
                              median(std::move(cell_lre))});
    }
    return table;
}

Table run_compare(const CompareConfig& cfg) {
    require_trials(cfg.trials);
    if (cfg.points.empty()) throw InvalidArgument("empty grid");
    if (cfg.n_s.empty()) throw InvalidArgument("n_s grid is empty");
    for (std::size_t ns : cfg.n_s)
        if (ns < 1) throw InvalidArgument("n_s must be >= 1");

    // one ROMA row plus one row per n_s for every (cell, trial)
    const std::size_t per_trial = 1 + cfg.n_s.size();
    std::vector<std::vector<Cell>> rows(cfg.points.size() * cfg.trials * per_trial);

    parallel_for(cfg.points.size() * cfg.trials, [&](std::size_t task) {
        const std::size_t cell = task / cfg.trials;
        const std::size_t trial = task % cfg.trials;
        const auto [in, out] = cfg.points[cell];
        Rng rng = trial_rng(cfg.seed, cell, trial);
        const LabeledDataset data = assemble_dataset(cfg.n, cfg.r, in, out, std::nullopt, rng);
        const double gamma = static_cast<double>(out) / static_cast<double>(in + out);

        auto emit = [&](std::size_t slot, Cell algorithm, Cell ns, Cell norm, double lre,
                        double seconds, std::vector<std::size_t> kept) {
            std::sort(kept.begin(), kept.end());
            const std::size_t inliers_kept = count_common(kept, data.true_inliers);
            const std::size_t outliers_kept = kept.size() - inliers_kept;
            Cell runtime = cfg.timing ? Cell{seconds} : Cell{std::string("NA")};
            rows[task * per_trial + slot] = {std::move(algorithm), std::move(ns), std::move(norm),
                                             gamma, as_int(in), as_int(out), as_int(trial), lre,
                                             std::move(runtime), as_int(inliers_kept),
                                             as_int(outliers_kept), as_int(in - inliers_kept),
                                             as_int(out - outliers_kept)};
        };

        {
            const auto start = Clock::now();
            const RomaPartition p = detect(data.matrix, cfg.alpha);
            const SubspaceBasis est = basis_or_empty(data.matrix, p.inliers, std::nullopt);
            const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
            emit(0, std::string("ROMA"), std::string("NA"), std::string("NA"),
                 log_recovery_error(data.truth_basis, est), seconds, p.inliers);
        }
        for (std::size_t k = 0; k < cfg.n_s.size(); ++k) {
            const std::size_t ns = std::min(cfg.n_s[k], in + out);
            const auto start = Clock::now();
            CopResult res = cop_recover(data.matrix, ns, cfg.norm, cfg.r);
            const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
            emit(1 + k, std::string("CoP"), as_int(cfg.n_s[k]), std::string(to_string(cfg.norm)),
                 log_recovery_error(data.truth_basis, res.basis), seconds, std::move(res.chosen));
        }
    });

    Table table;
    table.columns = {"algorithm", "n_s", "norm", "gamma", "n_inliers", "n_outliers", "trial",
                     "lre", "runtime_seconds", "inliers_kept", "outliers_kept",
                     "inliers_dropped", "outliers_dropped"};
    table.rows = std::move(rows);
    return table;
}

}  // namespace roma::bench
