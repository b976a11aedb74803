// roma: command-line front end for outlier removal and the benchmark sweeps.
//
// Exit codes: 0 success, 2 usage, 3 parse error, 4 degenerate data.

#include "roma/bench/csv_io.hpp"
#include "roma/bench/experiments.hpp"
#include "roma/bench/grid.hpp"
#include "roma/bench/table.hpp"
#include "roma/cop.hpp"
#include "roma/detector.hpp"
#include "roma/errors.hpp"
#include "roma/synthetic.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitDegenerate = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    std::uint64_t seed = 0;
    double alpha = roma::kDefaultAlpha;
    std::string out;
    std::size_t trials = roma::bench::kDefaultTrials;
    std::optional<double> snr_db;
    std::string norm = "l2";
};

void emit(const GlobalOptions& g, const std::string& text) {
    if (g.out.empty() || g.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw UsageError("cannot open output file " + g.out);
    f << text;
}

std::string table_text(const roma::bench::Table& t) {
    std::ostringstream os;
    roma::bench::write_csv(os, t);
    return os.str();
}

template <class F>
auto usage_guard(F&& f) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const roma::InvalidArgument& e) {
        throw UsageError(e.what());
    }
}

roma::DataMatrix load_matrix(const std::string& path, bool header) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open input file " + path);
    Eigen::MatrixXd values = roma::bench::read_matrix_csv(in, header);
    try {
        return roma::DataMatrix(std::move(values));
    } catch (const roma::InvalidArgument& e) {
        throw DegenerateData(e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ROMA: parameter-free outlier removal for robust PCA"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--seed", g.seed, "64-bit seed for every random draw");
    app.add_option("--alpha", g.alpha, "failure probability of outlier identification");
    app.add_option("--out", g.out, "output path (default stdout)");
    app.add_option("--trials", g.trials, "Monte Carlo trials per grid cell");
    app.add_option("--snr-db", g.snr_db, "add Gaussian noise at this SNR (dB)");
    app.add_option("--norm", g.norm, "coherence norm for CoP")->check(CLI::IsMember({"l1", "l2"}));

    // threshold
    std::size_t th_n = 0, th_N = 0;
    auto* threshold = app.add_subcommand("threshold", "print the outlier threshold zeta");
    threshold->add_option("--n", th_n, "ambient dimension")->required();
    threshold->add_option("--N", th_N, "number of points")->required();

    // detect
    std::string det_input;
    bool det_header = false;
    auto* detect = app.add_subcommand("detect", "classify the columns of a CSV matrix");
    detect->add_option("input,--input", det_input, "CSV, one row per dimension")->required();
    detect->add_flag("--header", det_header, "skip the first line");

    // synth
    roma::SynthSpec syn;
    std::string syn_labels;
    auto* synth = app.add_subcommand("synth", "write a synthetic dataset as CSV");
    synth->add_option("--n", syn.n, "ambient dimension");
    synth->add_option("--N", syn.N, "number of points");
    synth->add_option("--r", syn.r, "subspace dimension");
    synth->add_option("--gamma", syn.gamma, "outlier fraction");
    synth->add_option("--labels", syn_labels, "JSON file for labels and truth basis");

    // validate-bound
    roma::bench::ValidateBoundConfig vb;
    std::string vb_gammas = "0.1:0.9:0.1";
    auto* validate = app.add_subcommand("validate-bound", "check q_O > zeta over an outlier-fraction grid");
    validate->add_option("--n", vb.n);
    validate->add_option("--N", vb.N);
    validate->add_option("--r", vb.r);
    validate->add_option("--gammas", vb_gammas, "list a,b,c or range start:stop:step");

    // phase-inliers
    roma::bench::PhaseInliersConfig pi;
    std::string pi_ratios = "0.02:0.24:0.02", pi_inliers = "100:1900:200";
    auto* phase_in = app.add_subcommand("phase-inliers", "inlier recovery over (r/n, N_I)");
    phase_in->add_option("--n", pi.n);
    phase_in->add_option("--N", pi.N);
    phase_in->add_option("--r-over-n", pi_ratios);
    phase_in->add_option("--inlier-counts", pi_inliers);

    // phase-subspace
    roma::bench::PhaseSubspaceConfig ps;
    std::string ps_inliers = "20,40,100,200", ps_outliers = "100:1000:100";
    auto* phase_sub = app.add_subcommand("phase-subspace", "exact subspace recovery over (N_I, N_O)");
    phase_sub->add_option("--n", ps.n);
    phase_sub->add_option("--r", ps.r);
    phase_sub->add_option("--inlier-counts", ps_inliers);
    phase_sub->add_option("--outlier-counts", ps_outliers);

    // compare
    roma::bench::CompareConfig cmp;
    std::optional<std::size_t> cmp_N;
    std::string cmp_gammas, cmp_inliers, cmp_outliers, cmp_ns = "30";
    auto* compare = app.add_subcommand("compare", "ROMA vs Coherence Pursuit");
    compare->add_option("--n", cmp.n);
    compare->add_option("--r", cmp.r);
    compare->add_option("--N", cmp_N, "total points, used with --gammas");
    compare->add_option("--gammas", cmp_gammas);
    compare->add_option("--inlier-counts", cmp_inliers);
    compare->add_option("--outlier-counts", cmp_outliers);
    compare->add_option("--ns", cmp_ns, "CoP sample counts");
    compare->add_flag("--timing", cmp.timing, "record wall-clock seconds (output no longer reproducible)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*threshold) {
            const double zeta = usage_guard([&] { return roma::roma_threshold({th_n, th_N, g.alpha}); });
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.10g\n", zeta);
            emit(g, buf);
        } else if (*detect) {
            usage_guard([&] { roma::ThresholdParams{3, 2, g.alpha}.validate(); });
            const roma::DataMatrix m = load_matrix(det_input, det_header);
            roma::RomaPartition p;
            try {
                p = roma::detect(m, g.alpha);
            } catch (const roma::InvalidArgument& e) {
                throw DegenerateData(e.what());
            }
            nlohmann::ordered_json j;
            j["threshold"] = p.threshold;
            j["cut_index"] = p.cut_index;
            j["all_outliers"] = p.all_outliers();
            j["outliers"] = p.outliers;
            j["inliers"] = p.inliers;
            j["scores"] = p.scores.scores;
            emit(g, j.dump(2) + "\n");
        } else if (*synth) {
            syn.seed = g.seed;
            syn.snr_db = g.snr_db;
            const roma::LabeledDataset data = usage_guard([&] { return roma::assemble_dataset(syn); });
            std::ostringstream os;
            roma::bench::write_matrix_csv(os, data.matrix.values());
            emit(g, os.str());
            if (!syn_labels.empty()) {
                nlohmann::ordered_json j;
                j["n"] = syn.n;
                j["N"] = syn.N;
                j["r"] = syn.r;
                j["gamma"] = syn.gamma;
                j["snr_db"] = syn.snr_db ? nlohmann::ordered_json(*syn.snr_db) : nlohmann::ordered_json();
                j["seed"] = syn.seed;
                j["inliers"] = data.true_inliers;
                j["outliers"] = data.true_outliers;
                const Eigen::MatrixXd& b = data.truth_basis.basis();
                auto& basis = j["basis"] = nlohmann::ordered_json::array();
                for (Eigen::Index c = 0; c < b.cols(); ++c)
                    basis.push_back(std::vector<double>(b.col(c).data(), b.col(c).data() + b.rows()));
                std::ofstream f(syn_labels, std::ios::binary);
                if (!f) throw UsageError("cannot open labels file " + syn_labels);
                f << j.dump(2) << "\n";
            }
        } else if (*validate) {
            vb.trials = g.trials;
            vb.seed = g.seed;
            vb.alpha = g.alpha;
            vb.snr_db = g.snr_db;
            const auto t = usage_guard([&] {
                vb.gammas = roma::bench::parse_real_grid(vb_gammas);
                return roma::bench::run_validate_bound(vb);
            });
            emit(g, table_text(t));
        } else if (*phase_in) {
            pi.trials = g.trials;
            pi.seed = g.seed;
            pi.alpha = g.alpha;
            const auto t = usage_guard([&] {
                pi.r_over_n = roma::bench::parse_real_grid(pi_ratios);
                pi.inlier_counts = roma::bench::parse_count_grid(pi_inliers);
                return roma::bench::run_phase_inliers(pi);
            });
            emit(g, table_text(t));
        } else if (*phase_sub) {
            ps.trials = g.trials;
            ps.seed = g.seed;
            ps.alpha = g.alpha;
            const auto t = usage_guard([&] {
                ps.inlier_counts = roma::bench::parse_count_grid(ps_inliers);
                ps.outlier_counts = roma::bench::parse_count_grid(ps_outliers);
                return roma::bench::run_phase_subspace(ps);
            });
            emit(g, table_text(t));
        } else if (*compare) {
            cmp.trials = g.trials;
            cmp.seed = g.seed;
            cmp.alpha = g.alpha;
            const auto t = usage_guard([&] {
                cmp.norm = roma::parse_coherence_norm(g.norm);
                cmp.n_s = roma::bench::parse_count_grid(cmp_ns);
                if (!cmp_gammas.empty()) {
                    if (!cmp_inliers.empty() || !cmp_outliers.empty())
                        throw roma::InvalidArgument("use either --gammas or count grids, not both");
                    cmp.points = roma::bench::points_from_gammas(roma::bench::parse_real_grid(cmp_gammas),
                                                                 cmp_N.value_or(1000));
                } else if (!cmp_inliers.empty() || !cmp_outliers.empty()) {
                    if (cmp_inliers.empty() || cmp_outliers.empty())
                        throw roma::InvalidArgument("--inlier-counts and --outlier-counts go together");
                    cmp.points = roma::bench::points_from_counts(
                        roma::bench::parse_count_grid(cmp_inliers),
                        roma::bench::parse_count_grid(cmp_outliers));
                } else if (cmp_N) {
                    cmp.points = roma::bench::points_from_gammas({0.25}, *cmp_N);
                }
                return roma::bench::run_compare(cmp);
            });
            emit(g, table_text(t));
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const roma::bench::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const roma::ZeroColumn& e) {
        std::cerr << "degenerate data: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const DegenerateData& e) {
        std::cerr << "degenerate data: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
