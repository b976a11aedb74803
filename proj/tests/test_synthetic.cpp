#include "oracles.hpp"

#include "roma/errors.hpp"
#include "roma/synthetic.hpp"
#include "roma/threshold_stats.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace roma;

namespace {

double ks_angles(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double d) {
    std::vector<double> theta;
    theta.reserve(static_cast<std::size_t>(a.cols()));
    for (Eigen::Index k = 0; k < a.cols(); ++k) theta.push_back(oracle::principal_angle(a.col(k), b.col(k)));
    const AngleDistribution dist(d);
    return oracle::ks_statistic(theta, [&](double x) { return theta_cdf_exact(dist, x); });
}

}  // namespace

TEST_CASE("subspace bases are orthonormal") {
    Rng rng(1);
    for (std::size_t r : {1u, 3u, 10u}) {
        const SubspaceBasis b = sample_subspace_basis(20, r, rng);
        CHECK(b.rank() == r);
        const Eigen::MatrixXd gram = b.basis().transpose() * b.basis();
        CHECK((gram - Eigen::MatrixXd::Identity(long(r), long(r))).norm() <= 1e-10);
    }
    CHECK_THROWS_AS(sample_subspace_basis(5, 5, rng), InvalidArgument);
}

TEST_CASE("average Haar projector is (r/n) I") {
    constexpr std::size_t n = 6, r = 2, samples = 10000;
    Rng rng(2);
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n), sum_sq = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t k = 0; k < samples; ++k) {
        const SubspaceBasis b = sample_subspace_basis(n, r, rng);
        const Eigen::MatrixXd p = b.basis() * b.basis().transpose();
        sum += p;
        sum_sq += p.cwiseProduct(p);
    }
    const Eigen::MatrixXd mean = sum / double(samples);
    const Eigen::MatrixXd var = sum_sq / double(samples) - mean.cwiseProduct(mean);
    for (Eigen::Index i = 0; i < long(n); ++i)
        for (Eigen::Index j = 0; j < long(n); ++j) {
            const double expected = i == j ? double(r) / n : 0.0;
            const double se = std::sqrt(var(i, j) / samples);
            CHECK(std::abs(mean(i, j) - expected) <= 3.0 * se + 1e-12);
        }
}

TEST_CASE("inliers are unit vectors inside the subspace") {
    Rng rng(3);
    const SubspaceBasis b = sample_subspace_basis(30, 4, rng);
    const Eigen::MatrixXd x = sample_inliers(b, 200, rng);
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
        CHECK(x.col(c).norm() == doctest::Approx(1.0).epsilon(1e-14));
        const Eigen::VectorXd resid = x.col(c) - b.basis() * (b.basis().transpose() * x.col(c));
        CHECK(resid.norm() <= 1e-10);
    }
    CHECK_THROWS_AS(sample_inliers(b, 0, rng), InvalidArgument);
}

TEST_CASE("inlier-inlier angles follow h with d = r") {
    constexpr std::size_t pairs = 100000;
    Rng rng(4);
    const SubspaceBasis b = sample_subspace_basis(40, 3, rng);
    const Eigen::MatrixXd a = sample_inliers(b, pairs, rng), c = sample_inliers(b, pairs, rng);
    CHECK(ks_angles(a, c, 3) <= oracle::ks_critical(pairs, 0.01));
}

TEST_CASE("outliers are uniform on the sphere") {
    Rng rng(5);
    constexpr std::size_t pairs = 20000, n = 25;
    const Eigen::MatrixXd a = sample_outliers(n, pairs, rng), c = sample_outliers(n, pairs, rng);
    for (Eigen::Index k = 0; k < 100; ++k) CHECK(a.col(k).norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ks_angles(a, c, n) <= oracle::ks_critical(pairs, 0.01));

    // 10^6 coordinates; each has variance 1/n
    const Eigen::MatrixXd big = sample_outliers(10, 100000, rng);
    const double mean = big.mean();
    CHECK(std::abs(mean) <= 4.0 * std::sqrt(0.1 / double(big.size())));
}

TEST_CASE("dataset assembly") {
    SUBCASE("gamma = 0 gives only inliers") {
        const LabeledDataset d = assemble_dataset(SynthSpec{20, 50, 4, 0.0, std::nullopt, 1});
        CHECK(d.true_inliers.size() == 50);
        CHECK(d.true_outliers.empty());
    }
    SUBCASE("counts follow round-half-up") {
        const LabeledDataset d = assemble_dataset(SynthSpec{100, 1000, 10, 0.6, std::nullopt, 1});
        CHECK(d.true_inliers.size() == 400);
        CHECK(d.true_outliers.size() == 600);
        CHECK(SynthSpec{100, 45, 10, 0.5, std::nullopt, 0}.inlier_count() == 23);
        CHECK(d.truth_basis.rank() == 10);
    }
    SUBCASE("labels partition the columns and match the geometry") {
        const LabeledDataset d = assemble_dataset(SynthSpec{30, 120, 5, 0.3, std::nullopt, 2});
        std::vector<std::size_t> all = d.true_inliers;
        all.insert(all.end(), d.true_outliers.begin(), d.true_outliers.end());
        std::sort(all.begin(), all.end());
        for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i] == i);
        const Eigen::MatrixXd& u = d.truth_basis.basis();
        for (std::size_t i : d.true_inliers) {
            const Eigen::VectorXd x = d.matrix.values().col(long(i));
            CHECK((x - u * (u.transpose() * x)).norm() <= 1e-10);
        }
        for (std::size_t i : d.true_outliers) {
            const Eigen::VectorXd x = d.matrix.values().col(long(i));
            CHECK((x - u * (u.transpose() * x)).norm() > 0.1);
        }
    }
    SUBCASE("identical specs give bit-identical data") {
        const SynthSpec spec{50, 200, 5, 0.3, 10.0, 99};
        const LabeledDataset a = assemble_dataset(spec), b = assemble_dataset(spec);
        CHECK(a.matrix.values() == b.matrix.values());
        CHECK(a.true_inliers == b.true_inliers);
        SynthSpec other = spec;
        other.seed = 100;
        CHECK(assemble_dataset(other).matrix.values() != a.matrix.values());
    }
    SUBCASE("invalid specs") {
        CHECK_THROWS_AS(assemble_dataset(SynthSpec{10, 50, 2, 0.2, std::nullopt, 0}), InvalidArgument);
        CHECK_THROWS_AS(assemble_dataset(SynthSpec{10, 50, 10, 0.2, std::nullopt, 0}), InvalidArgument);
        CHECK_THROWS_AS(assemble_dataset(SynthSpec{10, 50, 4, 1.0, std::nullopt, 0}), InvalidArgument);
    }
}

TEST_CASE("noise at 10 dB carries a tenth of the signal energy") {
    const SynthSpec spec{100, 1000, 10, 0.25, 10.0, 7};
    // noise is drawn last, so the same seed without noise reproduces the clean columns
    SynthSpec clean_spec = spec;
    clean_spec.snr_db.reset();
    const LabeledDataset noisy = assemble_dataset(spec);
    const LabeledDataset clean = assemble_dataset(clean_spec);
    const Eigen::MatrixXd w = noisy.matrix.values() - clean.matrix.values();
    const double ratio = w.colwise().squaredNorm().mean();  // clean columns have unit norm
    CHECK(ratio == doctest::Approx(0.1).epsilon(0.05));
    CHECK(noise_variance(100, 10.0) == doctest::Approx(1e-3));
}

TEST_CASE("angles involving an outlier follow h with d = n") {
    constexpr std::size_t n = 30;
    std::vector<double> theta;
    for (std::uint64_t s = 0; theta.size() < 10000; ++s) {
        const LabeledDataset d = assemble_dataset(SynthSpec{n, 40, 5, 0.5, std::nullopt, s});
        // one outlier-inlier and one outlier-outlier angle per dataset keeps samples independent
        const auto& x = d.matrix.values();
        theta.push_back(oracle::principal_angle(x.col(long(d.true_outliers[0])), x.col(long(d.true_inliers[0]))));
        theta.push_back(oracle::principal_angle(x.col(long(d.true_outliers[1])), x.col(long(d.true_outliers[2]))));
    }
    const AngleDistribution dist(n);
    CHECK(oracle::ks_statistic(theta, [&](double v) { return theta_cdf_exact(dist, v); }) <=
          oracle::ks_critical(theta.size(), 0.01));
}
