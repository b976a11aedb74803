#include "oracles.hpp"

#include "roma/errors.hpp"
#include "roma/threshold_stats.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace roma;

namespace {

constexpr double kPi = std::numbers::pi;

double integrate(const std::function<double(double)>& f, double a, double b) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-13);
}

double sup_gauss_gap(double d) {
    const AngleDistribution dist(d);
    double gap = 0.0;
    for (int k = 0; k <= 400; ++k) {
        const double x = kPi * k / 400.0;
        gap = std::max(gap, std::abs(theta_cdf_exact(dist, x) - theta_cdf_gauss(dist, x)));
    }
    return gap;
}

}  // namespace

// Frozen from an independent 30-digit log-gamma evaluation.
TEST_CASE("roma_threshold reference values") {
    CHECK(roma_threshold({100, 1000, 0.05}) == doctest::Approx(0.871824144008507).epsilon(1e-12));
    CHECK(roma_threshold({200, 1000, 0.05}) == doctest::Approx(0.935671081014710).epsilon(1e-12));
    CHECK(roma_threshold({100, 2000, 0.05}) == doctest::Approx(0.859701091244424).epsilon(1e-12));
    CHECK(roma_threshold({60, 400, 0.05}) == doctest::Approx(0.815903602706662).epsilon(1e-12));
}

TEST_CASE("roma_threshold rejects invalid parameters") {
    CHECK_THROWS_AS(roma_threshold({2, 100, 0.05}), InvalidArgument);
    CHECK_THROWS_AS(roma_threshold({10, 1, 0.05}), InvalidArgument);
    CHECK_THROWS_AS(roma_threshold({10, 100, 0.0}), InvalidArgument);
    CHECK_THROWS_AS(roma_threshold({10, 100, 1.0}), InvalidArgument);
}

TEST_CASE("roma_threshold stays finite for huge inputs") {
    const double z = roma_threshold({1000000, 1000000000, 0.05});
    CHECK(std::isfinite(z));
    CHECK(z > 0.0);
    CHECK(z < kPi / 2);
}

TEST_CASE("evt constant K") {
    CHECK(evt_constant_k(3) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(evt_constant_k(101) < evt_constant_k(100));
    CHECK_THROWS_AS(evt_constant_k(2), InvalidArgument);
}

// The threshold carries 4 sqrt(pi) where inverting exp(-K N^2 z^(n-1)) with K as defined
// would give sqrt(4 pi), so the law holds with K/2: exp(-K N^2 zeta^(n-1)) = (1 - alpha/2)^2.
TEST_CASE("threshold inverts the extreme-value law with half of K") {
    for (std::size_t n : {3u, 10u, 100u, 1000u, 100000u})
        for (std::size_t N : {100u, 1000u, 1000000u})
            for (double alpha : {0.01, 0.05, 0.2}) {
                const double zeta = roma_threshold({n, N, alpha});
                const double log_term = std::log(0.5 * evt_constant_k(n)) + 2.0 * std::log(double(N)) +
                                        (double(n) - 1.0) * std::log(zeta);
                CHECK(std::abs(std::exp(-std::exp(log_term)) - (1.0 - alpha / 2.0)) <= 1e-10);
            }
}

TEST_CASE("threshold monotonicity") {
    for (std::size_t n = 3; n < 400; n += 7) {
        CHECK(roma_threshold({n + 1, 1000, 0.05}) > roma_threshold({n, 1000, 0.05}));
        CHECK(roma_threshold({n, 1001, 0.05}) < roma_threshold({n, 1000, 0.05}));
        CHECK(roma_threshold({n, 1000, 0.06}) > roma_threshold({n, 1000, 0.05}));
    }
}

TEST_CASE("theta_pdf") {
    const AngleDistribution d3(3);
    CHECK(theta_pdf(d3, kPi / 2) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(theta_pdf(d3, 0.7) == doctest::Approx(0.5 * std::sin(0.7)).epsilon(1e-14));

    for (double d : {3.0, 10.0, 100.0}) {
        const AngleDistribution dist(d);
        const double mass = integrate([&](double t) { return theta_pdf(dist, t); }, 0.0, kPi);
        CHECK(std::abs(mass - 1.0) <= 1e-8);
        for (double t : {0.1, 0.5, 1.2})
            CHECK(theta_pdf(dist, kPi / 2 + t) == doctest::Approx(theta_pdf(dist, kPi / 2 - t)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(AngleDistribution(2.5), InvalidArgument);
}

TEST_CASE("theta cdfs") {
    for (double d : {3.0, 10.0, 30.0, 100.0, 1000.0}) {
        const AngleDistribution dist(d);
        CHECK(std::abs(theta_cdf_exact(dist, kPi) - 1.0) <= 1e-8);
        CHECK(std::abs(theta_cdf_exact(dist, kPi / 2) - 0.5) <= 1e-8);
        double prev = 0.0;
        for (int k = 0; k <= 200; ++k) {
            const double v = theta_cdf_exact(dist, kPi * k / 200.0);
            CHECK(v >= prev - 1e-15);
            prev = v;
        }
    }
    // d = 3 has the closed form (1 - cos x) / 2
    CHECK(theta_cdf_exact(AngleDistribution(3), 1.0) ==
          doctest::Approx(0.22984884706593014).epsilon(1e-12));
    // 30-digit quadrature at the threshold of (n=60, N=400)
    CHECK(theta_cdf_exact(AngleDistribution(10), 0.815903602706662) ==
          doctest::Approx(0.0099854124697496222).epsilon(1e-9));
}

TEST_CASE("Gaussian approximation of the theta cdf") {
    const double gap30 = sup_gauss_gap(30);
    const double gap200 = sup_gauss_gap(200);
    CHECK(gap30 <= 0.02);
    // regression baseline: measured 0.0031156 at d = 30
    CHECK(gap30 == doctest::Approx(0.0031156).epsilon(1e-3));
    CHECK(gap200 < gap30);
    for (double d : {50.0, 100.0, 300.0}) CHECK(sup_gauss_gap(d) <= 0.02);
}

TEST_CASE("phi_cdf doubles the theta cdf on [0, pi/2]") {
    for (CdfMode mode : {CdfMode::exact, CdfMode::gauss}) {
        const AngleDistribution dist(12);
        CHECK(phi_cdf(dist, kPi / 2, mode) == doctest::Approx(1.0).epsilon(1e-8));
        double prev = 0.0;
        for (int k = 0; k <= 50; ++k) {
            const double x = kPi / 2 * k / 50.0;
            const double v = phi_cdf(dist, x, mode);
            if (k > 0 && k < 50) CHECK(v == doctest::Approx(2.0 * theta_cdf(dist, x, mode)).epsilon(1e-14));
            CHECK(v >= prev);
            CHECK(v <= 1.0 + 1e-8);
            prev = v;
        }
    }
}

TEST_CASE("phi_cdf against sampled pairs (DKW band, 99%)") {
    constexpr std::size_t d = 20, samples = 100000;
    std::mt19937_64 gen(5);
    std::vector<double> phi(samples);
    for (auto& v : phi) {
        const Eigen::VectorXd a = oracle::sphere_point(d, gen), b = oracle::sphere_point(d, gen);
        const double t = oracle::principal_angle(a, b);
        v = std::min(t, kPi - t);
    }
    const AngleDistribution dist(d);
    const double stat = oracle::ks_statistic(phi, [&](double x) { return phi_cdf(dist, x, CdfMode::exact); });
    CHECK(stat <= oracle::ks_critical(samples, 0.01));
}

TEST_CASE("folded normal moments") {
    const auto m = folded_normal_moments(0.0, 1.0);
    CHECK(m.mean == doctest::Approx(-0.79788456080286536).epsilon(1e-14));
    CHECK(m.variance == doctest::Approx(0.36338022763241866).epsilon(1e-14));

    const auto tiny = folded_normal_moments(kPi / 2, 1e-12);
    CHECK(tiny.mean == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(tiny.variance <= 1e-24);
    CHECK_THROWS_AS(folded_normal_moments(0.0, 0.0), InvalidArgument);

    // closed-form integration of 2 * normal pdf over (-inf, mu]
    const double mu = 0.4, sigma = 1.7;
    auto pdf = [&](double v) {
        return 2.0 * std::exp(-0.5 * (v - mu) * (v - mu) / (sigma * sigma)) / (sigma * std::sqrt(2 * kPi));
    };
    const double lo = mu - 40 * sigma;
    const double mean = integrate([&](double v) { return v * pdf(v); }, lo, mu);
    const double second = integrate([&](double v) { return v * v * pdf(v); }, lo, mu);
    const auto fm = folded_normal_moments(mu, sigma);
    CHECK(fm.mean == doctest::Approx(mean).epsilon(1e-10));
    CHECK(fm.variance == doctest::Approx(second - mean * mean).epsilon(1e-10));
}

TEST_CASE("folded normal moments against Monte Carlo") {
    const double mu = 1.0, sigma = 0.5;
    constexpr std::size_t draws = 1000000;
    std::mt19937_64 gen(17);
    std::normal_distribution<double> normal(mu, sigma);
    double sum = 0, sum_sq = 0;
    for (std::size_t k = 0; k < draws; ++k) {
        double u = normal(gen);
        const double v = u <= mu ? u : 2 * mu - u;
        sum += v;
        sum_sq += v * v;
    }
    const double mean = sum / draws;
    const double var = sum_sq / draws - mean * mean;
    const auto m = folded_normal_moments(mu, sigma);
    CHECK(std::abs(mean - m.mean) <= 4.0 * std::sqrt(m.variance / draws));
    // SE of the sample variance: sqrt((mu4 - var^2) / draws), with mu4 the fourth central
    // moment of mu - sigma |Z|: sigma^4 (3 - 2 m^2 - 3 m^4), m^2 = 2 / pi
    const double m2 = 2.0 / kPi;
    const double mu4 = std::pow(sigma, 4) * (3.0 - 2.0 * m2 - 3.0 * m2 * m2);
    CHECK(std::abs(var - m.variance) <= 4.0 * std::sqrt((mu4 - m.variance * m.variance) / draws));
}

TEST_CASE("phi concentration summary") {
    const auto c = phi_concentration(AngleDistribution(100), 3.0);
    CHECK(c.approx_mean == doctest::Approx(1.4901978148595028).epsilon(1e-14));
    CHECK(c.approx_variance == doctest::Approx(0.0037079615064532514).epsilon(1e-12));
    CHECK(c.lower_bound == doctest::Approx(kPi / 2 - 3.0 / std::sqrt(98.0)).epsilon(1e-14));
    CHECK(c.probability == doctest::Approx(0.99730020393674).epsilon(1e-12));
    CHECK_THROWS_AS(phi_concentration(AngleDistribution(4), 3.0), InvalidArgument);

    // cross-check of the approximate mean by sampling outlier-outlier acute angles
    std::mt19937_64 gen(8);
    double sum = 0;
    constexpr int pairs = 20000;
    for (int k = 0; k < pairs; ++k) {
        const double t = oracle::principal_angle(oracle::sphere_point(100, gen), oracle::sphere_point(100, gen));
        sum += std::min(t, kPi - t);
    }
    CHECK(std::abs(sum / pairs - c.approx_mean) <= 5e-3);
}
