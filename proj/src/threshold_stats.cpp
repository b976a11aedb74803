#include "roma/threshold_stats.hpp"

#include "roma/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace roma {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr std::size_t kMinSimpsonPanels = 2048;

double log_gamma(double x) {
    // std::lgamma writes signgam; arguments here are always positive
    return std::lgamma(x);
}

// Integral of h over [0, x] for x in [0, pi/2].
double theta_cdf_lower_half(const AngleDistribution& dist, double x) {
    if (x <= 0.0) return 0.0;
    const double d = dist.d();
    std::size_t panels = std::max<std::size_t>(
        kMinSimpsonPanels, static_cast<std::size_t>(std::ceil(64.0 * std::sqrt(d))));
    if (panels % 2 != 0) ++panels;
    const double h = x / static_cast<double>(panels);

    auto f = [&](double t) { return theta_pdf(dist, t); };
    double sum = f(0.0) + f(x);
    for (std::size_t k = 1; k < panels; ++k) {
        sum += (k % 2 == 1 ? 4.0 : 2.0) * f(static_cast<double>(k) * h);
    }
    return sum * h / 3.0;
}

}  // namespace

void ThresholdParams::validate() const {
    if (n < 3) throw InvalidArgument("threshold requires n >= 3, got " + std::to_string(n));
    if (N < 2) throw InvalidArgument("threshold requires N >= 2, got " + std::to_string(N));
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw InvalidArgument("alpha must lie in (0, 1), got " + std::to_string(alpha));
    }
}

double roma_threshold(const ThresholdParams& p) {
    p.validate();
    const double n = static_cast<double>(p.n);
    const double N = static_cast<double>(p.N);
    // ln ln(1/(1 - a/2)) = ln(-log1p(-a/2))
    const double log_log_term = std::log(-std::log1p(-p.alpha / 2.0));
    const double log_zeta = (std::log(4.0 * std::sqrt(kPi)) + log_gamma((n + 1.0) / 2.0) -
                             log_gamma(n / 2.0) + log_log_term - 2.0 * std::log(N)) /
                            (n - 1.0);
    return std::exp(log_zeta);
}

double evt_constant_k(std::size_t n) {
    if (n < 3) throw InvalidArgument("K requires n >= 3");
    const double nd = static_cast<double>(n);
    return std::exp(log_gamma(nd / 2.0) - log_gamma((nd + 1.0) / 2.0) -
                    0.5 * std::log(4.0 * kPi));
}

AngleDistribution::AngleDistribution(double d) : d_(d) {
    if (!(d >= 3.0) || !std::isfinite(d)) {
        throw InvalidArgument("angle distribution requires d >= 3");
    }
    log_norm_ = log_gamma(d / 2.0) - log_gamma((d - 1.0) / 2.0) - 0.5 * std::log(kPi);
}

double standard_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double theta_pdf(const AngleDistribution& dist, double theta) {
    if (theta < 0.0 || theta > kPi) return 0.0;
    const double s = std::sin(theta);
    if (s <= 0.0) return 0.0;
    return std::exp(dist.log_normalizer() + (dist.d() - 2.0) * std::log(s));
}

double theta_cdf_exact(const AngleDistribution& dist, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= kPi) return 1.0;
    if (x <= kHalfPi) return theta_cdf_lower_half(dist, x);
    return 1.0 - theta_cdf_lower_half(dist, kPi - x);
}

double theta_cdf_gauss(const AngleDistribution& dist, double x) {
    return standard_normal_cdf((x - kHalfPi) * std::sqrt(dist.d() - 2.0));
}

double theta_cdf(const AngleDistribution& dist, double x, CdfMode mode) {
    return mode == CdfMode::exact ? theta_cdf_exact(dist, x) : theta_cdf_gauss(dist, x);
}

double phi_cdf(const AngleDistribution& dist, double x, CdfMode mode) {
    if (x <= 0.0) return 0.0;
    if (x >= kHalfPi) return 1.0;
    return 2.0 * theta_cdf(dist, x, mode);
}

FoldedNormalMoments folded_normal_moments(double mu, double sigma) {
    if (!(sigma > 0.0)) throw InvalidArgument("folded normal requires sigma > 0");
    return {mu - std::sqrt(2.0 / kPi) * sigma, sigma * sigma * (1.0 - 2.0 / kPi)};
}

PhiConcentration phi_concentration(const AngleDistribution& dist, double c) {
    if (dist.d() < 5.0) throw InvalidArgument("phi concentration requires d >= 5");
    if (!(c > 0.0)) throw InvalidArgument("phi concentration requires c > 0");
    const double sigma = 1.0 / std::sqrt(dist.d() - 2.0);
    const FoldedNormalMoments m = folded_normal_moments(kHalfPi, sigma);
    return {m.mean, m.variance, kHalfPi - c * sigma, 2.0 * standard_normal_cdf(c) - 1.0};
}

}  // namespace roma
