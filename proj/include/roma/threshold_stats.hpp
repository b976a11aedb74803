#pragma once

#include <cstddef>

namespace roma {

/// Inputs of the outlier threshold: ambient dimension n >= 3, point count N >= 2,
/// failure probability alpha in (0, 1).
struct ThresholdParams {
    std::size_t n;
    std::size_t N;
    double alpha = 0.05;

    void validate() const;
};

/// Threshold zeta on the minimum acute angle of an outlier:
///
///   zeta = [ 4 sqrt(pi) Gamma((n+1)/2) ln(1/(1 - alpha/2)) / (N^2 Gamma(n/2)) ]^(1/(n-1))
///
/// Every outlier score exceeds zeta with probability at least 1 - alpha. Evaluated
/// in log space, so it stays finite for very large n and N.
double roma_threshold(const ThresholdParams& p);

/// Extreme-value constant K = Gamma(n/2) / (sqrt(4 pi) Gamma((n+1)/2)) of the
/// minimum pairwise angle law P(theta_min <= x) ~ 1 - exp(-K p^2 x^(n-1)).
double evt_constant_k(std::size_t n);

/// Law of the angle between two independent uniform points on S^(d-1).
/// d is n for any angle involving an outlier and r for inlier-inlier angles.
class AngleDistribution {
public:
    explicit AngleDistribution(double d);

    double d() const noexcept { return d_; }

    /// ln( Gamma(d/2) / (sqrt(pi) Gamma((d-1)/2)) ), the log normalizer of the pdf.
    double log_normalizer() const noexcept { return log_norm_; }

private:
    double d_;
    double log_norm_;
};

enum class CdfMode { exact, gauss };

/// Standard normal cdf.
double standard_normal_cdf(double z);

/// h(theta) = Gamma(d/2) / (sqrt(pi) Gamma((d-1)/2)) sin(theta)^(d-2) on [0, pi].
double theta_pdf(const AngleDistribution& dist, double theta);

/// Integral of h over [0, x] by composite Simpson (at least 2048 panels).
double theta_cdf_exact(const AngleDistribution& dist, double x);

/// Gaussian approximation N(pi/2, 1/(d-2)) of the theta cdf.
double theta_cdf_gauss(const AngleDistribution& dist, double x);

double theta_cdf(const AngleDistribution& dist, double x, CdfMode mode);

/// Cdf of the acute angle phi = min(theta, pi - theta): F_phi(x) = 2 F_theta(x) on [0, pi/2].
double phi_cdf(const AngleDistribution& dist, double x, CdfMode mode);

struct FoldedNormalMoments {
    double mean;
    double variance;
};

/// Moments of V = U if U <= mu, 2 mu - U otherwise, for U ~ N(mu, sigma^2).
FoldedNormalMoments folded_normal_moments(double mu, double sigma);

struct PhiConcentration {
    double approx_mean;       // pi/2 - sqrt(2 / (pi (d - 2)))
    double approx_variance;   // (1 - 2/pi) / (d - 2)
    double lower_bound;       // pi/2 - c / sqrt(d - 2)
    double probability;       // 2 Phi(c) - 1, chance that phi exceeds lower_bound
};

/// Gaussian-approximation summary of phi for dimension d >= 5 at width c > 0.
PhiConcentration phi_concentration(const AngleDistribution& dist, double c);

}  // namespace roma
