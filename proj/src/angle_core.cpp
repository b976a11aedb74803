#include "roma/angle_core.hpp"

#include "roma/errors.hpp"
#include "roma/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace roma {
namespace {

constexpr std::size_t kRowBlock = 32;

double clamp_unit(double c) { return std::clamp(c, -1.0, 1.0); }

void check_cap(std::size_t count, std::size_t cap) {
    if (count > cap) {
        throw InvalidArgument("N = " + std::to_string(count) + " exceeds the dense matrix cap " +
                              std::to_string(cap) + "; use acute_angle_scores");
    }
}

// Accumulates max_{j > i} |x_i . x_j| into best[i] and best[j] for every i in the
// row blocks assigned to `lane`.
void upper_triangle_max(const Eigen::MatrixXd& x, std::size_t lane, std::size_t lanes,
                        std::vector<double>& best) {
    const std::size_t n = static_cast<std::size_t>(x.rows());
    const std::size_t count = static_cast<std::size_t>(x.cols());
    const double* base = x.data();

    for (std::size_t block = lane; block * kRowBlock < count; block += lanes) {
        const std::size_t row_end = std::min(count, (block + 1) * kRowBlock);
        for (std::size_t i = block * kRowBlock; i < row_end; ++i) {
            const double* xi = base + i * n;
            double row_best = best[i];
            std::size_t j = i + 1;
            for (; j + 4 <= count; j += 4) {
                const double* x0 = base + j * n;
                const double* x1 = x0 + n;
                const double* x2 = x1 + n;
                const double* x3 = x2 + n;
                double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const double a = xi[k];
                    s0 += a * x0[k];
                    s1 += a * x1[k];
                    s2 += a * x2[k];
                    s3 += a * x3[k];
                }
                const double a0 = std::abs(clamp_unit(s0));
                const double a1 = std::abs(clamp_unit(s1));
                const double a2 = std::abs(clamp_unit(s2));
                const double a3 = std::abs(clamp_unit(s3));
                row_best = std::max({row_best, a0, a1, a2, a3});
                best[j] = std::max(best[j], a0);
                best[j + 1] = std::max(best[j + 1], a1);
                best[j + 2] = std::max(best[j + 2], a2);
                best[j + 3] = std::max(best[j + 3], a3);
            }
            for (; j < count; ++j) {
                const double* xj = base + j * n;
                double s = 0.0;
                for (std::size_t k = 0; k < n; ++k) s += xi[k] * xj[k];
                const double a = std::abs(clamp_unit(s));
                row_best = std::max(row_best, a);
                best[j] = std::max(best[j], a);
            }
            best[i] = row_best;
        }
    }
}

}  // namespace

AngleScores AngleScores::from_scores(std::vector<double> scores) {
    AngleScores out;
    out.order.resize(scores.size());
    std::iota(out.order.begin(), out.order.end(), std::size_t{0});
    std::stable_sort(out.order.begin(), out.order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    out.sorted_scores.reserve(scores.size());
    for (std::size_t idx : out.order) out.sorted_scores.push_back(scores[idx]);
    out.scores = std::move(scores);
    return out;
}

double column_dot(const NormalizedMatrix& x, std::size_t i, std::size_t j) {
    const std::size_t n = x.dim();
    const double* xi = x.values().col(static_cast<Eigen::Index>(i)).data();
    const double* xj = x.values().col(static_cast<Eigen::Index>(j)).data();
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += xi[k] * xj[k];
    return s;
}

Eigen::MatrixXd gram_matrix(const NormalizedMatrix& x, std::size_t cap) {
    const std::size_t count = x.count();
    check_cap(count, cap);
    Eigen::MatrixXd g(count, count);
    parallel_for(count, [&](std::size_t i) {
        for (std::size_t j = i; j < count; ++j) {
            const double s = column_dot(x, i, j);
            g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s;
        }
    });
    // mirror after all writers are done; the lower triangle is never written concurrently
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < i; ++j)
            g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                g(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i));
    return g;
}

Eigen::MatrixXd pairwise_principal_angles(const NormalizedMatrix& x, std::size_t cap) {
    Eigen::MatrixXd theta = gram_matrix(x, cap);
    theta = theta.unaryExpr([](double c) { return std::acos(clamp_unit(c)); });
    theta.diagonal().setZero();
    return theta;
}

Eigen::MatrixXd pairwise_acute_angles(const NormalizedMatrix& x, std::size_t cap) {
    Eigen::MatrixXd phi = gram_matrix(x, cap);
    phi = phi.unaryExpr([](double c) { return std::acos(std::abs(clamp_unit(c))); });
    phi.diagonal().setZero();
    return phi;
}

AngleScores min_angle_scores(const Eigen::MatrixXd& phi) {
    if (phi.rows() != phi.cols() || phi.rows() < 2) {
        throw InvalidArgument("acute-angle matrix must be square with at least 2 points");
    }
    const Eigen::Index count = phi.rows();
    std::vector<double> scores(static_cast<std::size_t>(count));
    for (Eigen::Index i = 0; i < count; ++i) {
        double m = std::numeric_limits<double>::infinity();
        for (Eigen::Index j = 0; j < count; ++j)
            if (j != i) m = std::min(m, phi(i, j));
        scores[static_cast<std::size_t>(i)] = m;
    }
    return AngleScores::from_scores(std::move(scores));
}

AngleScores acute_angle_scores(const NormalizedMatrix& x) {
    const std::size_t count = x.count();
    const std::size_t blocks = (count + kRowBlock - 1) / kRowBlock;
    const std::size_t lanes = std::max<std::size_t>(1, std::min(worker_count(), blocks));

    std::vector<std::vector<double>> partial(lanes, std::vector<double>(count, 0.0));
    parallel_for(lanes, [&](std::size_t lane) {
        upper_triangle_max(x.values(), lane, lanes, partial[lane]);
    });

    std::vector<double> scores(count);
    for (std::size_t i = 0; i < count; ++i) {
        double best = 0.0;
        for (const auto& p : partial) best = std::max(best, p[i]);
        scores[i] = std::acos(best);
    }
    return AngleScores::from_scores(std::move(scores));
}

}  // namespace roma
