#include "roma/cop.hpp"

#include "roma/angle_core.hpp"
#include "roma/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace roma {

std::string_view to_string(CoherenceNorm norm) {
    return norm == CoherenceNorm::l1 ? "l1" : "l2";
}

CoherenceNorm parse_coherence_norm(std::string_view text) {
    if (text == "l1") return CoherenceNorm::l1;
    if (text == "l2") return CoherenceNorm::l2;
    throw InvalidArgument("unknown coherence norm '" + std::string(text) + "'");
}

std::vector<double> cop_scores(const NormalizedMatrix& x, CoherenceNorm norm) {
    const Eigen::MatrixXd g = gram_matrix(x);
    const Eigen::Index count = g.rows();
    std::vector<double> scores(static_cast<std::size_t>(count));
    for (Eigen::Index i = 0; i < count; ++i) {
        double acc = 0.0;
        for (Eigen::Index j = 0; j < count; ++j) {
            if (j == i) continue;
            const double c = g(i, j);
            acc += norm == CoherenceNorm::l1 ? std::abs(c) : c * c;
        }
        scores[static_cast<std::size_t>(i)] = norm == CoherenceNorm::l1 ? acc : std::sqrt(acc);
    }
    return scores;
}

CopResult cop_recover(const DataMatrix& m, std::size_t n_s, CoherenceNorm norm,
                      std::optional<std::size_t> rank_hint) {
    if (n_s < 1 || n_s > m.count()) {
        throw InvalidArgument("n_s must lie in [1, N], got " + std::to_string(n_s));
    }
    const NormalizedMatrix x = normalize_columns(m);
    const std::vector<double> scores = cop_scores(x, norm);
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    order.resize(n_s);
    SubspaceBasis basis = recover_basis(select_columns(x.values(), order), rank_hint);
    return CopResult{std::move(order), std::move(basis)};
}

}  // namespace roma
