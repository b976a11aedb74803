#pragma once

#include "roma/matrix.hpp"
#include "roma/subspace.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace roma {

enum class CoherenceNorm { l1, l2 };

std::string_view to_string(CoherenceNorm norm);
/// Parses "l1" / "l2"; throws InvalidArgument otherwise.
CoherenceNorm parse_coherence_norm(std::string_view text);

/// Coherence Pursuit score of each point: the chosen norm of (x_i . x_j) over j != i.
/// Larger means more inlier-like.
std::vector<double> cop_scores(const NormalizedMatrix& x, CoherenceNorm norm);

struct CopResult {
    std::vector<std::size_t> chosen;  // top n_s points by descending score, ties by index
    SubspaceBasis basis;
};

/// Keeps the n_s most coherent points and fits a subspace to them.
CopResult cop_recover(const DataMatrix& m, std::size_t n_s, CoherenceNorm norm = CoherenceNorm::l2,
                      std::optional<std::size_t> rank_hint = std::nullopt);

}  // namespace roma
