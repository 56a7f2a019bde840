#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "diverse/model.hpp"

namespace diverse {

/// One accepted exchange: `removed` left the selection, `inserted` joined,
/// and the selection's mean pairwise distance rose to `diversity_after`.
struct SwapStep {
  std::string removed;
  std::string inserted;
  double diversity_after = 0.0;
};

struct SwapTrace {
  double initial_diversity = 0.0;
  std::vector<SwapStep> steps;
  /// True when the loop stopped because no feasible strictly improving
  /// exchange remained (as opposed to hitting the iteration cap).
  bool converged = true;
};

/// Diversifies the top-k-by-score selection by pairwise exchanges.
///
/// Starting from the k highest-scored candidates, repeatedly exchanges one
/// member for one outside candidate when that strictly increases the
/// selection's mean pairwise Jaccard distance and keeps total selected score
/// at or above (1 - relevance_budget) * score(top-k). Members are tried in
/// ascending order of their summed distance to the rest, outsiders in
/// descending score order; the first improving feasible pair is applied.
/// Stops when no pair improves or after max_iterations accepted swaps
/// (default k*k). Output is ordered by score descending, ties by id;
/// diagnostic = candidate score.
std::pair<RankedList, SwapTrace> swap_rank(const CandidatePool& pool,
                                           const RankRequest& request);

}  // namespace diverse
