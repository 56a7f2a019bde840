#include "diverse/swap.hpp"

#include <algorithm>
#include <stdexcept>

#include "diverse/errors.hpp"
#include "diverse/jaccard.hpp"

namespace diverse {
namespace {

// Canonical set score: member scores summed in id-ascending order, so
// feasibility checks are reproducible for a given set regardless of how it
// was reached.
double set_score(const CandidatePool& pool, const std::vector<std::size_t>& sorted_members) {
  double total = 0.0;
  for (std::size_t index : sorted_members) total += pool.candidates()[index].score;
  return total;
}

}  // namespace

std::pair<RankedList, SwapTrace> swap_rank(const CandidatePool& pool,
                                           const RankRequest& request) {
  if (pool.empty()) {
    throw ValidationError("swap ranking requires a non-empty pool");
  }
  if (request.k == 0) {
    throw std::invalid_argument("k must be >= 1");
  }
  const SwapParams& params = request.swap_params;
  if (!(params.relevance_budget >= 0.0) || params.relevance_budget >= 1.0) {
    throw std::invalid_argument("relevance_budget must lie in [0, 1)");
  }
  if (params.max_iterations && *params.max_iterations == 0) {
    throw std::invalid_argument("max_iterations must be >= 1");
  }
  for (const Candidate& candidate : pool.candidates()) {
    if (candidate.explanations.empty()) {
      throw UndefinedDistanceError("candidate \"" + candidate.id +
                                   "\" has no explanation tokens");
    }
  }

  const auto& candidates = pool.candidates();
  const std::size_t n = pool.size();
  const std::size_t select_count = std::min(request.k, n);

  const auto by_score = [&](std::size_t a, std::size_t b) {
    if (candidates[a].score != candidates[b].score) {
      return candidates[a].score > candidates[b].score;
    }
    return candidates[a].id < candidates[b].id;
  };
  const auto by_id = [&](std::size_t a, std::size_t b) {
    return candidates[a].id < candidates[b].id;
  };

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), by_score);

  std::vector<std::size_t> members(order.begin(), order.begin() + select_count);
  std::sort(members.begin(), members.end(), by_id);
  std::vector<std::size_t> outsiders(order.begin() + select_count, order.end());

  const double budget =
      (1.0 - params.relevance_budget) * set_score(pool, members);
  const std::uint64_t max_swaps =
      params.max_iterations ? *params.max_iterations
                            : static_cast<std::uint64_t>(request.k) * request.k;

  detail::PairwiseDistances distances(pool, params.use_weighted_jaccard
                                                ? DistanceKind::weighted
                                                : DistanceKind::unweighted);

  SwapTrace trace;
  double current_diversity = distances.diversity(members);
  trace.initial_diversity = current_diversity;

  std::vector<std::pair<double, std::size_t>> victims;  // (contribution, index)
  std::vector<std::size_t> staged;
  bool exhausted = false;
  while (!exhausted && trace.steps.size() < max_swaps) {
    // Members ordered by how little they contribute to pairwise diversity.
    victims.clear();
    for (std::size_t i = 0; i < members.size(); ++i) {
      double contribution = 0.0;
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (i != j) contribution += distances(members[i], members[j]);
      }
      victims.emplace_back(contribution, members[i]);
    }
    std::sort(victims.begin(), victims.end(),
              [&](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first < b.first;
                return candidates[a.second].id < candidates[b.second].id;
              });

    bool applied = false;
    for (const auto& [contribution, victim] : victims) {
      for (std::size_t entrant : outsiders) {
        staged.clear();
        staged.reserve(members.size());
        for (std::size_t m : members) {
          if (m != victim) staged.push_back(m);
        }
        staged.insert(std::lower_bound(staged.begin(), staged.end(), entrant, by_id),
                      entrant);
        if (set_score(pool, staged) < budget) continue;
        const double staged_diversity = distances.diversity(staged);
        if (staged_diversity > current_diversity) {
          members = staged;
          current_diversity = staged_diversity;
          trace.steps.push_back({candidates[victim].id, candidates[entrant].id,
                                 staged_diversity});
          outsiders.erase(std::find(outsiders.begin(), outsiders.end(), entrant));
          outsiders.insert(
              std::lower_bound(outsiders.begin(), outsiders.end(), victim, by_score),
              victim);
          applied = true;
          break;
        }
      }
      if (applied) break;
    }
    exhausted = !applied;
  }
  // Converged means the full victim/outsider scan found nothing, not that
  // the accepted-swap cap cut the search short.
  trace.converged = exhausted;

  RankedList list;
  list.method = Method::swap;
  list.k = request.k;
  std::vector<std::size_t> final_order = members;
  std::sort(final_order.begin(), final_order.end(), by_score);
  list.entries.reserve(final_order.size());
  for (std::size_t position = 0; position < final_order.size(); ++position) {
    const Candidate& candidate = candidates[final_order[position]];
    list.entries.push_back({candidate.id, position, candidate.score});
  }
  return {std::move(list), std::move(trace)};
}

}  // namespace diverse
