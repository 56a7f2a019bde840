#include "diverse/rank.hpp"

#include <algorithm>
#include <stdexcept>

#include "diverse/errors.hpp"
#include "diverse/submodular.hpp"
#include "diverse/swap.hpp"

namespace diverse {

RankedList baseline_rank(const CandidatePool& pool, std::size_t k) {
  if (k == 0) {
    throw std::invalid_argument("k must be >= 1");
  }
  const auto& candidates = pool.candidates();
  std::vector<std::size_t> order(pool.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (candidates[a].score != candidates[b].score) {
      return candidates[a].score > candidates[b].score;
    }
    return candidates[a].id < candidates[b].id;
  });

  RankedList list;
  list.method = Method::baseline;
  list.k = k;
  const std::size_t count = std::min(k, pool.size());
  list.entries.reserve(count);
  for (std::size_t position = 0; position < count; ++position) {
    const Candidate& candidate = candidates[order[position]];
    list.entries.push_back({candidate.id, position, candidate.score});
  }
  return list;
}

RankedList rank(const CandidatePool& pool, const RankRequest& request) {
  switch (request.method) {
    case Method::baseline:
      return baseline_rank(pool, request.k);
    case Method::swap:
      return swap_rank(pool, request).first;
    case Method::greedy:
      return greedy_rank(pool, request).first;
    case Method::lazy_greedy:
      return lazy_greedy_rank(pool, request).first;
  }
  throw std::invalid_argument("unhandled ranking method");
}

}  // namespace diverse
