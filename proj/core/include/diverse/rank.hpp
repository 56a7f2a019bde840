#pragma once

#include "diverse/model.hpp"

namespace diverse {

/// Sort by score descending, ties by id ascending; take the first
/// min(k, pool size). Diagnostic = candidate score.
RankedList baseline_rank(const CandidatePool& pool, std::size_t k);

/// Dispatches to the ranker named by request.method, discarding traces.
RankedList rank(const CandidatePool& pool, const RankRequest& request);

}  // namespace diverse
