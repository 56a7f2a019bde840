#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diverse/model.hpp"

namespace diverse {

/// Concave per-category value: ln(1 + accumulated score mass).
/// Throws std::invalid_argument for negative input.
double category_value(double accumulated_score);

/// Per-category accumulated score mass of a growing selection, over the
/// category universe of one pool.
class CategoryState {
 public:
  explicit CategoryState(const CandidatePool& pool);

  /// Adds the candidate's score to each of its categories.
  /// The candidate must belong to the pool the state was built from.
  void add(const Candidate& candidate);

  /// Mass for one category; throws ValidationError for categories outside
  /// the universe.
  double sum(std::string_view category) const;

  /// Masses indexed like the pool's sorted category_universe().
  const std::vector<double>& sums() const noexcept { return sums_; }

  const CandidatePool& pool() const noexcept { return *pool_; }

 private:
  friend double marginal_gain(const CategoryState&, const Candidate&);

  std::size_t category_index(std::string_view category) const;

  const CandidatePool* pool_;
  std::vector<double> sums_;
};

/// Objective over a selection: sum of category_value over every category in
/// the pool's universe. Mass accumulates in pool order, categories sum in
/// sorted-universe order. Unknown ids throw ValidationError.
double objective(const CandidatePool& pool, std::span<const std::string> selected_ids);

/// Gain from adding `candidate` to the selection summarized by `state`:
/// Σ over its categories of ln(1 + S_c + score) - ln(1 + S_c).
/// Strictly positive for positive scores.
double marginal_gain(const CategoryState& state, const Candidate& candidate);

struct GreedyStep {
  std::string id;
  double gain = 0.0;
  double objective_after = 0.0;  // running sum of gains
};

struct GreedyTrace {
  std::vector<GreedyStep> steps;
  /// Number of marginal-gain evaluations performed by the ranker.
  std::uint64_t gain_evaluations = 0;
};

/// Greedy maximization of the category objective: at each step selects the
/// remaining candidate with maximal marginal gain (ties within 1e-12 break
/// to the smaller id). Output order is selection order; diagnostic = gain
/// at selection. Requires a non-empty pool in which every candidate has at
/// least one category.
std::pair<RankedList, GreedyTrace> greedy_rank(const CandidatePool& pool,
                                               const RankRequest& request);

/// Accelerated greedy keeping stale upper bounds on gains and re-evaluating
/// only candidates whose bound could still win the step. Selects exactly
/// the same sequence as greedy_rank with (on non-trivial pools) strictly
/// fewer gain evaluations.
std::pair<RankedList, GreedyTrace> lazy_greedy_rank(const CandidatePool& pool,
                                                    const RankRequest& request);

/// Trace JSON: {"steps": [{"id", "gain", "objective"}, ...]}.
std::string serialize_greedy_trace(const GreedyTrace& trace);

struct BruteForceResult {
  std::vector<std::string> ids;  // sorted ascending
  double value = 0.0;
};

/// Exact maximizer of the objective over all size-min(k, n) subsets; ties
/// resolve to the lexicographically smallest id set. Refuses instances with
/// more than 10^6 subsets (InstanceTooLargeError). k must be >= 1.
BruteForceResult brute_force_optimum(const CandidatePool& pool, std::size_t k);

}  // namespace diverse
