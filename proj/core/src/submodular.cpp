#include "diverse/submodular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "diverse/errors.hpp"

namespace diverse {
namespace {

// Argmax ties closer than this are broken by candidate id, so platform
// rounding cannot flip selections.
constexpr double kGainTieTolerance = 1e-12;

// Single shared formula for one category's share of a marginal gain; every
// gain path (public, naive, lazy) must round identically.
inline double gain_term(double category_mass, double score) {
  return std::log1p(category_mass + score) - std::log1p(category_mass);
}

// Pool candidates with categories resolved to sorted-universe indices.
class InternedPool {
 public:
  explicit InternedPool(const CandidatePool& pool) : pool_(pool) {
    const auto& universe = pool.category_universe();
    std::unordered_map<std::string_view, std::uint32_t> index;
    index.reserve(universe.size());
    for (std::size_t i = 0; i < universe.size(); ++i) {
      index.emplace(universe[i], static_cast<std::uint32_t>(i));
    }
    categories_.resize(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const Candidate& candidate = pool.candidates()[i];
      if (candidate.categories.empty()) {
        throw ValidationError("candidate \"" + candidate.id +
                              "\" has no categories; submodular ranking requires at least one");
      }
      categories_[i].reserve(candidate.categories.size());
      for (const std::string& category : candidate.categories) {
        categories_[i].push_back(index.at(category));
      }
    }
  }

  // Gain of candidate i against per-category masses, category terms summed
  // in the candidate's stored order (same order as marginal_gain()).
  double gain(std::size_t i, const std::vector<double>& sums) const {
    double total = 0.0;
    const double score = pool_.candidates()[i].score;
    for (std::uint32_t c : categories_[i]) {
      total += gain_term(sums[c], score);
    }
    return total;
  }

  void accumulate(std::size_t i, std::vector<double>& sums) const {
    const double score = pool_.candidates()[i].score;
    for (std::uint32_t c : categories_[i]) sums[c] += score;
  }

  const CandidatePool& pool() const { return pool_; }

 private:
  const CandidatePool& pool_;
  std::vector<std::vector<std::uint32_t>> categories_;
};

void check_rank_preconditions(const CandidatePool& pool, const RankRequest& request) {
  if (pool.empty()) {
    throw ValidationError("submodular ranking requires a non-empty pool");
  }
  if (request.k == 0) {
    throw std::invalid_argument("k must be >= 1");
  }
}

RankedList finish_list(Method method, std::size_t k, const GreedyTrace& trace) {
  RankedList list;
  list.method = method;
  list.k = k;
  list.entries.reserve(trace.steps.size());
  for (std::size_t position = 0; position < trace.steps.size(); ++position) {
    list.entries.push_back({trace.steps[position].id, position, trace.steps[position].gain});
  }
  return list;
}

}  // namespace

double category_value(double accumulated_score) {
  if (!(accumulated_score >= 0.0)) {
    throw std::invalid_argument("category mass must be non-negative");
  }
  return std::log1p(accumulated_score);
}

CategoryState::CategoryState(const CandidatePool& pool)
    : pool_(&pool), sums_(pool.category_universe().size(), 0.0) {}

std::size_t CategoryState::category_index(std::string_view category) const {
  const auto& universe = pool_->category_universe();
  auto it = std::lower_bound(universe.begin(), universe.end(), category);
  if (it == universe.end() || *it != category) {
    throw ValidationError("category \"" + std::string(category) +
                          "\" is not in the pool's universe");
  }
  return static_cast<std::size_t>(it - universe.begin());
}

void CategoryState::add(const Candidate& candidate) {
  for (const std::string& category : candidate.categories) {
    sums_[category_index(category)] += candidate.score;
  }
}

double CategoryState::sum(std::string_view category) const {
  return sums_[category_index(category)];
}

double objective(const CandidatePool& pool, std::span<const std::string> selected_ids) {
  CategoryState state(pool);
  std::vector<std::size_t> indices;
  indices.reserve(selected_ids.size());
  for (const std::string& id : selected_ids) {
    auto index = pool.index_of(id);
    if (!index) {
      throw ValidationError("unknown candidate id \"" + id + "\"");
    }
    indices.push_back(*index);
  }
  // Mass accumulates in pool order so any id ordering of the same set
  // produces the same value.
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
    throw ValidationError("selected ids must form a set; duplicates found");
  }
  for (std::size_t index : indices) {
    state.add(pool.candidates()[index]);
  }
  double total = 0.0;
  for (double mass : state.sums()) {
    total += category_value(mass);
  }
  return total;
}

double marginal_gain(const CategoryState& state, const Candidate& candidate) {
  double total = 0.0;
  for (const std::string& category : candidate.categories) {
    total += gain_term(state.sums_[state.category_index(category)], candidate.score);
  }
  return total;
}

std::pair<RankedList, GreedyTrace> greedy_rank(const CandidatePool& pool,
                                               const RankRequest& request) {
  check_rank_preconditions(pool, request);
  const InternedPool interned(pool);
  const auto& candidates = pool.candidates();
  const std::size_t select_count = std::min(request.k, pool.size());

  std::vector<double> sums(pool.category_universe().size(), 0.0);
  std::vector<bool> selected(pool.size(), false);
  std::vector<double> gains(pool.size(), 0.0);
  GreedyTrace trace;
  double objective_so_far = 0.0;

  for (std::size_t step = 0; step < select_count; ++step) {
    // Fresh gains for every remaining candidate; the winner is the max,
    // with ties within kGainTieTolerance going to the smallest id.
    double best_gain = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (selected[i]) continue;
      gains[i] = interned.gain(i, sums);
      ++trace.gain_evaluations;
      if (gains[i] > best_gain) best_gain = gains[i];
    }
    std::size_t winner = pool.size();
    double winner_gain = 0.0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (selected[i]) continue;
      if (gains[i] >= best_gain - kGainTieTolerance &&
          (winner == pool.size() || candidates[i].id < candidates[winner].id)) {
        winner = i;
        winner_gain = gains[i];
      }
    }
    selected[winner] = true;
    interned.accumulate(winner, sums);
    objective_so_far += winner_gain;
    trace.steps.push_back({candidates[winner].id, winner_gain, objective_so_far});
  }
  return {finish_list(Method::greedy, request.k, trace), std::move(trace)};
}

std::pair<RankedList, GreedyTrace> lazy_greedy_rank(const CandidatePool& pool,
                                                    const RankRequest& request) {
  check_rank_preconditions(pool, request);
  const InternedPool interned(pool);
  const auto& candidates = pool.candidates();
  const std::size_t n = pool.size();
  const std::size_t select_count = std::min(request.k, n);

  std::vector<double> sums(pool.category_universe().size(), 0.0);
  GreedyTrace trace;
  double objective_so_far = 0.0;

  // Max-heap of stale gain upper bounds; fresh entries carry the step they
  // were evaluated at. Key ties pop in id order for determinism.
  struct Bound {
    double gain;
    std::size_t index;
    std::size_t evaluated_at;
  };
  const auto heap_less = [&](const Bound& a, const Bound& b) {
    if (a.gain != b.gain) return a.gain < b.gain;
    return candidates[a.index].id > candidates[b.index].id;
  };
  std::priority_queue<Bound, std::vector<Bound>, decltype(heap_less)> heap(heap_less);

  // Seed with step-0 gains; this costs n evaluations, exactly like the
  // naive ranker's first step.
  for (std::size_t i = 0; i < n; ++i) {
    heap.push({interned.gain(i, sums), i, 0});
    ++trace.gain_evaluations;
  }

  std::vector<Bound> parked;  // tie candidates pulled out during a step
  for (std::size_t step = 0; step < select_count; ++step) {
    // Refresh the top until its bound is current; submodularity guarantees
    // bounds only shrink, so a current top is the true argmax.
    while (heap.top().evaluated_at != step) {
      Bound stale = heap.top();
      heap.pop();
      stale.gain = interned.gain(stale.index, sums);
      ++trace.gain_evaluations;
      stale.evaluated_at = step;
      heap.push(stale);
    }
    const double top_gain = heap.top().gain;

    // Pull everything whose bound could tie the winner within tolerance;
    // refresh stale ones so the tie set is decided on true gains.
    parked.clear();
    while (!heap.empty() && heap.top().gain >= top_gain - kGainTieTolerance) {
      Bound bound = heap.top();
      heap.pop();
      if (bound.evaluated_at != step) {
        bound.gain = interned.gain(bound.index, sums);
        ++trace.gain_evaluations;
        bound.evaluated_at = step;
      }
      parked.push_back(bound);
    }
    std::size_t winner_slot = parked.size();
    for (std::size_t i = 0; i < parked.size(); ++i) {
      if (parked[i].gain < top_gain - kGainTieTolerance) continue;
      if (winner_slot == parked.size() ||
          candidates[parked[i].index].id < candidates[parked[winner_slot].index].id) {
        winner_slot = i;
      }
    }
    const Bound winner = parked[winner_slot];
    for (std::size_t i = 0; i < parked.size(); ++i) {
      if (i != winner_slot) heap.push(parked[i]);
    }

    interned.accumulate(winner.index, sums);
    objective_so_far += winner.gain;
    trace.steps.push_back({candidates[winner.index].id, winner.gain, objective_so_far});
  }
  return {finish_list(Method::lazy_greedy, request.k, trace), std::move(trace)};
}

std::string serialize_greedy_trace(const GreedyTrace& trace) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const GreedyStep& step : trace.steps) {
    nlohmann::ordered_json entry;
    entry["id"] = step.id;
    entry["gain"] = step.gain;
    entry["objective"] = step.objective_after;
    steps.push_back(std::move(entry));
  }
  doc["steps"] = std::move(steps);
  return doc.dump(1) + "\n";
}

BruteForceResult brute_force_optimum(const CandidatePool& pool, std::size_t k) {
  if (k == 0) {
    throw std::invalid_argument("k must be >= 1");
  }
  if (pool.empty()) {
    throw ValidationError("brute-force search requires a non-empty pool");
  }
  const std::size_t n = pool.size();
  const std::size_t choose = std::min(k, n);

  // Guard: C(n, choose) must stay within 10^6 subsets. Computed through the
  // symmetric form so the partial products increase monotonically and never
  // overshoot the true count (C(n, n) is 1, not the peak binomial).
  const std::size_t symmetric = std::min(choose, n - choose);
  double combinations = 1.0;
  for (std::size_t i = 0; i < symmetric; ++i) {
    combinations *= static_cast<double>(n - i) / static_cast<double>(i + 1);
    if (combinations > 1e6) {
      throw InstanceTooLargeError("subset count exceeds 10^6; instance too large");
    }
  }

  // Candidates in id order, subsets in lexicographic order: the first
  // maximum encountered is automatically the lexicographically smallest
  // tied id set.
  std::vector<std::size_t> by_id(n);
  for (std::size_t i = 0; i < n; ++i) by_id[i] = i;
  std::sort(by_id.begin(), by_id.end(), [&](std::size_t a, std::size_t b) {
    return pool.candidates()[a].id < pool.candidates()[b].id;
  });

  std::vector<std::size_t> pick(choose);
  for (std::size_t i = 0; i < choose; ++i) pick[i] = i;

  std::vector<std::string> ids(choose);
  BruteForceResult best;
  best.value = -1.0;
  while (true) {
    for (std::size_t i = 0; i < choose; ++i) {
      ids[i] = pool.candidates()[by_id[pick[i]]].id;
    }
    const double value = objective(pool, ids);
    if (value > best.value) {
      best.value = value;
      best.ids = ids;
    }
    // Next combination in lexicographic order; stop after the last one.
    std::size_t slot = choose;
    while (slot > 0 && pick[slot - 1] == n - choose + slot - 1) --slot;
    if (slot == 0) break;
    ++pick[slot - 1];
    for (std::size_t j = slot; j < choose; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

}  // namespace diverse
