#include "diverse/jaccard.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <unordered_map>

#include "diverse/errors.hpp"

namespace diverse {
namespace {

// Distance from intersection/union cardinalities. Single rounding, so the
// interned fast path and the public string path agree bit-for-bit.
double distance_from_counts(std::size_t intersection, std::size_t union_size) {
  if (union_size == 0) {
    throw UndefinedDistanceError("Jaccard distance of two empty sets is undefined");
  }
  return static_cast<double>(union_size - intersection) / static_cast<double>(union_size);
}

// Weighted form as (Σmax - Σmin) / Σmax; with unit weights the sums are
// exact integers and the result equals the unweighted distance exactly.
double distance_from_weight_sums(double sum_min, double sum_max) {
  if (sum_max <= 0.0) {
    throw UndefinedDistanceError("weighted Jaccard distance of two empty sets is undefined");
  }
  return (sum_max - sum_min) / sum_max;
}

}  // namespace

double jaccard_distance(const std::vector<std::string>& a,
                        const std::vector<std::string>& b) {
  std::vector<std::string_view> sa(a.begin(), a.end());
  std::vector<std::string_view> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::size_t intersection = 0;
  for (std::size_t i = 0, j = 0; i < sa.size() && j < sb.size();) {
    if (sa[i] == sb[j]) {
      ++intersection, ++i, ++j;
    } else if (sa[i] < sb[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  const std::size_t union_size = sa.size() + sb.size() - intersection;
  return distance_from_counts(intersection, union_size);
}

double weighted_jaccard_distance(const std::vector<WeightedToken>& a,
                                 const std::vector<WeightedToken>& b) {
  // Merge over the sorted token union so the summation order is canonical.
  std::map<std::string_view, std::pair<double, double>> merged;
  for (const auto& item : a) merged[item.token].first = item.weight;
  for (const auto& item : b) merged[item.token].second = item.weight;
  double sum_min = 0.0, sum_max = 0.0;
  for (const auto& [token, weights] : merged) {
    sum_min += std::min(weights.first, weights.second);
    sum_max += std::max(weights.first, weights.second);
  }
  return distance_from_weight_sums(sum_min, sum_max);
}

double list_diversity(const CandidatePool& pool,
                      std::span<const std::size_t> member_indices,
                      DistanceKind kind) {
  detail::PairwiseDistances distances(pool, kind);
  return distances.diversity(member_indices);
}

double list_diversity(const CandidatePool& pool, std::span<const std::string> member_ids,
                      DistanceKind kind) {
  std::vector<std::size_t> indices;
  indices.reserve(member_ids.size());
  for (const std::string& id : member_ids) {
    auto index = pool.index_of(id);
    if (!index) {
      throw ValidationError("unknown candidate id \"" + id + "\"");
    }
    indices.push_back(*index);
  }
  return list_diversity(pool, indices, kind);
}

namespace detail {

namespace {
constexpr std::size_t kDenseLimit = 4096;  // 128 MiB of doubles at most
}

PairwiseDistances::PairwiseDistances(const CandidatePool& pool, DistanceKind kind)
    : kind_(kind), n_(pool.size()) {
  // Intern tokens by lexicographic rank so sorted-id merges visit tokens in
  // the same order as the public string-based functions; weighted sums then
  // agree bit-for-bit.
  std::vector<std::string_view> all_tokens;
  for (const Candidate& candidate : pool.candidates()) {
    for (const auto& item : candidate.explanations) all_tokens.push_back(item.token);
  }
  std::sort(all_tokens.begin(), all_tokens.end());
  all_tokens.erase(std::unique(all_tokens.begin(), all_tokens.end()), all_tokens.end());
  std::unordered_map<std::string_view, std::uint32_t> intern;
  intern.reserve(all_tokens.size());
  for (std::size_t r = 0; r < all_tokens.size(); ++r) {
    intern.emplace(all_tokens[r], static_cast<std::uint32_t>(r));
  }

  tokens_.resize(n_);
  weights_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    const Candidate& candidate = pool.candidates()[i];
    auto& ids = tokens_[i];
    auto& ws = weights_[i];
    ids.reserve(candidate.explanations.size());
    for (const auto& item : candidate.explanations) {
      ids.push_back(intern.at(item.token));
      ws.push_back(item.weight);
    }
    std::vector<std::size_t> order(ids.size());
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return ids[x] < ids[y]; });
    std::vector<std::uint32_t> sorted_ids(ids.size());
    std::vector<double> sorted_ws(ids.size());
    for (std::size_t j = 0; j < order.size(); ++j) {
      sorted_ids[j] = ids[order[j]];
      sorted_ws[j] = ws[order[j]];
    }
    ids = std::move(sorted_ids);
    ws = std::move(sorted_ws);
  }
  if (n_ <= kDenseLimit) {
    dense_.assign(n_ * n_, std::numeric_limits<double>::quiet_NaN());
  }
}

double PairwiseDistances::compute(std::size_t a, std::size_t b) const {
  const auto& ta = tokens_[a];
  const auto& tb = tokens_[b];
  if (kind_ == DistanceKind::unweighted) {
    std::size_t intersection = 0;
    for (std::size_t i = 0, j = 0; i < ta.size() && j < tb.size();) {
      if (ta[i] == tb[j]) {
        ++intersection, ++i, ++j;
      } else if (ta[i] < tb[j]) {
        ++i;
      } else {
        ++j;
      }
    }
    return distance_from_counts(intersection, ta.size() + tb.size() - intersection);
  }
  // Interned ids follow lexicographic token order, so this merge sums in
  // the same order as weighted_jaccard_distance.
  double sum_min = 0.0, sum_max = 0.0;
  const auto& wa = weights_[a];
  const auto& wb = weights_[b];
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size() || (i < ta.size() && ta[i] < tb[j])) {
      sum_max += wa[i];
      ++i;
    } else if (i == ta.size() || tb[j] < ta[i]) {
      sum_max += wb[j];
      ++j;
    } else {
      sum_min += std::min(wa[i], wb[j]);
      sum_max += std::max(wa[i], wb[j]);
      ++i, ++j;
    }
  }
  return distance_from_weight_sums(sum_min, sum_max);
}

double PairwiseDistances::operator()(std::size_t a, std::size_t b) {
  if (a == b) return 0.0;
  if (a > b) std::swap(a, b);
  if (!dense_.empty()) {
    double& slot = dense_[a * n_ + b];
    if (std::isnan(slot)) slot = compute(a, b);
    return slot;
  }
  const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
  auto it = sparse_.find(key);
  if (it == sparse_.end()) {
    it = sparse_.emplace(key, compute(a, b)).first;
  }
  return it->second;
}

double PairwiseDistances::diversity(std::span<const std::size_t> members) {
  for (std::size_t index : members) {
    if (tokens_[index].empty()) {
      throw UndefinedDistanceError("candidate at pool index " + std::to_string(index) +
                                   " has no explanation tokens");
    }
  }
  if (members.size() < 2) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      sum += (*this)(members[i], members[j]);
    }
  }
  const std::size_t pairs = members.size() * (members.size() - 1) / 2;
  return sum / static_cast<double>(pairs);
}

}  // namespace detail
}  // namespace diverse
