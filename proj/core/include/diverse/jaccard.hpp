#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "diverse/model.hpp"

namespace diverse {

enum class DistanceKind : std::uint8_t { unweighted, weighted };

/// Jaccard distance (|a ∪ b| - |a ∩ b|) / |a ∪ b| between two token sets.
/// Symmetric, in [0, 1], zero iff the sets are equal. Throws
/// UndefinedDistanceError when both sets are empty.
double jaccard_distance(const std::vector<std::string>& a,
                        const std::vector<std::string>& b);

/// Weighted generalization: (Σ max - Σ min) / Σ max over per-token weights,
/// with absent tokens at weight 0. Equals jaccard_distance when every
/// weight is 1. Throws UndefinedDistanceError when both sets are empty.
double weighted_jaccard_distance(const std::vector<WeightedToken>& a,
                                 const std::vector<WeightedToken>& b);

/// Mean pairwise distance between the explanation sets of the given pool
/// members, taken over all unordered pairs in list order; 0 for fewer than
/// two members. Throws UndefinedDistanceError if any member has an empty
/// explanation set.
double list_diversity(const CandidatePool& pool,
                      std::span<const std::size_t> member_indices,
                      DistanceKind kind);

/// Id-based convenience overload; unknown ids throw ValidationError.
double list_diversity(const CandidatePool& pool,
                      std::span<const std::string> member_ids,
                      DistanceKind kind);

namespace detail {

/// Pool-wide token interning plus a lazily filled pairwise-distance table.
/// Distances computed here are bit-identical to the public functions.
class PairwiseDistances {
 public:
  PairwiseDistances(const CandidatePool& pool, DistanceKind kind);

  /// Distance between candidates at pool indices a and b.
  double operator()(std::size_t a, std::size_t b);

  /// Mean pairwise distance over `members` (unordered pairs, list order).
  double diversity(std::span<const std::size_t> members);

 private:
  double compute(std::size_t a, std::size_t b) const;

  DistanceKind kind_;
  std::size_t n_;
  // Sorted interned token ids (and weights, aligned) per candidate.
  std::vector<std::vector<std::uint32_t>> tokens_;
  std::vector<std::vector<double>> weights_;
  std::vector<double> dense_;  // n*n memo, NaN = not yet computed
  std::unordered_map<std::uint64_t, double> sparse_;  // fallback for large n
};

}  // namespace detail
}  // namespace diverse
