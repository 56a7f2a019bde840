#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace diverse {

/// One explanatory token with its weight. Weights are strictly positive;
/// the unweighted Jaccard distance ignores them.
struct WeightedToken {
  std::string token;
  double weight = 1.0;
};

/// A scored recommendation candidate.
///
/// `explanations` must be non-empty before any Jaccard-based operation is
/// applied, `categories` before any submodular operation; both may be empty
/// at rest. Tokens and categories are sets: duplicates are invalid.
struct Candidate {
  std::string id;
  double score = 0.0;
  std::vector<WeightedToken> explanations;
  std::vector<std::string> categories;
};

/// Throws ValidationError if a single candidate breaks a type invariant
/// (empty id, non-positive/non-finite score or weight, duplicate token or
/// category). Pool-level uniqueness is checked by CandidatePool.
void validate_candidate(const Candidate& candidate);

/// An immutable, validated collection of candidates with unique ids.
class CandidatePool {
 public:
  CandidatePool() = default;

  /// Validates every candidate plus id uniqueness; derives the category
  /// universe. Throws ValidationError on any violation.
  static CandidatePool from_candidates(std::vector<Candidate> candidates);

  const std::vector<Candidate>& candidates() const noexcept { return candidates_; }

  /// Union of all member categories, sorted ascending.
  const std::vector<std::string>& category_universe() const noexcept {
    return category_universe_;
  }

  std::optional<std::size_t> index_of(std::string_view id) const;

  std::size_t size() const noexcept { return candidates_.size(); }
  bool empty() const noexcept { return candidates_.empty(); }

 private:
  std::vector<Candidate> candidates_;
  std::vector<std::string> category_universe_;
  std::unordered_map<std::string, std::size_t> index_;
};

enum class Method : std::uint8_t { baseline, swap, greedy, lazy_greedy };

std::string_view to_string(Method method) noexcept;

/// Inverse of to_string. Throws ValidationError for unknown names.
Method method_from_string(std::string_view name);

struct RankedEntry {
  std::string id;
  std::size_t position = 0;
  double diagnostic = 0.0;
};

/// Ordered ranking result. Positions are contiguous from 0, ids unique.
struct RankedList {
  Method method = Method::baseline;
  std::size_t k = 0;
  std::vector<RankedEntry> entries;
};

/// Parameters of the pairwise-swap diversifier.
struct SwapParams {
  /// Fraction of top-k score mass the selection may give up; in [0, 1).
  double relevance_budget = 0.10;
  /// Accepted-swap cap; defaults to k*k when unset.
  std::optional<std::uint64_t> max_iterations;
  bool use_weighted_jaccard = false;
};

enum class TieBreak : std::uint8_t { by_id_ascending };

struct RankRequest {
  std::size_t k = 40;
  Method method = Method::baseline;
  SwapParams swap_params;
  TieBreak tie_break = TieBreak::by_id_ascending;
};

}  // namespace diverse
