#include "diverse/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

#include "diverse/errors.hpp"

namespace diverse {

void validate_candidate(const Candidate& candidate) {
  if (candidate.id.empty()) {
    throw ValidationError("candidate id must be non-empty");
  }
  if (!std::isfinite(candidate.score) || candidate.score <= 0.0) {
    throw ValidationError("candidate \"" + candidate.id +
                          "\": score must be a positive finite number");
  }
  std::unordered_set<std::string_view> seen_tokens;
  for (const auto& item : candidate.explanations) {
    if (!std::isfinite(item.weight) || item.weight <= 0.0) {
      throw ValidationError("candidate \"" + candidate.id + "\": weight of token \"" +
                            item.token + "\" must be a positive finite number");
    }
    if (!seen_tokens.insert(item.token).second) {
      throw ValidationError("candidate \"" + candidate.id + "\": duplicate token \"" +
                            item.token + "\"");
    }
  }
  std::unordered_set<std::string_view> seen_categories;
  for (const auto& category : candidate.categories) {
    if (!seen_categories.insert(category).second) {
      throw ValidationError("candidate \"" + candidate.id + "\": duplicate category \"" +
                            category + "\"");
    }
  }
}

CandidatePool CandidatePool::from_candidates(std::vector<Candidate> candidates) {
  CandidatePool pool;
  pool.index_.reserve(candidates.size());
  std::set<std::string> universe;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Candidate& candidate = candidates[i];
    validate_candidate(candidate);
    if (!pool.index_.emplace(candidate.id, i).second) {
      throw ValidationError("duplicate candidate id \"" + candidate.id + "\"");
    }
    universe.insert(candidate.categories.begin(), candidate.categories.end());
  }
  pool.candidates_ = std::move(candidates);
  pool.category_universe_.assign(universe.begin(), universe.end());
  return pool;
}

std::optional<std::size_t> CandidatePool::index_of(std::string_view id) const {
  // Transparent lookup would need a heterogeneous hash; pools are queried
  // with short ids so the temporary string is fine.
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::baseline:
      return "baseline";
    case Method::swap:
      return "swap";
    case Method::greedy:
      return "greedy";
    case Method::lazy_greedy:
      return "lazy_greedy";
  }
  return "unknown";
}

Method method_from_string(std::string_view name) {
  if (name == "baseline") return Method::baseline;
  if (name == "swap") return Method::swap;
  if (name == "greedy") return Method::greedy;
  if (name == "lazy_greedy" || name == "lazy") return Method::lazy_greedy;
  throw ValidationError("unknown ranking method \"" + std::string(name) + "\"");
}

}  // namespace diverse
