#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "diverse/model.hpp"

namespace diverse {

/// Parses one candidate per line (JSONL). Required fields per record:
/// id, score, explanations ([{token, weight}, ...]), categories ([...]).
/// Unknown fields are ignored. Any malformed line or invariant violation
/// aborts the whole parse: no partial pools.
CandidatePool parse_pool(std::istream& in);
CandidatePool parse_pool_file(const std::filesystem::path& path);

/// Inverse of parse_pool; one compact JSON object per line, candidates in
/// pool order. Round-trips ids, scores, tokens, weights and categories
/// exactly (numbers use shortest round-trip formatting).
std::string serialize_pool(const CandidatePool& pool);

/// Ranked-list JSON: {"method": ..., "k": ..., "entries": [...]}.
std::string serialize_ranked_list(const RankedList& list);

RankedList parse_ranked_list(std::istream& in);
RankedList parse_ranked_list_file(const std::filesystem::path& path);

}  // namespace diverse
