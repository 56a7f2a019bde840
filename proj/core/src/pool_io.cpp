#include "diverse/pool_io.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "diverse/errors.hpp"

namespace diverse {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

double require_positive_number(const json& value, const std::string& what) {
  if (!value.is_number()) {
    throw ValidationError(what + " must be a number");
  }
  const double v = value.get<double>();
  // std::isfinite is implied: JSON has no inf/nan literals, but a parsed
  // value could still be out of double range after conversion.
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ValidationError(what + " must be a positive finite number");
  }
  return v;
}

Candidate candidate_from_json(const json& record) {
  if (!record.is_object()) {
    throw ValidationError("record must be a JSON object");
  }
  for (const char* field : {"id", "score", "explanations", "categories"}) {
    if (!record.contains(field)) {
      throw ValidationError(std::string("missing field \"") + field + "\"");
    }
  }
  Candidate candidate;
  if (!record["id"].is_string()) {
    throw ValidationError("field \"id\" must be a string");
  }
  candidate.id = record["id"].get<std::string>();
  candidate.score = require_positive_number(record["score"], "field \"score\"");

  const json& explanations = record["explanations"];
  if (!explanations.is_array()) {
    throw ValidationError("field \"explanations\" must be an array");
  }
  candidate.explanations.reserve(explanations.size());
  for (const json& item : explanations) {
    if (!item.is_object() || !item.contains("token") || !item.contains("weight") ||
        !item["token"].is_string()) {
      throw ValidationError("explanations entries must be {\"token\": string, \"weight\": number}");
    }
    candidate.explanations.push_back(
        {item["token"].get<std::string>(),
         require_positive_number(item["weight"], "explanation weight")});
  }

  const json& categories = record["categories"];
  if (!categories.is_array()) {
    throw ValidationError("field \"categories\" must be an array");
  }
  candidate.categories.reserve(categories.size());
  for (const json& category : categories) {
    if (!category.is_string()) {
      throw ValidationError("categories entries must be strings");
    }
    candidate.categories.push_back(category.get<std::string>());
  }
  return candidate;
}

ordered_json candidate_to_json(const Candidate& candidate) {
  ordered_json record;
  record["id"] = candidate.id;
  record["score"] = candidate.score;
  ordered_json explanations = ordered_json::array();
  for (const auto& item : candidate.explanations) {
    explanations.push_back({{"token", item.token}, {"weight", item.weight}});
  }
  record["explanations"] = std::move(explanations);
  record["categories"] = candidate.categories;
  return record;
}

}  // namespace

CandidatePool parse_pool(std::istream& in) {
  std::vector<Candidate> candidates;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::exception& e) {  // parse errors and number overflow
      throw ParseError(std::string("malformed JSON: ") + e.what(), line_no);
    }
    try {
      Candidate candidate = candidate_from_json(record);
      validate_candidate(candidate);
      candidates.push_back(std::move(candidate));
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  // Pool-level checks (duplicate ids) surface without a line number.
  return CandidatePool::from_candidates(std::move(candidates));
}

CandidatePool parse_pool_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open pool file: " + path.string());
  }
  return parse_pool(in);
}

std::string serialize_pool(const CandidatePool& pool) {
  std::string out;
  for (const Candidate& candidate : pool.candidates()) {
    out += candidate_to_json(candidate).dump();
    out += '\n';
  }
  return out;
}

std::string serialize_ranked_list(const RankedList& list) {
  ordered_json doc;
  doc["method"] = std::string(to_string(list.method));
  doc["k"] = list.k;
  ordered_json entries = ordered_json::array();
  for (const RankedEntry& entry : list.entries) {
    ordered_json e;
    e["id"] = entry.id;
    e["position"] = entry.position;
    e["diagnostic"] = entry.diagnostic;
    entries.push_back(std::move(e));
  }
  doc["entries"] = std::move(entries);
  return doc.dump(1) + "\n";
}

RankedList parse_ranked_list(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed ranked-list JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("method") || !doc.contains("k") ||
      !doc.contains("entries") || !doc["entries"].is_array()) {
    throw ValidationError("ranked list must be {\"method\", \"k\", \"entries\"}");
  }
  RankedList list;
  list.method = method_from_string(doc["method"].get<std::string>());
  list.k = doc["k"].get<std::size_t>();
  std::unordered_set<std::string> seen;
  for (const json& e : doc["entries"]) {
    if (!e.is_object() || !e.contains("id") || !e.contains("position") ||
        !e.contains("diagnostic")) {
      throw ValidationError("entries must be {\"id\", \"position\", \"diagnostic\"}");
    }
    RankedEntry entry{e["id"].get<std::string>(), e["position"].get<std::size_t>(),
                      e["diagnostic"].get<double>()};
    if (entry.position != list.entries.size()) {
      throw ValidationError("entry positions must be contiguous from 0");
    }
    if (!seen.insert(entry.id).second) {
      throw ValidationError("duplicate id \"" + entry.id + "\" in ranked list");
    }
    list.entries.push_back(std::move(entry));
  }
  if (list.entries.size() > list.k) {
    throw ValidationError("ranked list longer than its declared k");
  }
  return list;
}

RankedList parse_ranked_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open ranked-list file: " + path.string());
  }
  return parse_ranked_list(in);
}

}  // namespace diverse
