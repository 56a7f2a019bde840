#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diverse/model.hpp"

namespace diverse {

/// Offline diversity metrics of one ranked list against its pool.
struct DiversityReport {
  /// Mean pairwise Jaccard distance of the entries' explanation sets;
  /// absent when any entry has no explanations.
  std::optional<double> ild;
  /// Distinct categories covered by the entries.
  std::size_t category_coverage = 0;
  /// Shannon entropy of the (entry, category) membership multiset,
  /// normalized by ln(categories present); in [0, 1].
  double normalized_entropy = 0.0;
  /// Longest run of consecutive positions sharing a dominant category
  /// (most frequent in the list, ties to the lexicographically smaller);
  /// 0 for an empty list.
  std::size_t max_same_category_run = 0;
  /// score(first entry) / max pool score; 0 for an empty list.
  double head_retention = 0.0;
};

/// Every list entry must name a pool candidate (ValidationError otherwise).
DiversityReport diversity_report(const CandidatePool& pool, const RankedList& list);

struct SampleStats {
  std::size_t n = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased, divisor n-1
};

/// Two-pass mean and unbiased variance. Requires n >= 2.
SampleStats compute_stats(std::span<const double> values);

struct WelchResult {
  double t = 0.0;    // +/-infinity in the degenerate unequal-means case
  double dof = 0.0;
  double p = 1.0;    // two-sided
  bool degenerate = false;
};

/// Welch's two-sample t-test from summary statistics.
/// t = (mean_a - mean_b) / sqrt(v_a/n_a + v_b/n_b), Welch-Satterthwaite
/// dof, two-sided p. Both variances zero: equal means throw
/// DegenerateSamplesError, unequal means yield p = 0 flagged degenerate.
WelchResult welch_t_test(const SampleStats& a, const SampleStats& b);

/// Relative change of treatment over control, in percent.
/// Requires control_mean > 0 (ValidationError).
double lift_percent(double control_mean, double treatment_mean);

struct AbTestReport {
  SampleStats control;
  SampleStats treatment;
  double lift = 0.0;  // percent
  WelchResult test;   // oriented treatment minus control
};

/// Full A/B analysis of raw per-user minutes. Each arm needs >= 2 finite,
/// non-negative observations.
AbTestReport abtest(std::span<const double> control, std::span<const double> treatment);

/// Per-user minutes: either one non-negative decimal per line, or JSONL
/// records {"user_id": ..., "minutes": ...} (detected from the first
/// non-blank line). Blank lines are skipped.
std::vector<double> parse_minutes(std::istream& in);
std::vector<double> parse_minutes_file(const std::filesystem::path& path);

std::string serialize_diversity_report(const DiversityReport& report);
std::string serialize_abtest_report(const AbTestReport& report);

}  // namespace diverse
