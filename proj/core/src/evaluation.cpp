#include "diverse/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <map>

#include <nlohmann/json.hpp>

#include "diverse/errors.hpp"
#include "diverse/jaccard.hpp"
#include "diverse/student_t.hpp"

namespace diverse {
namespace {

using ordered_json = nlohmann::ordered_json;

double json_number_or_null(double v, ordered_json& slot) {
  if (std::isfinite(v)) {
    slot = v;
  } else {
    slot = nullptr;
  }
  return v;
}

}  // namespace

DiversityReport diversity_report(const CandidatePool& pool, const RankedList& list) {
  std::vector<std::size_t> indices;
  indices.reserve(list.entries.size());
  for (const RankedEntry& entry : list.entries) {
    auto index = pool.index_of(entry.id);
    if (!index) {
      throw ValidationError("ranked entry \"" + entry.id + "\" is not in the pool");
    }
    indices.push_back(*index);
  }

  DiversityReport report;
  if (indices.empty()) return report;

  // ILD is undefined (absent) when any entry lacks explanation tokens; the
  // remaining metrics are still computed.
  try {
    report.ild = list_diversity(pool, indices, DistanceKind::unweighted);
  } catch (const UndefinedDistanceError&) {
    report.ild = std::nullopt;
  }

  // Membership multiset over (entry, category).
  std::map<std::string_view, std::size_t> counts;
  std::size_t total_memberships = 0;
  for (std::size_t index : indices) {
    for (const std::string& category : pool.candidates()[index].categories) {
      ++counts[category];
      ++total_memberships;
    }
  }
  report.category_coverage = counts.size();

  if (counts.size() > 1) {
    double entropy = 0.0;
    for (const auto& [category, count] : counts) {
      const double p = static_cast<double>(count) / static_cast<double>(total_memberships);
      entropy -= p * std::log(p);
    }
    report.normalized_entropy =
        std::min(1.0, entropy / std::log(static_cast<double>(counts.size())));
  }

  // Dominant category per position: the entry's category most frequent in
  // the list, ties to the lexicographically smaller id.
  std::size_t best_run = 0;
  std::size_t run = 0;
  std::string_view previous;
  for (std::size_t index : indices) {
    const auto& categories = pool.candidates()[index].categories;
    std::string_view dominant;
    std::size_t dominant_count = 0;
    for (const std::string& category : categories) {
      const std::size_t count = counts[category];
      if (count > dominant_count ||
          (count == dominant_count && (dominant.empty() || category < dominant))) {
        dominant = category;
        dominant_count = count;
      }
    }
    if (!dominant.empty() && dominant == previous) {
      ++run;
    } else {
      run = 1;
    }
    previous = dominant;
    best_run = std::max(best_run, run);
  }
  report.max_same_category_run = best_run;

  double max_score = 0.0;
  for (const Candidate& candidate : pool.candidates()) {
    max_score = std::max(max_score, candidate.score);
  }
  report.head_retention = pool.candidates()[indices.front()].score / max_score;
  return report;
}

SampleStats compute_stats(std::span<const double> values) {
  if (values.size() < 2) {
    throw DegenerateSamplesError("need at least 2 observations per arm");
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double squares = 0.0;
  for (double v : values) {
    const double d = v - mean;
    squares += d * d;
  }
  return {values.size(), mean, squares / static_cast<double>(values.size() - 1)};
}

WelchResult welch_t_test(const SampleStats& a, const SampleStats& b) {
  if (a.n < 2 || b.n < 2) {
    throw DegenerateSamplesError("Welch's t-test needs n >= 2 in both samples");
  }
  if (!(a.variance >= 0.0) || !(b.variance >= 0.0)) {
    throw std::invalid_argument("variances must be non-negative");
  }
  if (a.variance == 0.0 && b.variance == 0.0) {
    if (a.mean == b.mean) {
      throw DegenerateSamplesError(
          "both variances are zero and the means are equal; no test statistic exists");
    }
    WelchResult degenerate;
    degenerate.t = std::copysign(std::numeric_limits<double>::infinity(),
                                 a.mean - b.mean);
    degenerate.dof = std::numeric_limits<double>::quiet_NaN();
    degenerate.p = 0.0;
    degenerate.degenerate = true;
    return degenerate;
  }

  const double qa = a.variance / static_cast<double>(a.n);
  const double qb = b.variance / static_cast<double>(b.n);
  WelchResult result;
  result.t = (a.mean - b.mean) / std::sqrt(qa + qb);
  // Welch-Satterthwaite degrees of freedom.
  result.dof = (qa + qb) * (qa + qb) /
               (qa * qa / static_cast<double>(a.n - 1) +
                qb * qb / static_cast<double>(b.n - 1));
  result.p = student_t_two_sided_p(result.t, result.dof);
  return result;
}

double lift_percent(double control_mean, double treatment_mean) {
  if (!(control_mean > 0.0)) {
    throw ValidationError("lift requires a positive control mean");
  }
  return 100.0 * (treatment_mean - control_mean) / control_mean;
}

AbTestReport abtest(std::span<const double> control, std::span<const double> treatment) {
  for (auto [name, arm] : {std::pair{"control", control}, {"treatment", treatment}}) {
    if (arm.size() < 2) {
      throw DegenerateSamplesError(std::string(name) + " arm needs at least 2 observations");
    }
    for (double v : arm) {
      if (!std::isfinite(v) || v < 0.0) {
        throw ValidationError(std::string(name) +
                              " arm contains a negative or non-finite value");
      }
    }
  }
  AbTestReport report;
  report.control = compute_stats(control);
  report.treatment = compute_stats(treatment);
  report.lift = lift_percent(report.control.mean, report.treatment.mean);
  // t oriented as treatment minus control so its sign matches the lift's.
  report.test = welch_t_test(report.treatment, report.control);
  return report;
}

std::vector<double> parse_minutes(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  bool jsonl = false;
  bool format_known = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;  // blank line
    if (!format_known) {
      jsonl = line[start] == '{';
      format_known = true;
    }
    double minutes = 0.0;
    if (jsonl) {
      nlohmann::json record;
      try {
        record = nlohmann::json::parse(line);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), line_no);
      }
      if (!record.is_object() || !record.contains("user_id") ||
          !record.contains("minutes") || !record["minutes"].is_number()) {
        throw ParseError("expected {\"user_id\": ..., \"minutes\": number}", line_no);
      }
      minutes = record["minutes"].get<double>();
    } else {
      try {
        std::size_t consumed = 0;
        minutes = std::stod(line, &consumed);
        const auto rest = line.find_first_not_of(" \t\r", consumed);
        if (rest != std::string::npos) {
          throw ParseError("trailing characters after number", line_no);
        }
      } catch (const std::invalid_argument&) {
        throw ParseError("expected one decimal value", line_no);
      } catch (const std::out_of_range&) {
        throw ParseError("value out of range", line_no);
      }
    }
    if (!std::isfinite(minutes) || minutes < 0.0) {
      throw ParseError("minutes must be finite and non-negative", line_no);
    }
    values.push_back(minutes);
  }
  return values;
}

std::vector<double> parse_minutes_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open minutes file: " + path.string());
  }
  return parse_minutes(in);
}

std::string serialize_diversity_report(const DiversityReport& report) {
  ordered_json doc;
  if (report.ild) {
    doc["ild"] = *report.ild;
  } else {
    doc["ild"] = nullptr;
  }
  doc["category_coverage"] = report.category_coverage;
  doc["normalized_entropy"] = report.normalized_entropy;
  doc["max_same_category_run"] = report.max_same_category_run;
  doc["head_retention"] = report.head_retention;
  return doc.dump(1) + "\n";
}

std::string serialize_abtest_report(const AbTestReport& report) {
  ordered_json doc;
  for (auto [name, stats] :
       {std::pair{"control", report.control}, {"treatment", report.treatment}}) {
    ordered_json arm;
    arm["n"] = stats.n;
    arm["mean"] = stats.mean;
    arm["variance"] = stats.variance;
    doc[name] = std::move(arm);
  }
  doc["lift_percent"] = report.lift;
  json_number_or_null(report.test.t, doc["t_stat"]);
  json_number_or_null(report.test.dof, doc["dof"]);
  doc["p_value"] = report.test.p;
  doc["degenerate"] = report.test.degenerate;
  return doc.dump(1) + "\n";
}

}  // namespace diverse
