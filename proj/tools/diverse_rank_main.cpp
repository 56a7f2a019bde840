// diverse-rank: batch re-ranking, evaluation and A/B analysis pipelines.
//
// Exit codes: 0 success, 1 data/validation error, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "diverse/benchgen.hpp"
#include "diverse/errors.hpp"
#include "diverse/evaluation.hpp"
#include "diverse/pool_io.hpp"
#include "diverse/rank.hpp"
#include "diverse/submodular.hpp"
#include "diverse/swap.hpp"

namespace {

using diverse::CandidatePool;
using diverse::DiversityReport;
using diverse::Method;
using diverse::RankedList;
using diverse::RankRequest;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsageError = 2;

void write_output(const std::string& output_path, const std::string& content) {
  if (output_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) {
    throw diverse::ValidationError("cannot open output file: " + output_path);
  }
  out << content;
  if (!out) {
    throw diverse::ValidationError("failed writing output file: " + output_path);
  }
}

struct RankOptions {
  std::string input;
  std::string output;
  std::string method;
  std::size_t k = 40;
  double delta = 0.10;
  std::uint64_t max_iterations = 0;  // 0 = default k*k
  bool weighted_jaccard = false;
};

int cmd_rank(const RankOptions& options) {
  CandidatePool pool = diverse::parse_pool_file(options.input);
  RankRequest request;
  request.k = options.k;
  request.method = diverse::method_from_string(options.method);
  request.swap_params.relevance_budget = options.delta;
  if (options.max_iterations > 0) {
    request.swap_params.max_iterations = options.max_iterations;
  }
  request.swap_params.use_weighted_jaccard = options.weighted_jaccard;

  RankedList list = diverse::rank(pool, request);
  if (list.method == Method::lazy_greedy) {
    // Lazy evaluation is a strategy, not a different ranking: emitted files
    // are interchangeable with greedy ones.
    list.method = Method::greedy;
  }
  write_output(options.output, diverse::serialize_ranked_list(list));
  return kExitOk;
}

struct EvalOptions {
  std::string pool;
  std::string list;
};

int cmd_eval(const EvalOptions& options) {
  CandidatePool pool = diverse::parse_pool_file(options.pool);
  RankedList list = diverse::parse_ranked_list_file(options.list);
  DiversityReport report = diverse::diversity_report(pool, list);
  write_output("", diverse::serialize_diversity_report(report));
  return kExitOk;
}

struct AbTestOptions {
  std::string control;
  std::string treatment;
};

int cmd_abtest(const AbTestOptions& options) {
  const std::vector<double> control = diverse::parse_minutes_file(options.control);
  const std::vector<double> treatment = diverse::parse_minutes_file(options.treatment);
  const diverse::AbTestReport report = diverse::abtest(control, treatment);
  write_output("", diverse::serialize_abtest_report(report));
  return kExitOk;
}

struct GenOptions {
  std::size_t n = 0;
  std::size_t artists = 1;
  std::size_t albums = 1;
  double score_shape = 1.0;
  std::size_t noise_tokens = 2;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_gen(const GenOptions& options) {
  diverse::GenSpec spec;
  spec.n_candidates = options.n;
  spec.n_artists = options.artists;
  spec.albums_per_artist = options.albums;
  spec.score_shape = options.score_shape;
  spec.noise_tokens = options.noise_tokens;
  spec.seed = options.seed;

  // DIVERSE_RANK_SEED, when set, overrides --seed.
  if (const char* env_seed = std::getenv("DIVERSE_RANK_SEED")) {
    try {
      std::size_t consumed = 0;
      spec.seed = std::stoull(env_seed, &consumed);
      if (env_seed[consumed] != '\0') {
        throw std::invalid_argument("trailing characters");
      }
    } catch (const std::exception&) {
      std::cerr << "error: DIVERSE_RANK_SEED must be an unsigned 64-bit integer\n";
      return kExitUsageError;
    }
  }

  const CandidatePool pool = diverse::generate(spec);
  write_output(options.output, diverse::serialize_pool(pool));
  return kExitOk;
}

struct CompareOptions {
  std::string pool;
  std::size_t k = 40;
  bool as_json = false;
  bool as_table = false;
};

ordered_json report_row(const std::string& method, const DiversityReport& report) {
  ordered_json row;
  row["method"] = method;
  if (report.ild) {
    row["ild"] = *report.ild;
  } else {
    row["ild"] = nullptr;
  }
  row["category_coverage"] = report.category_coverage;
  row["normalized_entropy"] = report.normalized_entropy;
  row["max_same_category_run"] = report.max_same_category_run;
  row["head_retention"] = report.head_retention;
  return row;
}

int cmd_compare(const CompareOptions& options) {
  CandidatePool pool = diverse::parse_pool_file(options.pool);

  // All four methods run in-process against the single parsed pool, so the
  // rows are directly comparable.
  const std::pair<std::string, Method> methods[] = {
      {"baseline", Method::baseline},
      {"swap", Method::swap},
      {"greedy", Method::greedy},
      {"lazy", Method::lazy_greedy},
  };
  ordered_json rows = ordered_json::array();
  for (const auto& [name, method] : methods) {
    RankRequest request;
    request.k = options.k;
    request.method = method;
    const RankedList list = diverse::rank(pool, request);
    rows.push_back(report_row(name, diverse::diversity_report(pool, list)));
  }

  if (options.as_json) {
    ordered_json doc;
    doc["k"] = options.k;
    doc["pool_size"] = pool.size();
    doc["rows"] = std::move(rows);
    write_output("", doc.dump(1) + "\n");
    return kExitOk;
  }

  std::ostringstream table;
  table << std::left << std::setw(10) << "method" << std::right << std::setw(10) << "ild"
        << std::setw(10) << "coverage" << std::setw(10) << "entropy" << std::setw(9)
        << "max_run" << std::setw(11) << "head_ret" << '\n';
  table << std::string(60, '-') << '\n';
  table << std::fixed << std::setprecision(4);
  for (const auto& row : rows) {
    table << std::left << std::setw(10) << row["method"].get<std::string>() << std::right;
    if (row["ild"].is_null()) {
      table << std::setw(10) << "-";
    } else {
      table << std::setw(10) << row["ild"].get<double>();
    }
    table << std::setw(10) << row["category_coverage"].get<std::size_t>()
          << std::setw(10) << row["normalized_entropy"].get<double>()
          << std::setw(9) << row["max_same_category_run"].get<std::size_t>()
          << std::setw(11) << row["head_retention"].get<double>() << '\n';
  }
  write_output("", table.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diversify scored recommendation candidates and analyze the results"};
  app.require_subcommand(1);

  const auto in_unit_range = CLI::Validator(
      [](std::string& value) -> std::string {
        try {
          if (const double v = std::stod(value); v < 0.0 || v >= 1.0) {
            return "value must lie in [0, 1)";
          }
        } catch (const std::exception&) {
          return "value must be a number in [0, 1)";
        }
        return {};
      },
      "IN [0,1)");

  RankOptions rank_options;
  CLI::App* rank_cmd = app.add_subcommand("rank", "Re-rank a candidate pool into a top-k list");
  rank_cmd->add_option("--input", rank_options.input, "Candidate pool (JSONL)")->required();
  rank_cmd->add_option("--output", rank_options.output, "Write JSON here instead of stdout");
  rank_cmd->add_option("--method", rank_options.method, "baseline|swap|greedy|lazy")
      ->required()
      ->check(CLI::IsMember({"baseline", "swap", "greedy", "lazy"}));
  rank_cmd->add_option("--k", rank_options.k, "List length")
      ->default_val(40)
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  rank_cmd->add_option("--delta", rank_options.delta,
                       "Relevance budget for swap (fraction of top-k score)")
      ->default_val(0.10)
      ->check(in_unit_range);
  rank_cmd->add_option("--max-iter", rank_options.max_iterations,
                       "Accepted-swap cap (default k*k)")
      ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
  rank_cmd->add_flag("--weighted-jaccard", rank_options.weighted_jaccard,
                     "Use explanation weights in swap distances");

  EvalOptions eval_options;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Diversity metrics of a ranked list");
  eval_cmd->add_option("--pool", eval_options.pool, "Candidate pool (JSONL)")->required();
  eval_cmd->add_option("--list", eval_options.list, "Ranked list (JSON)")->required();

  AbTestOptions abtest_options;
  CLI::App* abtest_cmd =
      app.add_subcommand("abtest", "Lift and Welch's t-test over two minutes files");
  abtest_cmd->add_option("--control", abtest_options.control, "Control arm minutes")
      ->required();
  abtest_cmd->add_option("--treatment", abtest_options.treatment, "Treatment arm minutes")
      ->required();

  GenOptions gen_options;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a synthetic clustered catalog");
  gen_cmd->add_option("--n", gen_options.n, "Number of candidates")->required();
  gen_cmd->add_option("--artists", gen_options.artists, "Number of artists")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  gen_cmd->add_option("--albums", gen_options.albums, "Albums per artist")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  gen_cmd->add_option("--score-shape", gen_options.score_shape, "Pareto shape")
      ->default_val(1.0)
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--noise-tokens", gen_options.noise_tokens,
                      "Extra random tokens per candidate")
      ->default_val(2);
  gen_cmd->add_option("--seed", gen_options.seed,
                      "Generator seed (DIVERSE_RANK_SEED overrides)")
      ->default_val(0);
  gen_cmd->add_option("--output", gen_options.output, "Write JSONL here instead of stdout");

  CompareOptions compare_options;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Diversity metrics of all methods on one pool");
  compare_cmd->add_option("--pool", compare_options.pool, "Candidate pool (JSONL)")->required();
  compare_cmd->add_option("--k", compare_options.k, "List length")
      ->default_val(40)
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  CLI::Option* json_flag =
      compare_cmd->add_flag("--json", compare_options.as_json, "Machine-readable output");
  compare_cmd->add_flag("--table", compare_options.as_table, "Aligned text table (default)")
      ->excludes(json_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsageError;
  }

  try {
    if (app.got_subcommand(rank_cmd)) return cmd_rank(rank_options);
    if (app.got_subcommand(eval_cmd)) return cmd_eval(eval_options);
    if (app.got_subcommand(abtest_cmd)) return cmd_abtest(abtest_options);
    if (app.got_subcommand(gen_cmd)) return cmd_gen(gen_options);
    if (app.got_subcommand(compare_cmd)) return cmd_compare(compare_options);
  } catch (const diverse::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitUsageError;
}
