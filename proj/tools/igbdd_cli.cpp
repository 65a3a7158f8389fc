// Benchmark driver for the interval-graph BDD library. Talks to the core
// exclusively through the C interface in igbdd.h.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "igbdd.h"

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultMaxN = 1u << 14;

// CSV schema, one column per record field; the op counters are flattened in
// declared order and the per-level widths are joined with ';'. Everything
// except wall_time_seconds is byte-deterministic for a given seed.
constexpr const char* kCsvHeader =
    "N,n,seed,algorithm,wall_time_seconds,peak_store_nodes,result_size,"
    "op_syntheses,op_negations,op_quantifier_blocks,op_quantifier_bit_ops,"
    "op_argument_reorders,chi_E_size,per_level_sizes";

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_ok(igbdd_status status, const std::string& what) {
  if (status != IGBDD_OK) throw CliError(what + ": " + igbdd_last_error());
}

struct IntervalsHandle {
  igbdd_intervals* ptr = nullptr;
  IntervalsHandle() = default;
  explicit IntervalsHandle(igbdd_intervals* p) : ptr(p) {}
  IntervalsHandle(IntervalsHandle&& other) noexcept : ptr(other.ptr) { other.ptr = nullptr; }
  IntervalsHandle& operator=(IntervalsHandle&&) = delete;
  IntervalsHandle(const IntervalsHandle&) = delete;
  ~IntervalsHandle() { igbdd_intervals_free(ptr); }
};

struct RunHandle {
  igbdd_run* ptr = nullptr;
  RunHandle() = default;
  RunHandle(RunHandle&& other) noexcept : ptr(other.ptr) { other.ptr = nullptr; }
  RunHandle& operator=(RunHandle&&) = delete;
  RunHandle(const RunHandle&) = delete;
  ~RunHandle() { igbdd_run_free(ptr); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw CliError("cannot write " + path);
  out << content;
  if (!out) throw CliError("write to " + path + " failed");
}

// Writes either to the given path or to stdout.
void emit(const std::string& path, const std::string& content) {
  if (path.empty())
    std::cout << content;
  else
    spill(path, content);
}

IntervalsHandle load_intervals(const std::string& path) {
  IntervalsHandle iv;
  require_ok(igbdd_intervals_from_text(slurp(path).c_str(), &iv.ptr), path);
  return iv;
}

IntervalsHandle make_instance(const std::string& kind, std::uint64_t n,
                              std::uint64_t seed, std::uint64_t span_factor) {
  IntervalsHandle iv;
  if (kind == "unit") {
    require_ok(igbdd_intervals_random_unit(n, seed, &iv.ptr), "generate unit");
  } else if (kind == "general") {
    require_ok(igbdd_intervals_random_general(n, static_cast<int64_t>(span_factor * n),
                                              seed, &iv.ptr),
               "generate general");
  } else if (kind == "worstcase") {
    require_ok(igbdd_intervals_worst_case(n, seed, &iv.ptr), "generate worstcase");
  } else {
    throw CliError("unknown instance kind: " + kind);
  }
  return iv;
}

RunHandle execute(const std::string& algorithm, const igbdd_intervals* iv,
                  double* wall_seconds) {
  RunHandle run;
  const auto started = std::chrono::steady_clock::now();
  igbdd_status status;
  if (algorithm == "encode")
    status = igbdd_encode_stats(iv, &run.ptr);
  else if (algorithm == "match")
    status = igbdd_match(iv, &run.ptr);
  else if (algorithm == "color-unit")
    status = igbdd_color(iv, 0, &run.ptr);
  else if (algorithm == "color-general")
    status = igbdd_color(iv, 1, &run.ptr);
  else
    throw CliError("unknown algorithm: " + algorithm);
  *wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  require_ok(status, algorithm);
  return run;
}

// Cross-checks an implicit result against the explicit baseline; any
// disagreement aborts the whole invocation.
void check_run(const std::string& algorithm, const igbdd_intervals* iv,
               const igbdd_run* run) {
  if (algorithm == "encode") return;
  uint64_t result = 0;
  require_ok(igbdd_run_result_size(run, &result), "result size");
  if (algorithm == "match") {
    uint64_t oracle = 0;
    require_ok(igbdd_oracle_matching_size(iv, &oracle), "matching baseline");
    if (result != oracle)
      throw CliError("check failed: matching has " + std::to_string(result) +
                     " pairs, the baseline " + std::to_string(oracle));
    return;
  }
  uint64_t oracle = 0;
  require_ok(igbdd_oracle_color_count(iv, &oracle), "coloring baseline");
  if (result != oracle)
    throw CliError("check failed: coloring uses " + std::to_string(result) +
                   " colors, the baseline " + std::to_string(oracle));
  int proper = 0;
  require_ok(igbdd_check_coloring(iv, run, &proper), "coloring check");
  if (!proper) throw CliError("check failed: coloring is not proper");
}

std::string csv_row(const igbdd_run* run, std::uint64_t seed, double wall_seconds) {
  uint64_t vertices = 0, peak = 0, result = 0, chi_e = 0;
  uint32_t bits = 0;
  igbdd_op_counts ops{};
  require_ok(igbdd_run_vertex_count(run, &vertices), "record");
  require_ok(igbdd_run_bits(run, &bits), "record");
  require_ok(igbdd_run_peak_nodes(run, &peak), "record");
  require_ok(igbdd_run_result_size(run, &result), "record");
  require_ok(igbdd_run_chi_e_size(run, &chi_e), "record");
  const std::string algorithm = igbdd_run_algorithm(run);
  // encode-only runs report the encoding counters, everything else the
  // counters of the algorithm phase (those are the instance-independent ones)
  require_ok(algorithm == "encode" ? igbdd_run_encode_ops(run, &ops)
                                   : igbdd_run_algorithm_ops(run, &ops),
             "record");
  size_t level_count = 0;
  require_ok(igbdd_run_level_profile(run, nullptr, 0, &level_count), "record");
  std::vector<uint64_t> levels(level_count);
  if (level_count > 0)
    require_ok(igbdd_run_level_profile(run, levels.data(), levels.size(), nullptr), "record");

  std::ostringstream row;
  row << vertices << ',' << bits << ',' << seed << ',' << algorithm << ','
      << std::fixed << std::setprecision(6) << wall_seconds << ',' << peak << ','
      << result << ',' << ops.syntheses << ',' << ops.negations << ','
      << ops.quantifier_blocks << ',' << ops.quantifier_bit_ops << ','
      << ops.argument_reorders << ',' << chi_e << ',';
  for (size_t i = 0; i < levels.size(); ++i) row << (i ? ";" : "") << levels[i];
  row << '\n';
  return row.str();
}

std::string csv_preamble() {
  std::ostringstream out;
  out << "# igbdd " << igbdd_version() << ", rng " << igbdd_rng_name() << '\n'
      << kCsvHeader << '\n';
  return out.str();
}

int cmd_generate(const std::string& kind, std::uint64_t n, std::uint64_t seed,
                 std::uint64_t span_factor, const std::string& out_path) {
  IntervalsHandle iv = make_instance(kind, n, seed, span_factor);
  char* text = nullptr;
  require_ok(igbdd_intervals_to_text(iv.ptr, &text), "serialize");
  std::string body(text);
  igbdd_text_free(text);
  std::ostringstream out;
  out << "# kind " << kind << ", seed " << seed << ", rng " << igbdd_rng_name() << '\n'
      << body;
  emit(out_path, out.str());
  return 0;
}

int cmd_single(const std::string& algorithm, const std::string& in_path,
               std::uint64_t seed, bool check, const std::string& out_path,
               const std::string& csv_path) {
  IntervalsHandle iv = load_intervals(in_path);
  double wall = 0;
  RunHandle run = execute(algorithm, iv.ptr, &wall);
  if (check) check_run(algorithm, iv.ptr, run.ptr);

  if (!out_path.empty()) {
    std::ostringstream result;
    if (algorithm == "match") {
      size_t pairs = 0;
      require_ok(igbdd_run_pair_count(run.ptr, &pairs), "pairs");
      result << "# matched pairs\n";
      for (size_t i = 0; i < pairs; ++i) {
        uint64_t a = 0, b = 0;
        require_ok(igbdd_run_pair_at(run.ptr, i, &a, &b), "pairs");
        result << a << ' ' << b << '\n';
      }
    } else if (algorithm != "encode") {
      uint64_t vertices = 0;
      require_ok(igbdd_run_vertex_count(run.ptr, &vertices), "colors");
      result << "# vertex color\n";
      for (uint64_t v = 0; v < vertices; ++v) {
        uint64_t c = 0;
        require_ok(igbdd_run_color_at(run.ptr, v, &c), "colors");
        result << v << ' ' << c << '\n';
      }
    }
    spill(out_path, result.str());
  }

  emit(csv_path, csv_preamble() + csv_row(run.ptr, seed, wall));
  return 0;
}

std::vector<std::uint64_t> sweep_sizes(const json& config) {
  std::vector<std::uint64_t> sizes;
  for (const auto& v : config.value("sizes", json::array()))
    sizes.push_back(v.get<std::uint64_t>());
  for (const auto& v : config.value("log2_sizes", json::array()))
    sizes.push_back(std::uint64_t{1} << v.get<unsigned>());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<std::uint64_t> sweep_seeds(const json& config) {
  std::vector<std::uint64_t> seeds;
  for (const auto& v : config.value("seeds", json::array()))
    seeds.push_back(v.get<std::uint64_t>());
  if (config.contains("seed_count"))
    for (std::uint64_t s = 0; s < config["seed_count"].get<std::uint64_t>(); ++s)
      seeds.push_back(s);
  return seeds;
}

int cmd_sweep(const std::string& config_path, const std::string& csv_path,
              std::uint64_t max_n, bool force_check) {
  json config = json::parse(slurp(config_path));
  const auto sizes = sweep_sizes(config);
  const auto seeds = sweep_seeds(config);
  std::vector<std::string> kinds, algorithms;
  for (const auto& v : config.value("kinds", json::array())) kinds.push_back(v.get<std::string>());
  for (const auto& v : config.value("algorithms", json::array()))
    algorithms.push_back(v.get<std::string>());
  const std::uint64_t span_factor = config.value("span_factor", std::uint64_t{4});
  const bool check = force_check || config.value("check", false);

  for (std::uint64_t n : sizes)
    if (n > max_n)
      throw CliError("size " + std::to_string(n) + " exceeds the cap " +
                     std::to_string(max_n) + "; raise --max-n to confirm");

  std::ostringstream out;
  out << csv_preamble();
  for (std::uint64_t n : sizes)
    for (const auto& kind : kinds)
      for (const auto& algorithm : algorithms)
        for (std::uint64_t seed : seeds) {
          try {
            IntervalsHandle iv = make_instance(kind, n, seed, span_factor);
            double wall = 0;
            RunHandle run = execute(algorithm, iv.ptr, &wall);
            if (check) check_run(algorithm, iv.ptr, run.ptr);
            out << csv_row(run.ptr, seed, wall);
          } catch (const CliError& e) {
            // a failed check ends the sweep; a failed run is recorded and
            // the sweep moves on
            const std::string reason = e.what();
            if (reason.rfind("check failed", 0) == 0) throw;
            out << "# error kind=" << kind << " N=" << n << " seed=" << seed
                << " algorithm=" << algorithm << ": " << reason << '\n';
          }
        }
  emit(csv_path, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interval-graph BDD benchmarks"};
  app.require_subcommand(1);

  std::string kind = "unit", in_path, out_path, csv_path, config_path, mode = "unit";
  std::uint64_t n = 0, seed = 0, span_factor = 4, max_n = kDefaultMaxN;
  bool check = false;

  auto* generate = app.add_subcommand("generate", "write a random instance");
  generate->add_option("kind", kind, "unit, general or worstcase")
      ->required()
      ->check(CLI::IsMember({"unit", "general", "worstcase"}));
  generate->add_option("--n", n, "number of intervals")->required();
  generate->add_option("--seed", seed, "generator seed");
  generate->add_option("--span-factor", span_factor, "endpoint range per interval (general)");
  generate->add_option("--out", out_path, "output file (default stdout)");

  auto add_run_options = [&](CLI::App* cmd, bool with_mode) {
    cmd->add_option("input", in_path, "interval-list file")->required();
    cmd->add_option("--seed", seed, "seed recorded in the CSV");
    cmd->add_option("--csv", csv_path, "CSV output file (default stdout)");
    cmd->add_flag("--check", check, "compare against the explicit baseline");
    cmd->add_option("--out", out_path, "result file");
    if (with_mode)
      cmd->add_option("--mode", mode, "unit or general")
          ->check(CLI::IsMember({"unit", "general"}));
  };

  auto* encode_stats = app.add_subcommand("encode-stats", "encode and report sizes");
  add_run_options(encode_stats, false);
  auto* match = app.add_subcommand("match", "implicit maximum matching");
  add_run_options(match, false);
  auto* color = app.add_subcommand("color", "implicit minimum coloring");
  add_run_options(color, true);

  auto* sweep = app.add_subcommand("sweep", "run a batch from a JSON config");
  sweep->add_option("config", config_path, "JSON config file")->required();
  sweep->add_option("--csv", csv_path, "CSV output file (default stdout)");
  sweep->add_option("--max-n", max_n, "largest allowed instance size");
  sweep->add_flag("--check", check, "cross-check every run");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) return cmd_generate(kind, n, seed, span_factor, out_path);
    if (encode_stats->parsed()) return cmd_single("encode", in_path, seed, check, out_path, csv_path);
    if (match->parsed()) return cmd_single("match", in_path, seed, check, out_path, csv_path);
    if (color->parsed())
      return cmd_single(mode == "general" ? "color-general" : "color-unit", in_path, seed,
                        check, out_path, csv_path);
    if (sweep->parsed()) return cmd_sweep(config_path, csv_path, max_n, check);
  } catch (const std::exception& e) {
    std::cerr << "igbdd: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
