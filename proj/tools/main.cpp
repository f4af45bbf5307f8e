#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pathlen/enumerate.hpp"
#include "pathlen/io.hpp"
#include "pathlen/islands.hpp"
#include "pathlen/treebuild.hpp"
#include "pathlen/validate.hpp"

namespace {

constexpr int EXIT_OK = 0;
constexpr int EXIT_DOMAIN = 1;  // invalid sequence / counterexample / mismatch
constexpr int EXIT_USAGE = 2;   // usage or parse error

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open input file: " + path);
  }
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

pathlen::LengthSeq parse_sequence_or_exit(const std::string& input_path) {
  try {
    return pathlen::io::parse_sequence(read_input(input_path));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::exit(EXIT_USAGE);
  }
}

int cmd_validate(const std::string& input_path) {
  pathlen::LengthSeq seq = parse_sequence_or_exit(input_path);
  pathlen::Verdict verdict = pathlen::validate(seq);
  std::cout << pathlen::io::validation_report(seq, verdict);
  return verdict.valid ? EXIT_OK : EXIT_DOMAIN;
}

int cmd_islands(const std::string& input_path, const std::string& format) {
  pathlen::LengthSeq seq = parse_sequence_or_exit(input_path);
  auto tree = pathlen::island_tree(seq);
  if (!tree) {
    std::cout << "no island tree\n";
    return EXIT_OK;
  }
  if (format == "dot") {
    std::cout << pathlen::io::island_tree_to_dot(*tree);
  } else {
    std::cout << pathlen::io::island_tree_to_text(*tree);
  }
  return EXIT_OK;
}

int cmd_build(const std::string& input_path, const std::string& format) {
  pathlen::LengthSeq seq = parse_sequence_or_exit(input_path);
  pathlen::BinTree tree;
  try {
    tree = pathlen::reconstruct(seq);
  } catch (const pathlen::ValidityError& e) {
    std::cerr << "invalid: " << e.verdict().describe() << "\n";
    return EXIT_DOMAIN;
  }
  if (format == "codes") {
    for (const pathlen::Codeword& word : pathlen::codewords(tree)) {
      std::cout << word << "\n";
    }
  } else if (format == "dot") {
    std::cout << pathlen::io::tree_to_dot(tree);
  } else {
    std::cout << pathlen::io::tree_to_json(tree) << "\n";
  }
  return EXIT_OK;
}

int cmd_from_tree(const std::string& input_path) {
  try {
    pathlen::BinTree tree = pathlen::io::parse_tree_json(read_input(input_path));
    std::cout << pathlen::io::format_sequence(pathlen::path_lengths(tree)) << "\n";
    return EXIT_OK;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_USAGE;
  }
}

// Projected enumeration work: total number of trees examined. Saturates at
// limit + 1 so absurd bounds are rejected without computing anything.
std::uint64_t projected_tree_work(std::size_t max_len, std::uint64_t limit) {
  std::uint64_t sum = 0;
  unsigned __int128 catalan = 1;  // Catalan(0)
  for (std::size_t n = 1; n <= max_len; ++n) {
    if (catalan > limit) return limit + 1;
    sum += static_cast<std::uint64_t>(catalan);
    if (sum > limit) return limit + 1;
    catalan = catalan * 2 * (2 * (n - 1) + 1) / (n + 1);  // Catalan(n)
  }
  return sum;
}

int cmd_crosscheck(std::size_t max_len, std::uint32_t max_value,
                   std::uint64_t work_limit) {
  if (max_len < 1) {
    std::cerr << "error: --max-len must be >= 1\n";
    return EXIT_USAGE;
  }
  const std::uint64_t work = projected_tree_work(max_len, work_limit);
  if (work > work_limit) {
    std::cerr << "error: projected enumeration work exceeds --work-limit "
              << work_limit << "\n";
    return EXIT_USAGE;
  }
  pathlen::CrosscheckReport report = pathlen::theorem_crosscheck(max_len, max_value);
  std::cout << report.summary() << "\n";
  if (report.pass) {
    return EXIT_OK;
  }
  if (!report.only_validated.empty()) {
    std::cout << "counterexample (validates, no tree): "
              << pathlen::io::format_sequence(report.only_validated.front()) << "\n";
  }
  if (!report.only_trees.empty()) {
    std::cout << "counterexample (tree, not validated): "
              << pathlen::io::format_sequence(report.only_trees.front()) << "\n";
  }
  return EXIT_DOMAIN;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int cmd_bench(std::size_t n, std::uint64_t seed) {
  if (n < 1) {
    std::cerr << "error: --n must be >= 1\n";
    return EXIT_USAGE;
  }
  std::vector<std::uint32_t> values(n);
  std::uint64_t state = seed;
  for (auto& v : values) {
    v = 1 + static_cast<std::uint32_t>(splitmix64(state) % 30);
  }
  pathlen::LengthSeq seq(std::move(values));

  using clock = std::chrono::steady_clock;
  pathlen::SweepStats stats;
  auto t0 = clock::now();
  std::vector<pathlen::Segment> fast = pathlen::find_islands_fast(seq, &stats);
  auto t1 = clock::now();
  const double fast_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  std::cerr << "fast: " << fast_ms << " ms, ops=" << stats.ops << " (budget "
            << pathlen::MAX_OPS_PER_ELEMENT * n << ")\n";

  std::string check = "skipped";
  if (n <= 10000) {
    auto t2 = clock::now();
    std::vector<pathlen::Segment> naive = pathlen::find_islands_naive(seq);
    auto t3 = clock::now();
    std::cerr << "naive: "
              << std::chrono::duration<double, std::milli>(t3 - t2).count() << " ms\n";
    if (naive != fast) {
      std::cerr << "error: fast and naive detectors disagree\n";
      return EXIT_DOMAIN;
    }
    check = "ok";
  }
  const std::size_t bound = 2 * n - 1;
  if (fast.size() > bound) {
    std::cerr << "error: island count exceeds 2n-1\n";
    return EXIT_DOMAIN;
  }
  std::cout << "n=" << n << " seed=" << seed << " islands=" << fast.size()
            << " bound=" << bound << " check=" << check << "\n";
  return EXIT_OK;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "pathlen: decide whether an integer sequence is the left-to-right "
      "leaf-depth sequence of a binary tree, and rebuild the tree and its "
      "prefix-free codebook with exact arithmetic"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "text";
  std::string build_format = "json";
  std::size_t max_len = 8;
  std::uint32_t max_value = 8;
  std::uint64_t work_limit = 10000000;
  std::size_t bench_n = 1000;
  std::uint64_t bench_seed = 0;

  auto* validate_cmd =
      app.add_subcommand("validate", "check a sequence and list its islands");
  validate_cmd->add_option("--input", input, "input file, or - for stdin");

  auto* islands_cmd = app.add_subcommand("islands", "print the island tree");
  islands_cmd->add_option("--input", input, "input file, or - for stdin");
  islands_cmd->add_option("--format", format, "text or dot")
      ->check(CLI::IsMember({"text", "dot"}));

  auto* build_cmd =
      app.add_subcommand("build", "reconstruct the tree from a sequence");
  build_cmd->add_option("--input", input, "input file, or - for stdin");
  build_cmd->add_option("--format", build_format, "json, dot or codes")
      ->check(CLI::IsMember({"json", "dot", "codes"}));

  auto* from_tree_cmd =
      app.add_subcommand("from-tree", "read a JSON tree, print its sequence");
  from_tree_cmd->add_option("--input", input, "input file, or - for stdin");

  auto* crosscheck_cmd = app.add_subcommand(
      "crosscheck", "compare validated sequences against enumerated trees");
  crosscheck_cmd->add_option("--max-len", max_len, "maximum sequence length");
  crosscheck_cmd->add_option("--max-value", max_value, "maximum value");
  crosscheck_cmd->add_option("--work-limit", work_limit,
                             "refuse bounds whose projected work exceeds this");

  auto* bench_cmd =
      app.add_subcommand("bench", "time the island detectors on random input");
  bench_cmd->add_option("--n", bench_n, "sequence length");
  bench_cmd->add_option("--seed", bench_seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? EXIT_OK : EXIT_USAGE;
  }

  try {
    if (app.got_subcommand(validate_cmd)) return cmd_validate(input);
    if (app.got_subcommand(islands_cmd)) return cmd_islands(input, format);
    if (app.got_subcommand(build_cmd)) return cmd_build(input, build_format);
    if (app.got_subcommand(from_tree_cmd)) return cmd_from_tree(input);
    if (app.got_subcommand(crosscheck_cmd))
      return cmd_crosscheck(max_len, max_value, work_limit);
    if (app.got_subcommand(bench_cmd)) return cmd_bench(bench_n, bench_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_USAGE;
  }
  return EXIT_USAGE;
}
