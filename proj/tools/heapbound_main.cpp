#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "heapbound/adversary.hpp"
#include "heapbound/heap.hpp"
#include "heapbound/numeric.hpp"
#include "heapbound/oracle.hpp"
#include "heapbound/report.hpp"
#include "heapbound/treegeom.hpp"

namespace {

using namespace heapbound;

// Exit codes: 0 all checks pass, 1 a check failed, 2 bad input domain,
// 3 file or data error. CLI11 reports usage errors with its own codes.
constexpr int kExitCheckFailed = 1;
constexpr int kExitDomainError = 2;
constexpr int kExitDataError = 3;

std::string digit_string(const BinaryProfile& profile) {
  std::string s;
  s.reserve(profile.digits.size());
  for (std::uint8_t d : profile.digits) s.push_back(d ? '1' : '0');
  return s;
}

int cmd_bound(std::uint64_t n) {
  const BinaryProfile profile = binary_profile(n);
  const BoundReport report = bound_report(n);
  std::cout << "n=" << profile.n << " digits=" << digit_string(profile) << " mu=" << profile.mu
            << " sigma=" << profile.sigma << " lambda=" << profile.lambda
            << " floor_log2=" << profile.floor_log2 << " bit_length=" << profile.bit_length
            << " height_sum=" << report.height_sum << " bound=" << report.worst_case_comparisons
            << '\n';
  return 0;
}

int cmd_generate(std::uint64_t n, const std::string& output) {
  const HeapArray h = worst_case(n);
  if (output.empty()) {
    write_array_text(h, std::cout);
    return 0;
  }
  std::ofstream out(output);
  if (!out) throw std::runtime_error("cannot open output file: " + output);
  write_array_text(h, out);
  if (!out.flush()) throw std::runtime_error("write failed: " + output);
  return 0;
}

int cmd_run(const std::string& input) {
  std::ifstream in(input);
  if (!in) throw std::runtime_error("cannot open input file: " + input);
  HeapArray h(read_array_text(in));
  const RunStats stats = buildheap(h);
  const bool heap_ok = is_heap(h);
  std::cout << "n=" << h.size() << " comparisons=" << stats.comparisons
            << " swaps=" << stats.swaps << " is_heap=" << (heap_ok ? "true" : "false") << '\n';
  return heap_ok ? 0 : kExitCheckFailed;
}

int cmd_verify(std::uint64_t lo, std::uint64_t hi, const VerifyOptions& opts, bool sampling,
               ReportFormat format, const std::string& output,
               const std::vector<std::string>& arguments) {
  if (opts.exhaustive_limit > kDefaultExhaustiveLimit)
    std::cerr << "warning: exhaustive search above n=" << kDefaultExhaustiveLimit
              << " runs n! heap constructions per size\n";
  Report report;
  report.command = "verify";
  report.arguments = arguments;
  report.samples = sampling ? opts.samples : 0;
  if (sampling) report.seed = opts.seed;
  report.rows = verify_range(lo, hi, opts);

  if (output.empty()) {
    write_report(report, format, std::cout);
  } else {
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot open output file: " + output);
    write_report(report, format, out);
    if (!out.flush()) throw std::runtime_error("write failed: " + output);
  }

  std::uint64_t passed = 0;
  for (const VerifyRecord& row : report.rows) passed += row.pass ? 1 : 0;
  std::cerr << "verify: " << passed << "/" << report.rows.size() << " rows pass\n";
  return passed == report.rows.size() ? 0 : kExitCheckFailed;
}

int cmd_cover(std::uint64_t n) {
  const bool covered = edge_cover_check(n);
  const std::uint64_t floor_log2 = binary_profile(n).floor_log2;
  std::uint64_t special_edges = 0;
  std::ostringstream table;
  for (std::uint64_t j = 1; j <= n / 2; ++j) {
    const SpecialPath sp = special_path(j, n);
    special_edges += sp.length;
    table << "j=" << j << " nodes=";
    for (std::size_t i = 0; i < sp.nodes.size(); ++i) {
      if (i) table << ',';
      table << sp.nodes[i];
    }
    table << " length=" << sp.length << '\n';
  }
  std::cout << "n=" << n << " covered=" << (covered ? "true" : "false")
            << " tree_edges=" << (n - 1) << " special_edges=" << special_edges
            << " leftmost_edges=" << floor_log2 << '\n'
            << table.str();
  return covered ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact comparison counts for bottom-up heap construction"};
  app.require_subcommand(1);

  std::uint64_t n = 0;
  std::uint64_t lo = 0, hi = 0;
  std::string output;
  std::string input;
  std::string format_name = "csv";
  VerifyOptions opts;
  bool sampling = false;

  CLI::App* bound = app.add_subcommand("bound", "Print digit statistics and the worst-case bound");
  bound->add_option("n", n, "heap size")->required();

  CLI::App* generate = app.add_subcommand("generate", "Write a worst-case key array");
  generate->add_option("n", n, "heap size")->required();
  generate->add_option("--output", output, "output file (default: standard output)");

  CLI::App* run = app.add_subcommand("run", "Build a heap from an array file and count");
  run->add_option("file", input, "array file, one key per line")->required();

  CLI::App* verify = app.add_subcommand("verify", "Check every size in a range");
  verify->add_option("lo", lo, "first size")->required();
  verify->add_option("hi", hi, "last size")->required();
  verify->add_option("--exhaustive-limit", opts.exhaustive_limit,
                     "run the brute-force oracle for sizes up to this");
  CLI::Option* samples_opt =
      verify->add_option("--samples", opts.samples, "random permutations per size");
  verify->add_option("--seed", opts.seed, "random sampling seed");
  verify->add_option("--format", format_name, "report format")
      ->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--output", output, "report file (default: standard output)");

  CLI::App* cover = app.add_subcommand("cover", "Show the special-path edge cover");
  cover->add_option("n", n, "heap size")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (bound->parsed()) return cmd_bound(n);
    if (generate->parsed()) return cmd_generate(n, output);
    if (run->parsed()) return cmd_run(input);
    if (verify->parsed()) {
      if (lo > hi) {
        std::cerr << "error: verify needs lo <= hi\n";
        return kExitDomainError;
      }
      sampling = samples_opt->count() > 0;
      if (!sampling) opts.samples = 0;
      if (sampling && opts.samples == 0) {
        std::cerr << "error: --samples must be positive\n";
        return kExitDomainError;
      }
      const ReportFormat format = format_name == "json" ? ReportFormat::json : ReportFormat::csv;
      // argv[1] is the subcommand itself; the report's command field holds it.
      const std::vector<std::string> arguments(argv + 2, argv + argc);
      return cmd_verify(lo, hi, opts, sampling, format, output, arguments);
    }
    if (cover->parsed()) return cmd_cover(n);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return 0;
}
