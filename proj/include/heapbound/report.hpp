#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "heapbound/heap.hpp"
#include "heapbound/oracle.hpp"

namespace heapbound {

inline constexpr const char* kToolName = "heapbound";
inline constexpr const char* kToolVersion = "0.1.0";

enum class ReportFormat { csv, json };

// Verification rows plus the invocation that produced them. Every value is an
// integer or a boolean, so both output formats round-trip losslessly.
struct Report {
  std::string command;
  std::vector<std::string> arguments;
  std::optional<std::uint64_t> seed;  // set when random sampling ran
  std::uint64_t samples = 0;
  std::vector<VerifyRecord> rows;
};

// Fixed column set: n, mu, sigma, lambda, bound, t_formula, t_direct,
// achieved, exhaustive (empty when skipped), pass.
void write_csv(const Report& report, std::ostream& out);

// Same row data as the CSV plus tool/version/command metadata.
void write_json(const Report& report, std::ostream& out);

void write_report(const Report& report, ReportFormat format, std::ostream& out);

// Array text format shared by `generate` and `run`: one decimal key per
// line, line i holding H(i), no header. The reader enforces at least one
// key, all keys positive and distinct, and throws std::runtime_error with
// the offending line on malformed input.
std::vector<Key> read_array_text(std::istream& in);
void write_array_text(const HeapArray& h, std::ostream& out);

}  // namespace heapbound
