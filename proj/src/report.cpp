#include "heapbound/report.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include <json.hpp>

namespace heapbound {

void write_csv(const Report& report, std::ostream& out) {
  out << "n,mu,sigma,lambda,bound,t_formula,t_direct,achieved,exhaustive,pass\n";
  for (const VerifyRecord& r : report.rows) {
    out << r.n << ',' << r.mu << ',' << r.sigma << ',' << r.lambda << ',' << r.bound << ','
        << r.t_formula << ',' << r.t_direct << ',' << r.achieved << ',';
    if (r.exhaustive) out << *r.exhaustive;
    out << ',' << (r.pass ? "true" : "false") << '\n';
  }
}

void write_json(const Report& report, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["command"] = report.command;
  doc["arguments"] = report.arguments;
  if (report.seed)
    doc["seed"] = *report.seed;
  else
    doc["seed"] = nullptr;
  doc["samples"] = report.samples;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const VerifyRecord& r : report.rows) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    row["mu"] = r.mu;
    row["sigma"] = r.sigma;
    row["lambda"] = r.lambda;
    row["bound"] = r.bound;
    row["t_formula"] = r.t_formula;
    row["t_direct"] = r.t_direct;
    row["achieved"] = r.achieved;
    if (r.exhaustive)
      row["exhaustive"] = *r.exhaustive;
    else
      row["exhaustive"] = nullptr;
    row["pass"] = r.pass;
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

void write_report(const Report& report, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::csv)
    write_csv(report, out);
  else
    write_json(report, out);
}

std::vector<Key> read_array_text(std::istream& in) {
  std::vector<Key> keys;
  std::unordered_set<Key> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t begin = line.find_first_not_of(" \t");
    std::size_t end = line.find_last_not_of(" \t");
    if (begin == std::string::npos)
      throw std::runtime_error("array file: line " + std::to_string(lineno) + " is empty");
    Key value = 0;
    const char* first = line.data() + begin;
    const char* last = line.data() + end + 1;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
      throw std::runtime_error("array file: line " + std::to_string(lineno) +
                               " is not an unsigned integer");
    if (value == 0)
      throw std::runtime_error("array file: line " + std::to_string(lineno) +
                               ": keys must be positive");
    if (!seen.insert(value).second)
      throw std::runtime_error("array file: line " + std::to_string(lineno) + ": duplicate key " +
                               std::to_string(value));
    keys.push_back(value);
  }
  if (keys.empty()) throw std::runtime_error("array file: no keys");
  return keys;
}

void write_array_text(const HeapArray& h, std::ostream& out) {
  for (Key key : h.keys()) out << key << '\n';
}

}  // namespace heapbound
