// Copyright 2026 The aucdiag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aucdiag/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "aucdiag/errors.hpp"

namespace aucdiag {
namespace {

std::string format_prob(double p) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", p);
  return buf;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream iss(line);
  std::string field;
  while (iss >> field) fields.push_back(field);
  return fields;
}

std::int64_t parse_int(const std::string& s, int line, const char* what) {
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (errno != 0 || end != s.c_str() + s.size() || s.empty())
    throw ParseError(line, std::string("expected integer for ") + what + ", got '" + s + "'");
  return v;
}

double parse_prob(const std::string& s, int line, const char* what) {
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || s.empty())
    throw ParseError(line, std::string("expected number for ") + what + ", got '" + s + "'");
  if (!(v >= 0.0 && v <= 1.0))
    throw ParseError(line, std::string(what) + " must lie in [0,1], got '" + s + "'");
  return v;
}

}  // namespace

void save_graph(const BipartiteDiagnosisGraph& graph, const QmrDtNoiseModel& model,
                std::ostream& out) {
  out << "BDG v1 " << graph.num_objects << ' ' << graph.num_queries << '\n';
  for (std::int32_t j = 0; j < graph.num_queries; ++j) {
    const auto jj = static_cast<std::size_t>(j);
    out << "Q " << j << ' ' << format_prob(model.leak_complement[jj]);
    const auto& pa = graph.parents[jj];
    for (std::size_t k = 0; k < pa.size(); ++k)
      out << ' ' << pa[k] << ':' << format_prob(model.inhibition[jj][k]);
    out << '\n';
  }
  out << "PRIOR";
  for (double a : model.prior) out << ' ' << format_prob(a);
  out << '\n';
}

void save_graph(const BipartiteDiagnosisGraph& graph, const QmrDtNoiseModel& model,
                const std::filesystem::path& destination) {
  std::ofstream out(destination);
  if (!out) throw std::runtime_error("cannot open " + destination.string() + " for writing");
  save_graph(graph, model, out);
  out.flush();
  if (!out) throw std::runtime_error("write to " + destination.string() + " failed");
}

std::pair<BipartiteDiagnosisGraph, QmrDtNoiseModel> load_graph(std::istream& in) {
  int line_no = 0;
  std::string line;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    ++line_no;
    return false;
  };

  if (!next_line()) throw ParseError(line_no, "empty file, expected 'BDG v1 M N' header");
  auto fields = split_fields(line);
  if (fields.size() != 4 || fields[0] != "BDG" || fields[1] != "v1")
    throw ParseError(line_no, "malformed header, expected 'BDG v1 M N'");
  const auto num_objects = parse_int(fields[2], line_no, "M");
  const auto num_queries = parse_int(fields[3], line_no, "N");
  if (num_objects <= 0 || num_objects > (1 << 24))
    throw ParseError(line_no, "M out of range");
  if (num_queries <= 0 || num_queries > (1 << 24))
    throw ParseError(line_no, "N out of range");

  QmrDtNoiseModel model;
  std::vector<std::vector<std::int32_t>> parents(static_cast<std::size_t>(num_queries));
  model.leak_complement.assign(static_cast<std::size_t>(num_queries), 0.0);
  model.inhibition.resize(static_cast<std::size_t>(num_queries));
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(num_queries), 0);

  for (std::int64_t q = 0; q < num_queries; ++q) {
    if (!next_line()) throw ParseError(line_no, "unexpected end of file, expected a 'Q' line");
    fields = split_fields(line);
    if (fields.size() < 3 || fields[0] != "Q")
      throw ParseError(line_no, "expected 'Q j rho0 [k:rho ...]'");
    const auto j = parse_int(fields[1], line_no, "query id");
    if (j < 0 || j >= num_queries)
      throw ParseError(line_no, "query id " + std::to_string(j) + " out of range [0, " +
                                    std::to_string(num_queries) + ")");
    const auto jj = static_cast<std::size_t>(j);
    if (seen[jj]) throw ParseError(line_no, "duplicate query id " + std::to_string(j));
    seen[jj] = 1;
    model.leak_complement[jj] = parse_prob(fields[2], line_no, "leak complement");
    for (std::size_t f = 3; f < fields.size(); ++f) {
      const auto colon = fields[f].find(':');
      if (colon == std::string::npos)
        throw ParseError(line_no, "expected 'k:rho' edge field, got '" + fields[f] + "'");
      const auto k = parse_int(fields[f].substr(0, colon), line_no, "parent index");
      if (k < 0 || k >= num_objects)
        throw ParseError(line_no, "parent index " + std::to_string(k) + " out of range [0, " +
                                      std::to_string(num_objects) + ")");
      for (std::int32_t existing : parents[jj]) {
        if (existing == k)
          throw ParseError(line_no, "duplicate parent index " + std::to_string(k));
      }
      parents[jj].push_back(static_cast<std::int32_t>(k));
      model.inhibition[jj].push_back(
          parse_prob(fields[f].substr(colon + 1), line_no, "inhibition"));
    }
  }

  if (!next_line()) throw ParseError(line_no, "unexpected end of file, expected 'PRIOR' line");
  fields = split_fields(line);
  if (fields.empty() || fields[0] != "PRIOR")
    throw ParseError(line_no, "expected 'PRIOR a0 ... a_{M-1}'");
  if (fields.size() != static_cast<std::size_t>(num_objects) + 1)
    throw ParseError(line_no, "PRIOR has " + std::to_string(fields.size() - 1) +
                                  " entries, expected " + std::to_string(num_objects));
  model.prior.reserve(static_cast<std::size_t>(num_objects));
  for (std::size_t f = 1; f < fields.size(); ++f)
    model.prior.push_back(parse_prob(fields[f], line_no, "prior"));

  if (next_line()) throw ParseError(line_no, "unexpected content after the PRIOR line");

  auto graph = BipartiteDiagnosisGraph::make(static_cast<std::int32_t>(num_objects),
                                             static_cast<std::int32_t>(num_queries),
                                             std::move(parents));
  const auto violations = validate(graph, model);
  if (!violations.empty()) throw ParseError(0, violations.front());
  return {std::move(graph), std::move(model)};
}

std::pair<BipartiteDiagnosisGraph, QmrDtNoiseModel> load_graph(
    const std::filesystem::path& source) {
  std::ifstream in(source);
  if (!in) throw std::runtime_error("cannot open " + source.string() + " for reading");
  return load_graph(in);
}

}  // namespace aucdiag
