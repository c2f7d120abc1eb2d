#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dicolor/degeneracy.hpp"
#include "dicolor/digraph.hpp"
#include "dicolor/error.hpp"

// Text formats.
//
// Edge list:   '#' starts a comment line, blank lines are ignored, the first
//              remaining line is the vertex count n, every later line is
//              "u v" for the edge u -> v.
// Coloring:    comment header with key=value metadata (m, algo, bound, seed,
//              colors), then "v c" per vertex in increasing v.

namespace dicolor {

namespace detail {

inline Error parse_error(std::size_t line, const std::string& msg) {
  return Error(ErrorCode::parse, "line " + std::to_string(line) + ": " + msg);
}

inline bool skippable(const std::string& line) {
  auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

// Reads exactly `count` non-negative integers from a line.
inline std::vector<std::uint64_t> read_numbers(const std::string& line, std::size_t count,
                                               std::size_t line_no) {
  std::istringstream in(line);
  std::vector<std::uint64_t> values;
  std::string token;
  while (in >> token) {
    if (token.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error(line_no, "expected a non-negative integer, got '" + token + "'");
    try {
      values.push_back(std::stoull(token));
    } catch (const std::out_of_range&) {
      throw parse_error(line_no, "integer out of range: '" + token + "'");
    }
  }
  if (values.size() != count)
    throw parse_error(line_no, "expected " + std::to_string(count) + " integer(s), got " +
                                   std::to_string(values.size()));
  return values;
}

}  // namespace detail

inline Digraph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_line;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::skippable(line)) continue;
    if (!n) {
      n = detail::read_numbers(line, 1, line_no)[0];
      continue;
    }
    auto uv = detail::read_numbers(line, 2, line_no);
    if (uv[0] >= *n || uv[1] >= *n)
      throw detail::parse_error(line_no, "vertex out of range 0.." +
                                             std::to_string(*n == 0 ? 0 : *n - 1));
    if (uv[0] == uv[1])
      throw detail::parse_error(line_no, "self-loop at vertex " + std::to_string(uv[0]));
    edges.push_back({uv[0], uv[1]});
    edge_line.push_back(line_no);
  }
  if (!n) throw detail::parse_error(line_no, "missing vertex count");
  try {
    return Digraph::from_edge_list(*n, edges);
  } catch (const Error& e) {
    // Only duplicates can remain; find the second occurrence for the report.
    std::map<Edge, std::size_t> first_seen;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (!first_seen.emplace(edges[i], edge_line[i]).second)
        throw detail::parse_error(edge_line[i], "duplicate edge " + std::to_string(edges[i].from) +
                                                    " " + std::to_string(edges[i].to));
    throw detail::parse_error(line_no, e.what());
  }
}

inline Digraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

/// Header comment lines (without '#'), then n, then edges sorted by (u, v).
inline std::string emit_edge_list(const Digraph& d,
                                  const std::vector<std::string>& comments = {}) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << '\n';
  out << d.order() << '\n';
  for (Edge e : d.edges()) out << e.from << ' ' << e.to << '\n';
  return out.str();
}

struct ColoringFile {
  Coloring coloring;
  std::map<std::string, std::string> meta;  // from "# key=value" header tokens
};

inline std::string emit_coloring(const Coloring& c,
                                 const std::vector<std::pair<std::string, std::string>>& meta) {
  std::ostringstream out;
  out << "# dicolor coloring\n#";
  for (const auto& [key, value] : meta) out << ' ' << key << '=' << value;
  out << '\n';
  for (Vertex v = 0; v < c.assignment.size(); ++v) out << v << ' ' << c.assignment[v] << '\n';
  return out.str();
}

inline ColoringFile parse_coloring(std::istream& in) {
  ColoringFile file;
  std::string line;
  std::size_t line_no = 0;
  std::vector<Color> assignment;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::skippable(line)) {
      auto hash = line.find('#');
      if (hash == std::string::npos) continue;
      std::istringstream tokens(line.substr(hash + 1));
      std::string token;
      while (tokens >> token)
        if (auto eq = token.find('='); eq != std::string::npos && eq > 0)
          file.meta[token.substr(0, eq)] = token.substr(eq + 1);
      continue;
    }
    auto vc = detail::read_numbers(line, 2, line_no);
    if (vc[0] != assignment.size())
      throw detail::parse_error(line_no, "expected vertex " + std::to_string(assignment.size()) +
                                             ", got " + std::to_string(vc[0]));
    assignment.push_back(vc[1]);
  }
  file.coloring = Coloring::from_assignment(std::move(assignment));
  return file;
}

inline ColoringFile parse_coloring(const std::string& text) {
  std::istringstream in(text);
  return parse_coloring(in);
}

}  // namespace dicolor
