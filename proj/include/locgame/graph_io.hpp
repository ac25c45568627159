#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "locgame/graph.hpp"

// Graph text format:
//   line 1: "n m"
//   then m lines "u v" with 0 <= u < v < n
//   lines starting with '#' are comments; blank lines are ignored.
// A coloured tree appends one line "colors b_0 b_1 ... b_{n-1}" with b_i in {0,1}.
namespace locgame::io {

namespace detail {

inline bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      throw invalid_input("line " + std::to_string(lineno) + ": CRLF line endings not accepted");
    auto pos = line.find_first_not_of(" \t");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

inline std::vector<long long> parse_ints(const std::string& line, int lineno) {
  std::istringstream ss(line);
  std::vector<long long> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size())
      throw invalid_input("line " + std::to_string(lineno) + ": not an integer: " + tok);
    out.push_back(x);
  }
  return out;
}

}  // namespace detail

struct ParsedGraph {
  Graph graph;
  std::vector<int> colors;  // empty unless a "colors" line was present
};

inline ParsedGraph read_graph_with_colors(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!detail::next_content_line(in, line, lineno)) throw invalid_input("empty graph file");
  auto header = detail::parse_ints(line, lineno);
  if (header.size() != 2 || header[0] < 0 || header[1] < 0)
    throw invalid_input("line " + std::to_string(lineno) + ": expected 'n m'");
  const long long n = header[0], m = header[1];
  if (n > std::numeric_limits<int>::max()) throw invalid_input("vertex count too large");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!detail::next_content_line(in, line, lineno))
      throw invalid_input("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    auto uv = detail::parse_ints(line, lineno);
    if (uv.size() != 2) throw invalid_input("line " + std::to_string(lineno) + ": expected 'u v'");
    if (!(0 <= uv[0] && uv[0] < uv[1] && uv[1] < n))
      throw invalid_input("line " + std::to_string(lineno) + ": need 0 <= u < v < n");
    edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
  }
  ParsedGraph out{Graph(static_cast<int>(n), edges), {}};
  while (detail::next_content_line(in, line, lineno)) {
    std::istringstream ss(line);
    std::string word;
    ss >> word;
    if (word != "colors" || !out.colors.empty())
      throw invalid_input("line " + std::to_string(lineno) + ": unexpected content");
    auto bits = detail::parse_ints(line.substr(line.find("colors") + 6), lineno);
    if (static_cast<long long>(bits.size()) != n)
      throw invalid_input("colors line must list one bit per vertex");
    for (auto b : bits) {
      if (b != 0 && b != 1) throw invalid_input("colors must be 0 or 1");
      out.colors.push_back(static_cast<int>(b));
    }
  }
  return out;
}

inline Graph read_graph(std::istream& in) {
  auto parsed = read_graph_with_colors(in);
  if (!parsed.colors.empty()) throw invalid_input("unexpected colors line in graph file");
  return std::move(parsed.graph);
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline void write_colors(std::ostream& out, const std::vector<int>& colors) {
  out << "colors";
  for (int c : colors) out << ' ' << c;
  out << '\n';
}

inline std::string to_text(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace locgame::io
