#pragma once

// graph6 (dense) and plain edge-list serialization.
//
// graph6 encodes n followed by the upper triangle read column by column,
// x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ..., packed into 6-bit groups offset by
// 63. The ">>graph6<<" header is optional and off by default.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gfr/graph.hpp"

namespace gfr {

inline constexpr const char* graph6_header = ">>graph6<<";

inline std::string to_graph6(const Graph& g, bool header = false) {
  const long long n = g.n();
  if (n > 100000)
    throw std::invalid_argument("to_graph6: graph too large for the dense format; use edge-list");
  std::string out;
  if (header) out += graph6_header;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += 126;
    out += static_cast<char>((n >> 12 & 63) + 63);
    out += static_cast<char>((n >> 6 & 63) + 63);
    out += static_cast<char>((n & 63) + 63);
  } else {
    out += 126;
    out += 126;
    for (int s = 30; s >= 0; s -= 6) out += static_cast<char>((n >> s & 63) + 63);
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.adj(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits) out += static_cast<char>((acc << (6 - nbits)) + 63);
  return out;
}

inline Graph from_graph6(const std::string& s) {
  std::size_t pos = 0;
  if (s.rfind(graph6_header, 0) == 0) pos = std::string(graph6_header).size();
  auto next = [&]() -> int {
    if (pos >= s.size()) throw std::invalid_argument("from_graph6: truncated input");
    int c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) throw std::invalid_argument("from_graph6: byte out of range");
    return c;
  };
  long long n;
  int c0 = next();
  if (c0 != 126) {
    n = c0 - 63;
  } else {
    int c1 = next();
    if (c1 != 126) {
      n = static_cast<long long>(c1 - 63) << 12;
      n |= static_cast<long long>(next() - 63) << 6;
      n |= next() - 63;
    } else {
      n = 0;
      for (int k = 0; k < 6; ++k) n = n << 6 | (next() - 63);
    }
  }
  if (n > Graph::max_vertices) throw std::length_error("from_graph6: too many vertices");
  Graph g(static_cast<int>(n));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (nbits == 0) {
        acc = next() - 63;
        nbits = 6;
      }
      if (acc >> (nbits - 1) & 1) g.add_edge(i, j);
      --nbits;
    }
  return g;
}

/// "i j\n" per edge with i < j, sorted.
inline std::string to_edge_list(const Graph& g) {
  std::string out;
  for (int i = 0; i < g.n(); ++i)
    g.for_neighbors(i, [&](int j) {
      if (i < j) {
        out += std::to_string(i);
        out += ' ';
        out += std::to_string(j);
        out += '\n';
      }
    });
  return out;
}

inline Graph from_edge_list(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::pair<int, int>> edges;
  int maxv = -1;
  long long a, b;
  while (in >> a >> b) {
    if (a < 0 || b < 0 || a > Graph::max_vertices || b > Graph::max_vertices)
      throw std::invalid_argument("from_edge_list: vertex id out of range");
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    maxv = std::max(maxv, static_cast<int>(std::max(a, b)));
  }
  if (!in.eof()) throw std::invalid_argument("from_edge_list: malformed line");
  Graph g(maxv + 1);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

/// Sniffs the format: lines with spaces are edge lists, otherwise graph6.
inline Graph parse_graph(const std::string& content) {
  std::string first_line = content.substr(0, content.find('\n'));
  if (first_line.find(' ') != std::string::npos) return from_edge_list(content);
  return from_graph6(first_line);
}

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("load_graph: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace gfr
