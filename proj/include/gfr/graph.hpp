#pragma once

// Simple undirected graphs as packed adjacency bit rows. Row operations are
// the unit of work for refinement, so rows are 64-bit word arrays.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gfr {

class Graph {
 public:
  static constexpr int max_vertices = 1 << 20;

  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > max_vertices) throw std::length_error("Graph: vertex count out of range");
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
  }

  int n() const { return n_; }
  int words() const { return words_; }

  void add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("Graph::add_edge: loop");
    set(u, v);
    set(v, u);
  }

  bool adj(int u, int v) const {
    return bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63) & 1;
  }

  const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

  int degree(int v) const {
    const std::uint64_t* r = row(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
  }

  template <class Fn>
  void for_neighbors(int v, Fn&& fn) const {
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t word = r[w];
      while (word) {
        int b = std::countr_zero(word);
        fn(w * 64 + b);
        word &= word - 1;
      }
    }
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    out.reserve(degree(v));
    for_neighbors(v, [&](int w) { out.push_back(w); });
    return out;
  }

  long long edge_count() const {
    long long twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  /// -1 if not regular, the common degree otherwise.
  int regular_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v)
      if (degree(v) != d) return -1;
    return d;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

 private:
  void set(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Breadth-first reachability from vertex 0 covers everything. The empty and
/// one-vertex graphs count as connected.
inline bool connected(const Graph& g) {
  if (g.n() <= 1) return true;
  std::vector<std::uint8_t> seen(g.n(), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  int found = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    g.for_neighbors(queue[i], [&](int w) {
      if (!seen[w]) {
        seen[w] = 1;
        ++found;
        queue.push_back(w);
      }
    });
  }
  return found == g.n();
}

}  // namespace gfr
