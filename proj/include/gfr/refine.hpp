#pragma once

// Equitable partition refinement.
//
// A coloring is equitable when any two vertices in the same cell have the
// same number of neighbors in every cell. refine_equitable computes the
// coarsest equitable refinement with a deterministic cell order (cells are
// intervals of the vertex order; fragments of a split are ordered by
// ascending neighbor count), and folds every split event into a 64-bit trace
// so search paths can be compared without comparing vertex labels.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gfr/graph.hpp"

namespace gfr {

class Partition {
 public:
  explicit Partition(int n) : order_(n), pos_(n), cell_start_(n, 0), cell_size_(n, 0) {
    for (int i = 0; i < n; ++i) {
      order_[i] = i;
      pos_[i] = i;
    }
    if (n > 0) cell_size_[0] = n;
  }

  Partition(int n, const std::vector<int>& colors) : Partition(n) {
    if (static_cast<int>(colors.size()) != n)
      throw std::invalid_argument("Partition: coloring size mismatch");
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      return colors[a] != colors[b] ? colors[a] < colors[b] : a < b;
    });
    for (int i = 0; i < n; ++i) pos_[order_[i]] = i;
    int start = 0;
    for (int i = 0; i < n; ++i) {
      if (i + 1 == n || colors[order_[i + 1]] != colors[order_[i]]) {
        for (int j = start; j <= i; ++j) cell_start_[j] = start;
        cell_size_[start] = i + 1 - start;
        start = i + 1;
      }
    }
  }

  int n() const { return static_cast<int>(order_.size()); }
  int vertex_at(int position) const { return order_[position]; }
  int position_of(int v) const { return pos_[v]; }
  int cell_start(int position) const { return cell_start_[position]; }
  int cell_size_at(int start) const { return cell_size_[start]; }
  int cell_of(int v) const { return cell_start_[pos_[v]]; }

  bool discrete() const {
    for (int s = 0; s < n(); s += cell_size_[s])
      if (cell_size_[s] > 1) return false;
    return true;
  }

  int num_cells() const {
    int c = 0;
    for (int s = 0; s < n(); s += cell_size_[s]) ++c;
    return c;
  }

  /// The discrete vertex order (only meaningful once discrete).
  const std::vector<int>& order() const { return order_; }

  /// Start of the first smallest non-singleton cell, or -1 if discrete.
  int target_cell() const {
    int best = -1, best_size = n() + 1;
    for (int s = 0; s < n(); s += cell_size_[s])
      if (cell_size_[s] > 1 && cell_size_[s] < best_size) {
        best = s;
        best_size = cell_size_[s];
      }
    return best;
  }

  /// Smallest vertex id inside the cell starting at s.
  int min_vertex_in_cell(int s) const {
    int m = order_[s];
    for (int i = s + 1; i < s + cell_size_[s]; ++i) m = std::min(m, order_[i]);
    return m;
  }

  std::vector<int> cell_members(int s) const {
    return {order_.begin() + s, order_.begin() + s + cell_size_[s]};
  }

  /// Splits v off to the front of its cell; returns the start of the new
  /// singleton. The caller refines with that singleton as the splitter.
  int individualize(int v) {
    int s = cell_start_[pos_[v]];
    if (cell_size_[s] < 2) throw std::invalid_argument("individualize: vertex already alone");
    swap_positions(s, pos_[v]);
    int rest = s + 1;
    int old_size = cell_size_[s];
    cell_size_[s] = 1;
    cell_start_[s] = s;
    cell_size_[rest] = old_size - 1;
    for (int i = rest; i < s + old_size; ++i) cell_start_[i] = rest;
    return s;
  }

  /// Canonical colors: cell index by interval order.
  std::vector<int> colors() const {
    std::vector<int> out(n());
    int c = 0;
    for (int s = 0; s < n(); s += cell_size_[s], ++c)
      for (int i = s; i < s + cell_size_[s]; ++i) out[order_[i]] = c;
    return out;
  }

 private:
  friend std::uint64_t refine_equitable(const Graph&, Partition&, std::vector<int>);

  void swap_positions(int i, int j) {
    std::swap(order_[i], order_[j]);
    pos_[order_[i]] = i;
    pos_[order_[j]] = j;
  }

  std::vector<int> order_;       // vertices, cells contiguous
  std::vector<int> pos_;         // inverse of order_
  std::vector<int> cell_start_;  // per position: start of its cell
  std::vector<int> cell_size_;   // valid at cell starts
};

namespace detail {
inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}
}  // namespace detail

/// Refines pi to the coarsest equitable partition using the cells whose
/// starts are listed in worklist as initial splitters. Returns the trace, a
/// label-independent hash of the split events.
inline std::uint64_t refine_equitable(const Graph& g, Partition& pi, std::vector<int> worklist) {
  const int n = pi.n();
  std::vector<std::uint8_t> queued(n, 0);
  for (int s : worklist) queued[s] = 1;
  std::vector<int> cnt(n, 0);
  std::vector<int> touched;
  std::uint64_t trace = 0xcbf29ce484222325ull;

  std::vector<int> splitter_members;
  std::size_t head = 0;
  while (head < worklist.size()) {
    int splitter = worklist[head++];
    // the cell now at this start (it may have shrunk since queueing)
    queued[splitter] = 0;
    trace = detail::mix(trace, 0x5eaull);
    trace = detail::mix(trace, static_cast<std::uint64_t>(splitter));

    // snapshot the members: the cell may split below, and the counter reset
    // must walk the same set that was counted
    splitter_members = pi.cell_members(splitter);
    touched.clear();
    for (int v : splitter_members) {
      g.for_neighbors(v, [&](int w) {
        if (cnt[w] == 0) {
          int cs = pi.cell_start_[pi.pos_[w]];
          if (pi.cell_size_[cs] > 1) touched.push_back(cs);  // singletons never split
        }
        ++cnt[w];
      });
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

    for (std::size_t t = 0; t < touched.size(); ++t) {
      int cs = touched[t];
      // cs may have been recorded before this splitter's own splits; its
      // start is still a cell start (splits preserve starts of left pieces)
      int size = pi.cell_size_[cs];
      // order members by ascending count; stable on position for determinism
      std::vector<int> members = pi.cell_members(cs);
      std::stable_sort(members.begin(), members.end(),
                       [&](int a, int b) { return cnt[a] < cnt[b]; });
      bool split = cnt[members.front()] != cnt[members.back()];
      if (!split) continue;

      for (int i = 0; i < size; ++i) {
        pi.order_[cs + i] = members[i];
        pi.pos_[members[i]] = cs + i;
      }
      // carve into fragments
      int frag_start = cs;
      std::vector<std::pair<int, int>> frags;  // (start, size)
      for (int i = 1; i <= size; ++i) {
        if (i == size || cnt[members[i]] != cnt[members[i - 1]]) {
          frags.emplace_back(frag_start, cs + i - frag_start);
          frag_start = cs + i;
        }
      }
      int largest = 0;
      for (std::size_t fi = 0; fi < frags.size(); ++fi) {
        auto [fs, fsz] = frags[fi];
        pi.cell_size_[fs] = fsz;
        for (int i = fs; i < fs + fsz; ++i) pi.cell_start_[i] = fs;
        if (fsz > frags[largest].second) largest = static_cast<int>(fi);
        trace = detail::mix(trace, static_cast<std::uint64_t>(fsz));
        trace = detail::mix(trace, static_cast<std::uint64_t>(cnt[members[fs - cs]]));
      }
      trace = detail::mix(trace, static_cast<std::uint64_t>(cs));
      // queue fragments: all of them if the parent was queued, else all but
      // one largest (the standard rule preserving the coarsest refinement)
      bool parent_queued = queued[cs];
      for (std::size_t fi = 0; fi < frags.size(); ++fi) {
        if (!parent_queued && static_cast<int>(fi) == largest) continue;
        if (!queued[frags[fi].first]) {
          queued[frags[fi].first] = 1;
          worklist.push_back(frags[fi].first);
        }
      }
    }

    // reset counters over the same snapshot that was counted
    for (int v : splitter_members) g.for_neighbors(v, [&](int w) { cnt[w] = 0; });
  }
  trace = detail::mix(trace, static_cast<std::uint64_t>(pi.num_cells()));
  return trace;
}

/// Coarsest equitable refinement of a coloring; cells of the result are
/// numbered 0..k-1 in canonical (interval) order, so the operation is
/// idempotent on its own output.
inline std::vector<int> refine(const Graph& g, const std::vector<int>& coloring) {
  Partition pi(g.n(), coloring);
  std::vector<int> splitters;
  for (int s = 0; s < pi.n(); s += pi.cell_size_at(s)) splitters.push_back(s);
  refine_equitable(g, pi, splitters);
  return pi.colors();
}

}  // namespace gfr
