#pragma once

// Graph automorphism search by individualization and refinement.
//
// The search tree individualizes, at every node, the lowest vertex id of the
// first smallest non-singleton cell, so the tree and the emitted generators
// are reproducible. The leftmost (principal) path fixes the base; sibling
// branches are pruned when their refinement trace differs from the principal
// trace at the same depth (equivalent leaves always agree, so pruning is
// conservative even across hash collisions), or when the target sits in the
// orbit of an already-explored sibling under the automorphisms found so far.
// Off the principal path one coset representative suffices, so those
// branches unwind as soon as they produce an automorphism.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gfr/graph.hpp"
#include "gfr/perm.hpp"
#include "gfr/refine.hpp"
#include "gfr/stab_chain.hpp"

namespace gfr {

struct PermGroup {
  int degree = 0;
  std::vector<Perm> generators;  // the emitted automorphisms
  StabChain chain{0};            // completed: order and membership are exact

  unsigned long long order() const { return chain.order(); }

  bool contains(const Perm& p) const {
    if (p.n() != degree) throw std::invalid_argument("PermGroup::contains: degree mismatch");
    return chain.contains(p);
  }
};

inline bool is_graph_automorphism(const Graph& g, const Perm& p) {
  for (int v = 0; v < g.n(); ++v) {
    bool ok = true;
    g.for_neighbors(v, [&](int w) { ok = ok && g.adj(p.img[v], p.img[w]); });
    if (!ok) return false;
  }
  return true;
}

namespace detail {

class AutSearch {
 public:
  explicit AutSearch(const Graph& g) : g_(g), chain_(g.n()) {}

  PermGroup run() {
    if (g_.n() > (1 << 16)) throw std::length_error("aut_group: degree exceeds 2^16");
    if (g_.n() > 0) {
      chain_.seed_base(0);  // stabilizer-of-0 queries read the chain tail directly
      Partition root(g_.n());
      std::uint64_t trace = refine_equitable(g_, root, {0});
      descend(root, 0, true, trace);
    }
    chain_.complete();
    PermGroup out;
    out.degree = g_.n();
    out.generators = gens_;
    out.chain = std::move(chain_);
    return out;
  }

 private:
  enum class Outcome { exhausted, found_aut };

  Outcome descend(Partition& pi, int depth, bool principal, std::uint64_t trace) {
    if (principal) {
      fp_traces_.push_back(trace);
    } else if (trace != fp_traces_[depth]) {
      return Outcome::exhausted;
    }

    if (pi.discrete()) {
      if (first_leaf_.empty()) {
        first_leaf_ = pi.order();
        return Outcome::exhausted;
      }
      Perm p;
      p.img.resize(g_.n());
      for (int j = 0; j < g_.n(); ++j) p.img[first_leaf_[j]] = pi.order()[j];
      if (is_graph_automorphism(g_, p)) {
        if (chain_.add_generator(p)) {
          gens_.push_back(p);
          ++version_;
        }
        return Outcome::found_aut;
      }
      return Outcome::exhausted;
    }

    int cell = pi.target_cell();
    std::vector<int> targets = pi.cell_members(cell);
    std::sort(targets.begin(), targets.end());

    if (principal) fp_base_.push_back(targets.front());

    std::vector<int> explored;
    for (std::size_t ti = 0; ti < targets.size(); ++ti) {
      int v = targets[ti];
      bool child_principal = principal && ti == 0;
      if (principal && ti > 0 && in_explored_orbit(v, depth, explored)) continue;

      Partition child = pi;
      int singleton = child.individualize(v);
      std::uint64_t child_trace = refine_equitable(g_, child, {singleton});
      Outcome oc = descend(child, depth + 1, child_principal, child_trace);
      explored.push_back(v);
      if (oc == Outcome::found_aut && !principal) return Outcome::found_aut;
    }
    return Outcome::exhausted;
  }

  // Orbit pruning at principal nodes: v may be skipped when it lies in the
  // orbit of an explored sibling under the found automorphisms that fix the
  // principal base prefix pointwise.
  bool in_explored_orbit(int v, int depth, const std::vector<int>& explored) {
    refresh_orbits(depth);
    const std::vector<int>& uf = orbit_cache_[depth].parent;
    int rv = find(uf, v);
    for (int t : explored)
      if (find(uf, t) == rv) return true;
    return false;
  }

  static int find(const std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  }

  void refresh_orbits(int depth) {
    if (orbit_cache_.size() <= static_cast<std::size_t>(depth)) orbit_cache_.resize(depth + 1);
    OrbitCache& oc = orbit_cache_[depth];
    if (oc.version == version_) return;
    oc.version = version_;
    oc.parent.resize(g_.n());
    std::iota(oc.parent.begin(), oc.parent.end(), 0);
    for (const Perm& p : gens_) {
      bool fixes_prefix = true;
      for (int d = 0; d < depth; ++d) fixes_prefix = fixes_prefix && p.img[fp_base_[d]] == fp_base_[d];
      if (!fixes_prefix) continue;
      for (int x = 0; x < g_.n(); ++x) {
        int a = find(oc.parent, x), b = find(oc.parent, p.img[x]);
        if (a != b) oc.parent[a] = b;
      }
    }
  }

  struct OrbitCache {
    long version = -1;
    std::vector<int> parent;
  };

  const Graph& g_;
  StabChain chain_;
  std::vector<Perm> gens_;
  std::vector<std::uint64_t> fp_traces_;
  std::vector<int> fp_base_;
  std::vector<int> first_leaf_;
  std::vector<OrbitCache> orbit_cache_;
  long version_ = 0;
};

}  // namespace detail

/// Full automorphism group; degree guarded at 2^16.
inline PermGroup aut_group(const Graph& g) { return detail::AutSearch(g).run(); }

struct FrobeniusReport {
  bool transitive = false;
  bool regular = false;
  long long max_fixed_points_nonidentity = 0;
  unsigned long long stabilizer_order = 0;
  bool is_frobenius = false;
};

/// Frobenius analysis of the action on 0..degree-1. Enumerates the whole
/// group when its order is at most 10^6; for larger transitive groups only
/// the point stabilizer is enumerated (conjugacy carries any multi-point
/// fixer into it, so the maximum is the same).
inline FrobeniusReport frobenius_report(const PermGroup& G) {
  constexpr unsigned long long enum_limit = 1000000;
  FrobeniusReport rep;
  const int n = G.degree;
  if (n == 0) return rep;

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (const Perm& p : G.generators)
    for (int x = 0; x < n; ++x) {
      int a = find(x), b = find(p.img[x]);
      if (a != b) parent[a] = b;
    }
  int orbit0 = 0;
  for (int x = 0; x < n; ++x)
    if (find(x) == find(0)) ++orbit0;
  rep.transitive = orbit0 == n;
  rep.stabilizer_order = G.order() / static_cast<unsigned long long>(orbit0);
  rep.regular = rep.transitive && rep.stabilizer_order == 1;

  long long maxfix = 0;
  if (G.order() <= enum_limit) {
    G.chain.for_each_element([&](const Perm& p) {
      if (p.is_identity()) return;
      maxfix = std::max(maxfix, static_cast<long long>(p.fixed_points()));
    });
  } else if (rep.transitive) {
    if (rep.stabilizer_order > enum_limit)
      throw std::length_error("frobenius_report: stabilizer too large to enumerate");
    // a chain rooted at 0 exposes the stabilizer as its tail below level 0
    auto scan_tail = [&](const StabChain& chain) {
      chain.for_each_stabilizer_element(1, [&](const Perm& p) {
        if (p.is_identity()) return;
        maxfix = std::max(maxfix, static_cast<long long>(p.fixed_points()));
      });
    };
    if (!G.chain.base().empty() && G.chain.base()[0] == 0) {
      scan_tail(G.chain);
    } else {
      StabChain rooted(n);
      rooted.seed_base(0);
      for (const Perm& p : G.generators) rooted.add_generator(p);
      rooted.complete();
      scan_tail(rooted);
    }
  } else {
    throw std::length_error("frobenius_report: group too large to enumerate");
  }
  rep.max_fixed_points_nonidentity = maxfix;
  rep.is_frobenius = rep.transitive && !rep.regular && maxfix <= 1;
  return rep;
}

struct BlockSystem {
  std::vector<int> block_of_base;            // sorted ids
  std::vector<std::vector<int>> blocks;      // the full system, by least member
};

/// Minimal nontrivial block systems through base_point, one per fusing
/// partner producing a distinct block; requires a transitive group.
inline std::vector<BlockSystem> block_systems(const PermGroup& G, int base_point) {
  const int n = G.degree;
  std::vector<BlockSystem> out;
  if (n <= 1) return out;

  {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    for (const Perm& p : G.generators)
      for (int x = 0; x < n; ++x) {
        int a = find(x), b = find(p.img[x]);
        if (a != b) parent[a] = b;
      }
    for (int x = 0; x < n; ++x)
      if (find(x) != find(base_point)) throw std::invalid_argument("block_systems: group not transitive");
  }

  std::vector<std::vector<int>> seen_blocks;
  for (int w = 0; w < n; ++w) {
    if (w == base_point) continue;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    parent[find(w)] = find(base_point);
    std::vector<int> queue{w};
    while (!queue.empty()) {
      int k = queue.back();
      queue.pop_back();
      int l = find(k);
      for (const Perm& p : G.generators) {
        int a = find(p.img[k]), b = find(p.img[l]);
        if (a != b) {
          parent[a] = b;
          queue.push_back(a);
        }
      }
    }
    std::vector<int> block;
    int rb = find(base_point);
    for (int x = 0; x < n; ++x)
      if (find(x) == rb) block.push_back(x);
    if (static_cast<int>(block.size()) == n) continue;  // trivial
    bool dup = false;
    for (auto& b : seen_blocks) dup = dup || b == block;
    if (dup) continue;
    seen_blocks.push_back(block);

    BlockSystem sys;
    sys.block_of_base = block;
    std::vector<std::uint8_t> emitted(n, 0);
    for (int x = 0; x < n; ++x) {
      int r = find(x);
      if (emitted[r]) continue;
      emitted[r] = 1;
      std::vector<int> cls;
      for (int y = x; y < n; ++y)
        if (find(y) == r) cls.push_back(y);
      sys.blocks.push_back(std::move(cls));
    }
    out.push_back(std::move(sys));
  }
  return out;
}

}  // namespace gfr
