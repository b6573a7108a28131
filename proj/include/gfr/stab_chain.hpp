#pragma once

// Stabilizer chain (base and strong generating set) for permutation groups.
//
// Transversals are stored as Schreier vectors over BFS trees, so coset
// representatives are composed on demand. The chain is grown by sifting; a
// randomized subproduct phase (fixed seed) saturates it quickly and a full
// deterministic Schreier closure then certifies it, making the reported
// order exact: every chain element is a product of input generators, and the
// closure pass proves every Schreier generator sifts to the identity.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "gfr/perm.hpp"

namespace gfr {

class StabChain {
 public:
  explicit StabChain(int degree) : n_(degree) {}

  int degree() const { return n_; }
  const std::vector<int>& base() const { return base_; }
  int num_strong_generators() const { return static_cast<int>(sgens_.size()); }

  /// Appends a forced base point (before generators are added) so that the
  /// subgroup below a level is the stabilizer of a chosen point.
  void seed_base(int point) {
    if (!sgens_.empty()) throw std::logic_error("seed_base: chain already has generators");
    levels_.push_back(LevelData{});
    levels_.back().point = point;
    levels_.back().sv.assign(n_, unreached);
    levels_.back().sv[point] = root;
    levels_.back().orbit.push_back(point);
    base_.push_back(point);
  }

  /// Generators fixing base[0..level-1] pointwise (level 0: all of them).
  std::vector<Perm> level_generators(int level) const {
    std::vector<Perm> out;
    for (std::size_t i = 0; i < sgens_.size(); ++i)
      if (levels_of_[i] >= level) out.push_back(sgens_[i]);
    return out;
  }

  unsigned long long order() const {
    unsigned long long o = 1;
    for (const LevelData& lv : levels_) o *= static_cast<unsigned long long>(lv.orbit.size());
    return o;
  }

  /// Sift p through the chain; true iff the residue is the identity.
  bool contains(const Perm& p) const {
    if (p.n() != n_) throw std::invalid_argument("StabChain::contains: degree mismatch");
    Perm r = p;
    std::size_t lv = 0;
    return strip(r, lv);
  }

  /// Sifts g in; returns true if the chain grew. New base points are chosen
  /// as the smallest point the residue moves.
  bool add_generator(const Perm& g) {
    if (g.n() != n_) throw std::invalid_argument("StabChain::add_generator: degree mismatch");
    Perm r = g;
    std::size_t lv = 0;
    if (strip(r, lv)) return false;
    if (lv == levels_.size()) {
      int moved = 0;
      while (r.img[moved] == moved) ++moved;
      levels_.push_back(LevelData{});
      levels_.back().point = moved;
      base_.push_back(moved);
    }
    sgens_.push_back(r);
    sgens_inv_.push_back(r.inverse());
    levels_of_.push_back(static_cast<int>(lv));
    for (std::size_t i = 0; i <= lv && i < levels_.size(); ++i) rebuild_orbit(i);
    return true;
  }

  /// Randomized saturation + deterministic Schreier closure. After this the
  /// product of orbit lengths is the exact group order.
  void complete() {
    randomized_fill();
    schreier_closure();
  }

  /// Fully materialized coset representative u with base[level]^u = point.
  Perm transversal(int level, int point) const {
    const LevelData& lv = levels_[static_cast<std::size_t>(level)];
    if (lv.sv[point] == unreached) throw std::invalid_argument("transversal: point not in orbit");
    Perm u = Perm::identity(n_);
    int x = point;
    std::vector<int> path, buf;
    while (x != lv.point) {
      path.push_back(lv.sv[x]);
      x = sgens_inv_[lv.sv[x]].img[x];
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) u.then_inplace(sgens_[*it], buf);
    return u;
  }

  /// Streams every group element (order() of them) through fn.
  template <class Fn>
  void for_each_element(Fn&& fn) const {
    Perm id = Perm::identity(n_);
    enumerate_from(static_cast<int>(levels_.size()) - 1, id, fn, 0);
  }

  /// Streams the elements fixing base[0..skip_levels-1] pointwise.
  template <class Fn>
  void for_each_stabilizer_element(int skip_levels, Fn&& fn) const {
    Perm id = Perm::identity(n_);
    enumerate_from(static_cast<int>(levels_.size()) - 1, id, fn, skip_levels);
  }

  std::size_t num_levels() const { return levels_.size(); }
  const std::vector<int>& orbit(int level) const { return levels_[level].orbit; }

 private:
  static constexpr int unreached = -2;
  static constexpr int root = -1;

  struct LevelData {
    int point = 0;
    std::vector<int> sv;     // Schreier vector: generator index reaching each point
    std::vector<int> orbit;  // points in BFS order
  };

  void rebuild_orbit(std::size_t level) {
    LevelData& lv = levels_[level];
    lv.sv.assign(n_, unreached);
    lv.orbit.clear();
    lv.sv[lv.point] = root;
    lv.orbit.push_back(lv.point);
    std::vector<int> gens;
    for (std::size_t i = 0; i < sgens_.size(); ++i)
      if (levels_of_[i] >= static_cast<int>(level)) gens.push_back(static_cast<int>(i));
    for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
      int x = lv.orbit[head];
      for (int gi : gens) {
        int y = sgens_[gi].img[x];
        if (lv.sv[y] == unreached) {
          lv.sv[y] = gi;
          lv.orbit.push_back(y);
        }
      }
    }
  }

  // Strips r through levels starting at *level; on return r is the residue
  // and *level the level it stalled at (levels_.size() if it ran off the end).
  bool strip(Perm& r, std::size_t& level) const {
    std::vector<int> buf;
    for (; level < levels_.size(); ++level) {
      const LevelData& lv = levels_[level];
      int x = r.img[lv.point];
      if (x == lv.point) continue;
      if (lv.sv[x] == unreached) return false;
      // divide by the coset representative: r <- r * u_x^-1, walking the tree
      while (x != lv.point) {
        r.then_inplace(sgens_inv_[lv.sv[x]], buf);
        x = r.img[lv.point];
      }
    }
    return r.is_identity();
  }

  void randomized_fill() {
    if (sgens_.empty()) return;
    std::mt19937 rng(0x5eed5u);  // deterministic seed: reproducible chains
    std::vector<Perm> pool = sgens_;
    Perm acc = Perm::identity(n_);
    int quiet = 0;
    while (quiet < 16) {
      std::size_t i = rng() % pool.size();
      std::size_t j = rng() % pool.size();
      acc = acc.then(pool[i]).then(pool[j]);
      pool[rng() % pool.size()] = acc;
      if (add_generator(acc))
        quiet = 0;
      else
        ++quiet;
    }
  }

  void schreier_closure() {
    int i = static_cast<int>(levels_.size()) - 1;
    while (i >= 0) {
      bool clean = true;
      const std::vector<int> orbit_snapshot = levels_[i].orbit;
      std::vector<int> gens;
      for (std::size_t gi = 0; gi < sgens_.size(); ++gi)
        if (levels_of_[gi] >= i) gens.push_back(static_cast<int>(gi));
      for (int p : orbit_snapshot) {
        Perm up = transversal(i, p);
        for (int gi : gens) {
          Perm w = up.then(sgens_[gi]);
          Perm r = w;
          std::size_t lv = static_cast<std::size_t>(i);
          if (!strip(r, lv)) {
            if (lv == levels_.size()) {
              int moved = 0;
              while (r.img[moved] == moved) ++moved;
              levels_.push_back(LevelData{});
              levels_.back().point = moved;
              base_.push_back(moved);
            }
            sgens_.push_back(r);
            sgens_inv_.push_back(r.inverse());
            levels_of_.push_back(static_cast<int>(lv));
            for (std::size_t k = 0; k <= lv && k < levels_.size(); ++k) rebuild_orbit(k);
            i = static_cast<int>(lv);
            clean = false;
            break;
          }
        }
        if (!clean) break;
      }
      if (clean) --i;
    }
  }

  // Every g factors as g = h then u_x with h in the next stabilizer, so the
  // accumulator picks up the deepest transversal first and level 0 last.
  template <class Fn>
  void enumerate_from(int level, const Perm& acc, Fn& fn, int stop_level) const {
    if (level < stop_level) {
      fn(acc);
      return;
    }
    for (int p : levels_[level].orbit) {
      Perm u = transversal(level, p);
      enumerate_from(level - 1, acc.then(u), fn, stop_level);
    }
  }

  int n_;
  std::vector<int> base_;
  std::vector<LevelData> levels_;
  std::vector<Perm> sgens_;
  std::vector<Perm> sgens_inv_;
  std::vector<int> levels_of_;  // deepest level each strong generator fixes up to
};

}  // namespace gfr
