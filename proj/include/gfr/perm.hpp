#pragma once

// Permutations on 0..n-1 as image arrays. Products compose left to right:
// (p * q)(x) = q(p(x)), so conjugation p^-1 r p reads as "undo p, do r, do p"
// and x^{p*q} = (x^p)^q.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gfr {

struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> images) : img(std::move(images)) {}

  static Perm identity(int n) {
    Perm p;
    p.img.resize(n);
    for (int i = 0; i < n; ++i) p.img[i] = i;
    return p;
  }

  int n() const { return static_cast<int>(img.size()); }
  int operator()(int x) const { return img[x]; }

  bool is_identity() const {
    for (int i = 0; i < n(); ++i)
      if (img[i] != i) return false;
    return true;
  }

  /// Apply this, then other.
  Perm then(const Perm& other) const {
    if (n() != other.n()) throw std::invalid_argument("Perm::then: degree mismatch");
    Perm r;
    r.img.resize(n());
    for (int i = 0; i < n(); ++i) r.img[i] = other.img[img[i]];
    return r;
  }

  /// In-place right multiplication: this <- this * other. buf is scratch.
  void then_inplace(const Perm& other, std::vector<int>& buf) {
    buf.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) buf[i] = other.img[img[i]];
    img.swap(buf);
  }

  Perm inverse() const {
    Perm r;
    r.img.resize(n());
    for (int i = 0; i < n(); ++i) r.img[img[i]] = i;
    return r;
  }

  /// True iff img is a bijection of 0..n-1.
  bool valid() const {
    std::vector<std::uint8_t> seen(img.size(), 0);
    for (int v : img) {
      if (v < 0 || v >= n() || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }

  int fixed_points() const {
    int c = 0;
    for (int i = 0; i < n(); ++i)
      if (img[i] == i) ++c;
    return c;
  }

  /// Multiplicative order, by iterating cycles.
  long long order() const {
    std::vector<std::uint8_t> seen(img.size(), 0);
    long long ord = 1;
    for (int i = 0; i < n(); ++i) {
      if (seen[i]) continue;
      long long len = 0;
      int x = i;
      while (!seen[x]) {
        seen[x] = 1;
        x = img[x];
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;
};

}  // namespace gfr
