#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace hardcore {

// Dense bit-indexed set over the vertices 0..n-1 of some graph.
// Canonical (numeric) order treats vertex 0 as the least significant bit,
// so subsets compare like the integers they encode.
class VertexSubset {
 public:
  VertexSubset() = default;

  explicit VertexSubset(int universe_size)
      : n_(universe_size), w_((universe_size + 63) / 64, 0) {
    if (universe_size < 0) throw std::invalid_argument("negative universe");
  }

  static VertexSubset full(int n) {
    VertexSubset s(n);
    for (int v = 0; v < n; ++v) s.set(v);
    return s;
  }

  static VertexSubset of(int n, std::initializer_list<int> vs) {
    VertexSubset s(n);
    for (int v : vs) s.set(v);
    return s;
  }

  int universe_size() const { return n_; }

  bool test(int v) const {
    check_vertex(v);
    return (w_[v >> 6] >> (v & 63)) & 1u;
  }

  void set(int v) {
    check_vertex(v);
    w_[v >> 6] |= std::uint64_t(1) << (v & 63);
  }

  void reset(int v) {
    check_vertex(v);
    w_[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
  }

  void assign(int v, bool value) { value ? set(v) : reset(v); }

  void clear() { for (auto& w : w_) w = 0; }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (auto w : w_) if (w) return false;
    return true;
  }

  bool intersects(const VertexSubset& o) const {
    check_universe(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool is_subset_of(const VertexSubset& o) const {
    check_universe(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  int hamming_distance(const VertexSubset& o) const {
    check_universe(o);
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += std::popcount(w_[i] ^ o.w_[i]);
    return c;
  }

  VertexSubset& operator|=(const VertexSubset& o) {
    check_universe(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  VertexSubset& operator&=(const VertexSubset& o) {
    check_universe(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  VertexSubset& operator-=(const VertexSubset& o) {  // set difference
    check_universe(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend VertexSubset operator|(VertexSubset a, const VertexSubset& b) { return a |= b; }
  friend VertexSubset operator&(VertexSubset a, const VertexSubset& b) { return a &= b; }
  friend VertexSubset operator-(VertexSubset a, const VertexSubset& b) { return a -= b; }

  friend bool operator==(const VertexSubset& a, const VertexSubset& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend bool operator!=(const VertexSubset& a, const VertexSubset& b) { return !(a == b); }

  // -1 / 0 / +1 in canonical numeric order (vertex 0 least significant).
  static int compare(const VertexSubset& a, const VertexSubset& b) {
    a.check_universe(b);
    for (std::size_t i = a.w_.size(); i-- > 0;) {
      if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i] ? -1 : 1;
    }
    return 0;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for_each_member([&](int v) { out.push_back(v); });
    return out;
  }

  template <class F>
  void for_each_member(F&& fn) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        int b = std::countr_zero(w);
        fn(static_cast<int>(i * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ULL;
    for (auto w : w_) h = (h ^ w) * 0x100000001b3ULL;
    return h;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  }
  void check_universe(const VertexSubset& o) const {
    if (n_ != o.n_) throw std::invalid_argument("vertex subsets over different universes");
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct CanonicalLess {
  bool operator()(const VertexSubset& a, const VertexSubset& b) const {
    return VertexSubset::compare(a, b) < 0;
  }
};

}  // namespace hardcore
