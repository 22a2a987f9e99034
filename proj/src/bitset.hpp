#ifndef GYRO_BITSET_HPP
#define GYRO_BITSET_HPP

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

namespace gyro {

// Fixed-universe bitset over indices 0..n-1. Element subsets of a finite
// gyrogroup are represented this way everywhere; n is bounded by the
// verification resource limit, so a handful of 64-bit words suffices.
class Bitset {
 public:
  Bitset() : n_(0) {}
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  static Bitset full(int n) {
    Bitset b(n);
    for (int i = 0; i < n; ++i) b.set(i);
    return b;
  }

  static Bitset of(int n, std::initializer_list<int> xs) {
    Bitset b(n);
    for (int x : xs) b.set(x);
    return b;
  }

  int universe() const { return n_; }

  void set(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] |= (uint64_t{1} << (i & 63));
  }
  void reset(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }
  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }

  bool operator==(const Bitset& o) const = default;
  // Lexicographic on words; only used for deterministic ordering in maps.
  auto operator<=>(const Bitset& o) const { return w_ <=> o.w_; }

  bool is_subset_of(const Bitset& o) const {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  // Members in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t w = w_[k];
      while (w) {
        int i = (int)(k * 64) + std::countr_zero(w);
        f(i);
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  // First member of this \ other, or -1.
  int first_not_in(const Bitset& o) const {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t w = w_[k] & ~o.w_[k];
      if (w) return (int)(k * 64) + std::countr_zero(w);
    }
    return -1;
  }

 private:
  int n_;
  std::vector<uint64_t> w_;
};

}  // namespace gyro

#endif
