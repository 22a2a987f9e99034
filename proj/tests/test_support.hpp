#ifndef GYRO_TEST_SUPPORT_HPP
#define GYRO_TEST_SUPPORT_HPP

#include <array>
#include <string>
#include <vector>

#include "finite_table.hpp"

namespace gyro::test {

inline std::string fixture(const std::string& name) {
  return std::string(GYRO_FIXTURE_DIR "/") + name;
}

inline std::vector<uint16_t> cyclic_table(int n) {
  std::vector<uint16_t> t((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[(size_t)i * n + j] = (uint16_t)((i + j) % n);
  return t;
}

inline std::vector<uint16_t> klein_table() {
  return {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
}

// Symmetric group on 3 letters, composed as a-after-b.
inline std::vector<uint16_t> sym3_table() {
  const std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
  auto index_of = [&](const std::array<int, 3>& p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i] == p) return i;
    return -1;
  };
  std::vector<uint16_t> t(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> comp{};
      for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
      t[(size_t)a * 6 + b] = (uint16_t)index_of(comp);
    }
  return t;
}

// Unverified carrier over a raw table; used to run the identity suite on
// deliberately corrupted tables. Identity and inverses are best-effort.
class RawTable {
 public:
  using Element = int;
  static constexpr bool exact = true;

  RawTable(int n, std::vector<uint16_t> add) : n_(n), add_(std::move(add)) {
    zero_ = 0;
    for (int e = 0; e < n_; ++e) {
      bool ok = true;
      for (int x = 0; x < n_ && ok; ++x)
        ok = at(e, x) == x && at(x, e) == x;
      if (ok) {
        zero_ = e;
        break;
      }
    }
    neg_.assign(n_, 0);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (at(a, b) == zero_) {
          neg_[a] = b;
          break;
        }
  }

  int n() const { return n_; }
  Element add(Element a, Element b) const { return at(a, b); }
  Element neg(Element a) const { return neg_[a]; }
  Element zero() const { return zero_; }
  bool approx_eq(Element a, Element b, double) const { return a == b; }
  double residual(Element a, Element b) const { return a == b ? 0.0 : 1.0; }
  std::string format(Element a) const { return std::to_string(a); }
  int carrier_size() const { return n_; }
  Element element_at(int i) const { return i; }
  int index_of(Element a) const { return a; }

 private:
  int at(int a, int b) const { return add_[(size_t)a * n_ + b]; }

  int n_;
  std::vector<uint16_t> add_;
  int zero_;
  std::vector<int> neg_;
};

// Applies a relabeling permutation to a table: new[p(a)][p(b)] = p(old[a][b]).
inline std::vector<uint16_t> relabel_table(int n,
                                           const std::vector<uint16_t>& add,
                                           const std::vector<int>& p) {
  std::vector<uint16_t> out((size_t)n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out[(size_t)p[a] * n + p[b]] = (uint16_t)p[add[(size_t)a * n + b]];
  return out;
}

}  // namespace gyro::test

#endif
