#ifndef GYRO_TEST_ORACLES_HPP
#define GYRO_TEST_ORACLES_HPP

// Independent oracles used only by tests. They deliberately take different
// routes from the library: the axiom checker solves each gyration from the
// left gyroassociative equation with an inverted translation row (the
// library composes the negation row and checks cancellation separately),
// and the subgyrogroup oracle filters the whole powerset instead of growing
// closures.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "bitset.hpp"
#include "finite_table.hpp"

namespace gyro::test {

struct OracleVerdict {
  bool ok = true;
  std::string why;
};

inline OracleVerdict oracle_is_gyrogroup(int n,
                                         const std::vector<uint16_t>& add) {
  auto at = [&](int a, int b) -> int { return add[(size_t)a * n + b]; };
  auto no = [](std::string why) { return OracleVerdict{false, std::move(why)}; };

  // rows bijective (needed to solve for gyrations at all)
  std::vector<std::vector<int>> row_inv(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int v = at(a, b);
      if (row_inv[a][v] >= 0) return no("left translation not bijective");
      row_inv[a][v] = b;
    }

  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) identity = e;
  }
  if (identity < 0) return no("no identity");

  for (int a = 0; a < n; ++a) {
    int right = row_inv[a][identity];
    if (right < 0 || at(right, a) != identity)
      return no("no two-sided inverse for " + std::to_string(a));
  }

  // unique gyration candidate per pair, solved from
  // (x+y) + q(z) = x + (y+z); must be an automorphism
  std::vector<std::vector<int>> q((size_t)n * n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto& perm = q[(size_t)x * n + y];
      int xy = at(x, y);
      for (int z = 0; z < n; ++z) perm[z] = row_inv[xy][at(x, at(y, z))];
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (perm[at(u, v)] != at(perm[u], perm[v]))
            return no("gyration of (" + std::to_string(x) + "," +
                      std::to_string(y) + ") is not an automorphism");
    }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (q[(size_t)at(x, y) * n + y] != q[(size_t)x * n + y])
        return no("left loop property fails at (" + std::to_string(x) + "," +
                  std::to_string(y) + ")");
  return {};
}

// Powerset filter straight from the definition: nonempty, closed under
// negation and addition. Returns sorted index lists, ordered by
// (size, lexicographic).
inline std::vector<std::vector<int>> oracle_subgyrogroups(
    const FiniteGyrogroup& g) {
  const int n = g.n();
  std::vector<std::vector<int>> out;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    bool closed = true;
    for (int a : s) {
      if (!(mask & (1u << g.neg(a)))) {
        closed = false;
        break;
      }
      for (int b : s)
        if (!(mask & (1u << g.add(a, b)))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

inline double einstein_1d(double b1, double b2) {
  return (b1 + b2) / (1.0 + b1 * b2);
}

// Orbit closure of a subset under every gyration permutation; the subset is
// gyr-invariant exactly when the closure adds nothing.
inline Bitset oracle_gyr_orbit_closure(const FiniteGyrogroup& g, Bitset s) {
  bool grew = true;
  while (grew) {
    grew = false;
    Bitset next = s;
    s.for_each([&](int e) {
      for (int a = 0; a < g.n(); ++a)
        for (int b = 0; b < g.n(); ++b) {
          int img = g.gyr(a, b, e);
          if (!next.test(img)) {
            next.set(img);
            grew = true;
          }
        }
    });
    s = next;
  }
  return s;
}

// First non-associative order-n loop with two-sided inverses, found by
// depth-first search over latin squares with identity 0. Used to exercise
// rejection of tables that satisfy G1/G2 but no gyration axioms.
inline std::optional<std::vector<uint16_t>> find_nonassoc_loop(int n) {
  std::vector<uint16_t> t((size_t)n * n);
  for (int j = 0; j < n; ++j) t[j] = (uint16_t)j;
  for (int i = 0; i < n; ++i) t[(size_t)i * n] = (uint16_t)i;
  std::vector<uint32_t> col_used(n, 0);
  for (int j = 0; j < n; ++j) col_used[j] |= 1u << j;  // row 0
  for (int i = 1; i < n; ++i) col_used[0] |= 1u << i;  // column 0

  auto good = [&]() -> bool {
    auto at = [&](int a, int b) -> int { return t[(size_t)a * n + b]; };
    for (int a = 1; a < n; ++a) {
      int right = -1;
      for (int b = 0; b < n; ++b)
        if (at(a, b) == 0) right = b;
      if (right < 0 || at(right, a) != 0) return false;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c))) return true;  // nonassoc
    return false;
  };

  // fill row-major starting at (1,1)
  auto rec = [&](auto&& self, int i, int j, uint32_t row_used) -> bool {
    if (i == n) return good();
    if (j == n) return self(self, i + 1, 1, i + 1 < n ? 1u << (i + 1) : 0u);
    for (int v = 0; v < n; ++v) {
      uint32_t bit = 1u << v;
      if ((row_used & bit) || (col_used[j] & bit)) continue;
      t[(size_t)i * n + j] = (uint16_t)v;
      col_used[j] |= bit;
      if (self(self, i, j + 1, row_used | bit)) return true;
      col_used[j] &= ~bit;
    }
    return false;
  };
  if (rec(rec, 1, 1, 1u << 1)) return t;
  return std::nullopt;
}

}  // namespace gyro::test

#endif
