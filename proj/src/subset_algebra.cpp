#include "subset_algebra.hpp"

#include "core_algebra.hpp"
#include "subgyro.hpp"

namespace gyro {

namespace {

const FiniteGyrogroup& same_parent(const GyroSubset& a, const GyroSubset& b) {
  if (a.parent == nullptr || b.parent == nullptr)
    fail(errc::invalid_argument, "subset has no parent gyrogroup");
  if (a.parent != b.parent)
    fail(errc::parent_mismatch,
         "subsets belong to different parent gyrogroups");
  return *a.parent;
}

InclusionVerdict inclusion(const Bitset& lhs, const Bitset& rhs,
                           std::string step) {
  InclusionVerdict v;
  v.step = std::move(step);
  int missing = lhs.first_not_in(rhs);
  if (missing >= 0) {
    v.holds = false;
    v.witness = missing;
  }
  return v;
}

InclusionVerdict equality(const Bitset& lhs, const Bitset& rhs,
                          const std::string& what) {
  InclusionVerdict v = inclusion(lhs, rhs, what + " (left in right)");
  if (!v.holds) return v;
  return inclusion(rhs, lhs, what + " (right in left)");
}

}  // namespace

GyroSubset make_subset(const FiniteGyrogroup& g, const Bitset& bits) {
  if (bits.universe() != g.n())
    fail(errc::invalid_argument, "subset universe does not match carrier");
  return {&g, bits};
}

GyroSubset make_subset(const FiniteGyrogroup& g, const std::vector<int>& xs) {
  Bitset b(g.n());
  for (int x : xs) {
    if (x < 0 || x >= g.n())
      fail(errc::index_out_of_range,
           "element " + std::to_string(x) + " outside [0, " +
               std::to_string(g.n()) + ")");
    b.set(x);
  }
  return {&g, b};
}

GyroSubset subset_add(const GyroSubset& a, const GyroSubset& b) {
  const FiniteGyrogroup& g = same_parent(a, b);
  Bitset out(g.n());
  a.bits.for_each([&](int x) {
    b.bits.for_each([&](int y) { out.set(g.add(x, y)); });
  });
  return {&g, out};
}

GyroSubset subset_neg(const GyroSubset& a) {
  if (a.parent == nullptr)
    fail(errc::invalid_argument, "subset has no parent gyrogroup");
  const FiniteGyrogroup& g = *a.parent;
  Bitset out(g.n());
  a.bits.for_each([&](int x) { out.set(g.neg(x)); });
  return {&g, out};
}

GyroSubset subset_coadd(const GyroSubset& a, const GyroSubset& b) {
  const FiniteGyrogroup& g = same_parent(a, b);
  Bitset out(g.n());
  a.bits.for_each([&](int x) {
    b.bits.for_each([&](int y) { out.set(coadd(g, x, y)); });
  });
  return {&g, out};
}

std::pair<bool, std::optional<std::array<int, 3>>> gyr_invariant(
    const GyroSubset& a) {
  if (a.parent == nullptr)
    fail(errc::invalid_argument, "subset has no parent gyrogroup");
  const FiniteGyrogroup& g = *a.parent;
  auto members = a.bits.to_indices();
  std::vector<int> cache(g.gyr_pool_size(), -2);
  for (int x = 0; x < g.n(); ++x)
    for (int y = 0; y < g.n(); ++y) {
      int id = g.gyr_pool_id(x, y);
      if (cache[id] == -2) {
        cache[id] = -1;
        for (int e : members)
          if (!a.bits.test(g.gyr_pool_perm(id)[e])) {
            cache[id] = e;
            break;
          }
      }
      if (cache[id] >= 0) return {false, std::array<int, 3>{x, y, cache[id]}};
    }
  return {true, std::nullopt};
}

InclusionVerdict subset_assoc_check(const GyroSubset& w, const GyroSubset& u,
                                    const GyroSubset& v, bool force) {
  same_parent(w, u);
  same_parent(u, v);
  if (!force) {
    auto [inv, wit] = gyr_invariant(v);
    if (!inv) {
      auto [x, y, e] = *wit;
      fail(errc::precondition_unmet,
           "V is not gyr-invariant: gyr[" + std::to_string(x) + "," +
               std::to_string(y) + "] moves " + std::to_string(e) +
               " out of V");
    }
  }
  Bitset lhs = subset_add(subset_add(w, u), v).bits;
  Bitset rhs = subset_add(w, subset_add(u, v)).bits;
  return equality(lhs, rhs, "(W+U)+V = W+(U+V)");
}

namespace {

void require_l_subgyrogroup(const FiniteGyrogroup& g, const Bitset& h,
                            const char* name) {
  auto info = is_subgyrogroup(g, h);
  if (!info.is_subgyrogroup)
    fail(errc::precondition_unmet,
         std::string(name) + " is not a subgyrogroup");
  auto [is_l, wit] = classify_L(g, h);
  if (!is_l)
    fail(errc::precondition_unmet,
         std::string(name) + " is not an L-subgyrogroup");
}

void require_strong_subgyrogroup(const FiniteGyrogroup& g, const Bitset& h,
                                 const char* name) {
  auto info = is_subgyrogroup(g, h);
  if (!info.is_subgyrogroup)
    fail(errc::precondition_unmet,
         std::string(name) + " is not a subgyrogroup");
  auto [is_s, wit] = classify_strong(g, h);
  if (!is_s)
    fail(errc::precondition_unmet,
         std::string(name) + " is not a strong (gyr-invariant) subgyrogroup");
}

void require_gyr_invariant(const GyroSubset& a, const char* name) {
  auto [inv, wit] = gyr_invariant(a);
  if (!inv)
    fail(errc::precondition_unmet,
         std::string(name) + " is not gyr-invariant");
}

void require_contains_identity(const FiniteGyrogroup& g, const Bitset& s,
                               const char* name) {
  if (!s.test(g.zero()))
    fail(errc::precondition_unmet,
         std::string(name) + " must contain the identity");
}

}  // namespace

InclusionVerdict inverse_bound_check(const GyroSubset& h, const GyroSubset& v,
                                     const GyroSubset& w) {
  const FiniteGyrogroup& g = same_parent(h, v);
  same_parent(h, w);
  require_l_subgyrogroup(g, h.bits, "H");
  require_contains_identity(g, v.bits, "V");
  Bitset lhs = subset_neg(subset_add(w, h)).bits;
  Bitset rhs = subset_add(h, v).bits;
  return inclusion(lhs, rhs, "-(W+H) subseteq H+V");
}

Bitset symmetric_invariant_closure(const FiniteGyrogroup& g, Bitset seed) {
  Bitset s = seed;
  std::vector<int> frontier = s.to_indices();
  while (!frontier.empty()) {
    std::vector<int> next;
    auto push = [&](int x) {
      if (!s.test(x)) {
        s.set(x);
        next.push_back(x);
      }
    };
    for (int x : frontier) {
      push(g.neg(x));
      for (int id = 0; id < g.gyr_pool_size(); ++id)
        push(g.gyr_pool_perm(id)[x]);
    }
    frontier = std::move(next);
  }
  return s;
}

std::pair<GyroSubset, InclusionVerdict> inverse_bound_search(
    const GyroSubset& h, const GyroSubset& v) {
  const FiniteGyrogroup& g = same_parent(h, v);
  require_l_subgyrogroup(g, h.bits, "H");
  require_contains_identity(g, v.bits, "V");

  Bitset rhs = subset_add(h, v).bits;
  Bitset w(g.n());
  w.set(g.zero());
  // {0} always satisfies the bound: -(0+H) = -H = H subseteq H+V.
  for (int e = 0; e < g.n(); ++e) {
    if (w.test(e)) continue;
    Bitset seed = w;
    seed.set(e);
    Bitset cand = symmetric_invariant_closure(g, seed);
    Bitset lhs = subset_neg(subset_add({&g, cand}, h)).bits;
    if (lhs.is_subset_of(rhs)) w = cand;
  }
  GyroSubset result{&g, w};
  return {result, inverse_bound_check(h, v, result)};
}

std::pair<InclusionVerdict, InclusionVerdict> neutrality_check(
    const GyroSubset& h, const GyroSubset& u, const GyroSubset& v) {
  same_parent(h, u);
  same_parent(h, v);
  Bitset hv = subset_add(h, v).bits;
  Bitset uh = subset_add(u, h).bits;
  Bitset vh = subset_add(v, h).bits;
  Bitset hu = subset_add(h, u).bits;
  return {inclusion(hv, uh, "H+V subseteq U+H"),
          inclusion(vh, hu, "V+H subseteq H+U")};
}

NeutralityResult neutrality_search(const GyroSubset& h, const GyroSubset& u) {
  const FiniteGyrogroup& g = same_parent(h, u);
  require_contains_identity(g, u.bits, "U");

  Bitset uh = subset_add(u, h).bits;
  Bitset hu = subset_add(h, u).bits;
  Bitset v(g.n());
  v.set(g.zero());
  for (int e = 0; e < g.n(); ++e) {
    if (v.test(e)) continue;
    Bitset cand = v;
    cand.set(e);
    Bitset hv = subset_add(h, {&g, cand}).bits;
    Bitset vh = subset_add({&g, cand}, h).bits;
    if (hv.is_subset_of(uh) && vh.is_subset_of(hu)) v = cand;
  }
  GyroSubset best{&g, v};
  auto [inner, outer] = neutrality_check(h, u, best);
  return {best, inner, outer};
}

InclusionVerdict double_product_chain_check(const GyroSubset& w,
                                            const GyroSubset& u,
                                            const GyroSubset& h) {
  const FiniteGyrogroup& g = same_parent(w, u);
  same_parent(w, h);
  require_gyr_invariant(w, "W");
  require_gyr_invariant(u, "U");
  require_strong_subgyrogroup(g, h.bits, "H");
  {
    Bitset hw = subset_add(h, w).bits;
    Bitset uh = subset_add(u, h).bits;
    if (!hw.is_subset_of(uh))
      fail(errc::precondition_unmet, "hypothesis H+W subseteq U+H fails");
  }

  GyroSubset wh = subset_add(w, h);
  GyroSubset uu = subset_add(u, u);
  Bitset s0 = subset_add(wh, wh).bits;
  Bitset s1 = subset_add(subset_add(w, subset_add(h, w)), h).bits;
  Bitset s2 = subset_add(subset_add(u, subset_add(u, h)), h).bits;
  Bitset s3 = subset_add(subset_add(uu, h), h).bits;
  Bitset s4 = subset_add(uu, h).bits;

  InclusionVerdict v =
      equality(s0, s1, "(W+H)+(W+H) = (W+(H+W))+H");
  if (!v.holds) return v;
  v = inclusion(s1, s2, "(W+(H+W))+H subseteq (U+(U+H))+H");
  if (!v.holds) return v;
  v = equality(s2, s3, "(U+(U+H))+H = ((U+U)+H)+H");
  if (!v.holds) return v;
  v = equality(s3, s4, "((U+U)+H)+H = (U+U)+H");
  if (!v.holds) return v;
  return inclusion(s0, s4, "(W+H)+(W+H) subseteq (U+U)+H");
}

InclusionVerdict coadd_absorption_check(const GyroSubset& w,
                                        const GyroSubset& u,
                                        const GyroSubset& v,
                                        const GyroSubset& h, int g_elem) {
  const FiniteGyrogroup& g = same_parent(w, u);
  same_parent(w, v);
  same_parent(w, h);
  if (g_elem < 0 || g_elem >= g.n())
    fail(errc::index_out_of_range, "g outside the carrier");
  require_gyr_invariant(u, "U");
  require_gyr_invariant(w, "W");
  require_strong_subgyrogroup(g, h.bits, "H");
  if (!subset_add(u, u).bits.is_subset_of(v.bits))
    fail(errc::precondition_unmet, "hypothesis U+U subseteq V fails");
  {
    Bitset hw = subset_add(h, w).bits;
    Bitset uh = subset_add(u, h).bits;
    if (!hw.is_subset_of(uh))
      fail(errc::precondition_unmet, "hypothesis H+W subseteq U+H fails");
  }

  GyroSubset point = make_subset(g, std::vector<int>{g_elem});
  GyroSubset lhs = subset_coadd(subset_add(subset_add(point, u), h), w);
  Bitset rhs = subset_add(subset_add(point, v), h).bits;
  return inclusion(lhs.bits, rhs, "((g+U)+H) coadd W subseteq (g+V)+H");
}

}  // namespace gyro
