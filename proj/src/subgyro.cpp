#include "subgyro.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gyro {

SubgyrogroupInfo is_subgyrogroup(const FiniteGyrogroup& g, const Bitset& s) {
  if (s.empty()) fail(errc::empty_subset, "a subgyrogroup must be nonempty");
  SubgyrogroupInfo info;
  info.elements = s;
  info.is_subgyrogroup = true;

  auto members = s.to_indices();
  for (int a : members) {
    for (int b : members) {
      int ab = g.add(a, b);
      if (!s.test(ab)) {
        info.is_subgyrogroup = false;
        info.closure_witness = ClosureWitness{false, a, b, ab};
        return info;
      }
    }
  }
  for (int a : members) {
    int na = g.neg(a);
    if (!s.test(na)) {
      info.is_subgyrogroup = false;
      info.closure_witness = ClosureWitness{true, a, 0, na};
      return info;
    }
  }
  return info;
}

Bitset subgyro_closure(const FiniteGyrogroup& g, Bitset seed) {
  Bitset s = seed;
  std::vector<int> members = s.to_indices();
  std::vector<int> frontier = members;
  auto insert = [&](int x, std::vector<int>& next) {
    if (!s.test(x)) {
      s.set(x);
      next.push_back(x);
    }
  };
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      insert(g.neg(x), next);
      for (int a : members) {
        insert(g.add(a, x), next);
        insert(g.add(x, a), next);
      }
      insert(g.add(x, x), next);
    }
    for (int x : next) members.push_back(x);
    // new members must also combine with other new members
    for (size_t i = 0; i < next.size(); ++i)
      for (size_t j = 0; j < next.size(); ++j) {
        int v = g.add(next[i], next[j]);
        if (!s.test(v)) {
          s.set(v);
          next.push_back(v);
          members.push_back(v);
        }
      }
    frontier = std::move(next);
  }
  return s;
}

std::pair<bool, std::optional<std::array<int, 3>>> classify_L(
    const FiniteGyrogroup& g, const Bitset& h) {
  auto info = is_subgyrogroup(g, h);
  if (!info.is_subgyrogroup)
    fail(errc::not_a_subgyrogroup, "subset is not closed under + and neg");
  auto members = h.to_indices();
  const int n = g.n();
  // Results depend only on the gyration permutation; cache per pool entry.
  std::vector<int> cache(g.gyr_pool_size(), -2);  // -2 unseen, -1 ok, else x
  for (int a = 0; a < n; ++a)
    for (int hh : members) {
      int id = g.gyr_pool_id(a, hh);
      if (cache[id] == -2) {
        cache[id] = -1;
        for (int x : members)
          if (!h.test(g.gyr_pool_perm(id)[x])) {
            cache[id] = x;
            break;
          }
      }
      if (cache[id] >= 0) return {false, std::array<int, 3>{a, hh, cache[id]}};
    }
  return {true, std::nullopt};
}

std::pair<bool, std::optional<std::array<int, 3>>> classify_strong(
    const FiniteGyrogroup& g, const Bitset& h) {
  auto info = is_subgyrogroup(g, h);
  if (!info.is_subgyrogroup)
    fail(errc::not_a_subgyrogroup, "subset is not closed under + and neg");
  auto members = h.to_indices();
  const int n = g.n();
  std::vector<int> cache(g.gyr_pool_size(), -2);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int id = g.gyr_pool_id(x, y);
      if (cache[id] == -2) {
        cache[id] = -1;
        for (int z : members)
          if (!h.test(g.gyr_pool_perm(id)[z])) {
            cache[id] = z;
            break;
          }
      }
      if (cache[id] >= 0) return {false, std::array<int, 3>{x, y, cache[id]}};
    }
  return {true, std::nullopt};
}

SubgyrogroupInfo classify(const FiniteGyrogroup& g, const Bitset& h) {
  SubgyrogroupInfo info = is_subgyrogroup(g, h);
  if (!info.is_subgyrogroup) return info;
  auto [is_l, lw] = classify_L(g, h);
  info.is_L = is_l;
  info.l_witness = lw;
  auto [is_s, sw] = classify_strong(g, h);
  info.is_strong = is_s;
  info.strong_witness = sw;
  return info;
}

std::vector<SubgyrogroupInfo> enumerate_subgyrogroups(const FiniteGyrogroup& g,
                                                      size_t max_results) {
  const int n = g.n();
  std::set<Bitset> found;
  std::vector<Bitset> queue;

  Bitset trivial(n);
  trivial.set(g.zero());
  found.insert(trivial);
  queue.push_back(trivial);

  while (!queue.empty()) {
    Bitset h = queue.back();
    queue.pop_back();
    for (int x = 0; x < n; ++x) {
      if (h.test(x)) continue;
      Bitset seed = h;
      seed.set(x);
      Bitset k = subgyro_closure(g, seed);
      if (found.insert(k).second) {
        if (found.size() > max_results)
          fail(errc::resource_limit,
               "more than " + std::to_string(max_results) + " subgyrogroups");
        queue.push_back(k);
      }
    }
  }

  std::vector<SubgyrogroupInfo> out;
  out.reserve(found.size());
  for (const Bitset& h : found) out.push_back(classify(g, h));
  std::sort(out.begin(), out.end(),
            [](const SubgyrogroupInfo& a, const SubgyrogroupInfo& b) {
              int ca = a.elements.count(), cb = b.elements.count();
              if (ca != cb) return ca < cb;
              return a.elements.to_indices() < b.elements.to_indices();
            });
  return out;
}

CosetPartition coset_partition(const FiniteGyrogroup& g, const Bitset& h) {
  auto [is_l, lw] = classify_L(g, h);
  if (!is_l) {
    auto [a, hh, x] = *lw;
    fail(errc::not_an_l_subgyrogroup,
         "gyr[" + std::to_string(a) + "," + std::to_string(hh) + "](" +
             std::to_string(x) + ") = " +
             std::to_string(g.gyr(a, hh, x)) +
             " leaves the subgyrogroup; left cosets need the L-property");
  }

  const int n = g.n();
  auto members = h.to_indices();
  CosetPartition part;
  part.index_of.assign(n, -1);

  for (int a = 0; a < n; ++a) {
    if (part.index_of[a] >= 0) continue;
    std::vector<int> block;
    block.reserve(members.size());
    for (int hh : members) block.push_back(g.add(a, hh));
    std::sort(block.begin(), block.end());
    if (std::adjacent_find(block.begin(), block.end()) != block.end())
      fail(errc::partition_failure,
           "coset of " + std::to_string(a) + " has repeated elements");
    int id = (int)part.blocks.size();
    for (int e : block) {
      if (part.index_of[e] >= 0)
        fail(errc::partition_failure,
             "element " + std::to_string(e) + " lies in cosets " +
                 std::to_string(part.index_of[e]) + " and " +
                 std::to_string(id));
      part.index_of[e] = id;
    }
    part.blocks.push_back(std::move(block));
    part.rep.push_back(a);
  }

  // partition laws: every coset a+H must equal the block containing a, and
  // all blocks have |H| elements
  for (const auto& block : part.blocks)
    if ((int)block.size() != (int)members.size())
      fail(errc::partition_failure, "coset sizes differ from |H|");
  for (int a = 0; a < n; ++a) {
    std::vector<int> coset;
    coset.reserve(members.size());
    for (int hh : members) coset.push_back(g.add(a, hh));
    std::sort(coset.begin(), coset.end());
    if (coset != part.blocks[part.index_of[a]])
      fail(errc::partition_failure,
           "coset of " + std::to_string(a) +
               " does not match its partition block");
  }
  return part;
}

CosetFamily coset_family(const FiniteGyrogroup& g, const Bitset& h) {
  auto info = is_subgyrogroup(g, h);
  if (!info.is_subgyrogroup)
    fail(errc::not_a_subgyrogroup, "subset is not closed under + and neg");
  const int n = g.n();
  auto members = h.to_indices();

  CosetFamily fam;
  std::map<std::vector<int>, int> seen;
  for (int a = 0; a < n; ++a) {
    std::vector<int> coset;
    coset.reserve(members.size());
    for (int hh : members) coset.push_back(g.add(a, hh));
    std::sort(coset.begin(), coset.end());
    coset.erase(std::unique(coset.begin(), coset.end()), coset.end());
    if (seen.try_emplace(coset, (int)fam.cosets.size()).second)
      fam.cosets.push_back(coset);
  }
  for (size_t i = 0; i < fam.cosets.size(); ++i)
    for (size_t j = i + 1; j < fam.cosets.size(); ++j) {
      std::vector<int> shared;
      std::set_intersection(fam.cosets[i].begin(), fam.cosets[i].end(),
                            fam.cosets[j].begin(), fam.cosets[j].end(),
                            std::back_inserter(shared));
      if (!shared.empty()) {
        fam.is_partition = false;
        fam.overlaps.push_back({(int)i, (int)j, shared.front()});
      }
    }
  return fam;
}

}  // namespace gyro
