#ifndef GYRO_SUBGYRO_HPP
#define GYRO_SUBGYRO_HPP

#include <array>
#include <optional>
#include <vector>

#include "bitset.hpp"
#include "finite_table.hpp"

namespace gyro {

// First closure violation of a candidate subset: either a + b lands outside
// (is_neg = false) or neg(a) does (is_neg = true, b unused).
struct ClosureWitness {
  bool is_neg = false;
  int a = 0, b = 0, result = 0;
};

struct SubgyrogroupInfo {
  Bitset elements;
  bool is_subgyrogroup = false;
  bool is_L = false;
  bool is_strong = false;
  std::optional<ClosureWitness> closure_witness;
  // (a, h, x): gyr[a,h](x) leaves H / (x, y, z): gyr[x,y](z) leaves H
  std::optional<std::array<int, 3>> l_witness;
  std::optional<std::array<int, 3>> strong_witness;
};

// Closure test only; L / strong flags are left false (see classify).
// Throws Error(empty_subset) for the empty set.
SubgyrogroupInfo is_subgyrogroup(const FiniteGyrogroup& g, const Bitset& s);

// Smallest subgyrogroup containing `seed`.
Bitset subgyro_closure(const FiniteGyrogroup& g, Bitset seed);

// gyr[a,h](H) = H for all a in G, h in H. Throws Error(not_a_subgyrogroup).
std::pair<bool, std::optional<std::array<int, 3>>> classify_L(
    const FiniteGyrogroup& g, const Bitset& h);

// gyr[x,y](H) = H for all x, y in G (the whole carrier, which is what
// separates strong from L).
std::pair<bool, std::optional<std::array<int, 3>>> classify_strong(
    const FiniteGyrogroup& g, const Bitset& h);

SubgyrogroupInfo classify(const FiniteGyrogroup& g, const Bitset& h);

// All subgyrogroups, fully classified, ordered by (size, elements).
// Found by growing closures one generator at a time from {0}, which reaches
// every subgyrogroup: any H is the end of a chain of one-element extensions.
// Throws Error(resource_limit) when more than `max_results` exist.
std::vector<SubgyrogroupInfo> enumerate_subgyrogroups(
    const FiniteGyrogroup& g, size_t max_results = 1000000);

struct CosetPartition {
  std::vector<std::vector<int>> blocks;  // indices ascending per block
  std::vector<int> rep;                  // representative per block (its min)
  std::vector<int> index_of;             // element -> block id
};

// Left cosets a + H for an L-subgyrogroup H; blocks are sorted by
// representative. The partition laws (disjoint, covering, equal size) are
// re-verified before returning; a violation raises Error(partition_failure)
// since it can only mean a bug upstream. Throws Error(not_a_subgyrogroup) /
// Error(not_an_l_subgyrogroup) when H fails its hypothesis.
CosetPartition coset_partition(const FiniteGyrogroup& g, const Bitset& h);

// Diagnostic mode: the family {a + H} for any subgyrogroup H, with overlap
// witnesses (i, j, e): element e lies in distinct cosets i and j.
struct CosetFamily {
  std::vector<std::vector<int>> cosets;
  bool is_partition = true;
  std::vector<std::array<int, 3>> overlaps;
};
CosetFamily coset_family(const FiniteGyrogroup& g, const Bitset& h);

}  // namespace gyro

#endif
