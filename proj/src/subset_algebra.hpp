#ifndef GYRO_SUBSET_ALGEBRA_HPP
#define GYRO_SUBSET_ALGEBRA_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "finite_table.hpp"

namespace gyro {

// A subset of one particular finite gyrogroup. Mixing parents is an error.
struct GyroSubset {
  const FiniteGyrogroup* parent = nullptr;
  Bitset bits;
};

GyroSubset make_subset(const FiniteGyrogroup& g, const Bitset& bits);
GyroSubset make_subset(const FiniteGyrogroup& g, const std::vector<int>& xs);

// A + B = { a + b : a in A, b in B }
GyroSubset subset_add(const GyroSubset& a, const GyroSubset& b);
// -A = { -a : a in A }
GyroSubset subset_neg(const GyroSubset& a);
// A [+] B = { a [+] b } via coaddition
GyroSubset subset_coadd(const GyroSubset& a, const GyroSubset& b);

// gyr[x,y](A) = A for all x, y; witness (x, y, a) has gyr[x,y](a) outside A.
std::pair<bool, std::optional<std::array<int, 3>>> gyr_invariant(
    const GyroSubset& a);

struct InclusionVerdict {
  bool holds = true;
  std::optional<int> witness;  // element of the left side missing on the right
  std::string step;            // which inclusion/equality failed, for chains
};

// (W+U)+V = W+(U+V); valid whenever V is gyr-invariant. The precondition is
// enforced unless force is set (diagnostic runs on arbitrary V).
InclusionVerdict subset_assoc_check(const GyroSubset& w, const GyroSubset& u,
                                    const GyroSubset& v, bool force = false);

// -(W+H) subseteq H+V, evaluated for a supplied candidate W. H must be an
// L-subgyrogroup and V must contain the identity.
InclusionVerdict inverse_bound_check(const GyroSubset& h, const GyroSubset& v,
                                     const GyroSubset& w);

// Greedy search (ascending element order, each candidate closed to a
// symmetric gyr-invariant set) for the largest W containing the identity
// with -(W+H) subseteq H+V. W = {0} always works, so the verdict holds.
std::pair<GyroSubset, InclusionVerdict> inverse_bound_search(
    const GyroSubset& h, const GyroSubset& v);

// H+V subseteq U+H (inner) and V+H subseteq H+U (outer) for a supplied V.
std::pair<InclusionVerdict, InclusionVerdict> neutrality_check(
    const GyroSubset& h, const GyroSubset& u, const GyroSubset& v);

struct NeutralityResult {
  GyroSubset v;
  InclusionVerdict inner;
  InclusionVerdict outer;
};
// Greedy largest V (ascending element order) with both inclusions; {0}
// always works when the identity is in U.
NeutralityResult neutrality_search(const GyroSubset& h, const GyroSubset& u);

// The displayed collapse of a doubled product, step by step:
//   (W+H)+(W+H) = (W+(H+W))+H
//               subseteq (U+(U+H))+H
//               = ((U+U)+H)+H
//               = (U+U)+H
// Hypotheses (checked): W, U gyr-invariant; H a strong subgyrogroup;
// H+W subseteq U+H. The first failing step is named in the verdict.
InclusionVerdict double_product_chain_check(const GyroSubset& w,
                                            const GyroSubset& u,
                                            const GyroSubset& h);

// ((g+U)+H) [+] W subseteq (g+V)+H, with the left side expanded through
// coaddition elementwise. Hypotheses (checked): U, W gyr-invariant; H a
// strong subgyrogroup; U+U subseteq V; H+W subseteq U+H.
InclusionVerdict coadd_absorption_check(const GyroSubset& w,
                                        const GyroSubset& u,
                                        const GyroSubset& v,
                                        const GyroSubset& h, int g_elem);

// Smallest symmetric gyr-invariant superset.
Bitset symmetric_invariant_closure(const FiniteGyrogroup& g, Bitset seed);

}  // namespace gyro

#endif
