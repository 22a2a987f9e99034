#ifndef GYRO_FINITE_TABLE_HPP
#define GYRO_FINITE_TABLE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace gyro {

// Hard cap on carrier size; verification is cubic in n.
inline constexpr int kDefaultLimit = 4096;

// One axiom violation found by verify_table. `witness` holds the element
// indices that exhibit the failure; replaying them through the table
// reproduces it.
struct TableFailure {
  std::string axiom;
  std::vector<int> witness;
  std::string detail;
};

struct TableVerdict {
  bool valid = false;
  std::vector<TableFailure> failures;
};

// A finite gyrogroup: carrier {0..n-1}, addition table, detected identity,
// inverse table, and the gyration table derived from
//   gyr[a,b](c) = neg(a+b) + (a + (b + c)).
// Gyrations are deduplicated into a pool of distinct permutations; the
// (a,b) -> pool index map is what gets stored per pair. Immutable after
// construction and safe to share across threads.
class FiniteGyrogroup {
 public:
  using Element = int;
  static constexpr bool exact = true;

  int n() const { return n_; }
  Element zero() const { return identity_; }
  Element add(Element a, Element b) const { return add_[(size_t)a * n_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element gyr(Element a, Element b, Element c) const {
    return gyr_pool_[gyr_id_[(size_t)a * n_ + b]][c];
  }
  std::span<const uint16_t> gyr_perm(Element a, Element b) const {
    return gyr_pool_[gyr_id_[(size_t)a * n_ + b]];
  }

  // Distinct gyration permutations, with one (a,b) pair that produced each.
  int gyr_pool_size() const { return (int)gyr_pool_.size(); }
  std::span<const uint16_t> gyr_pool_perm(int id) const { return gyr_pool_[id]; }
  std::pair<Element, Element> gyr_pool_rep(int id) const { return gyr_rep_[id]; }
  int gyr_pool_id(Element a, Element b) const {
    return gyr_id_[(size_t)a * n_ + b];
  }

  bool has_nontrivial_gyration() const { return gyr_pool_.size() > 1; }

  // Carrier interface used by the generic algebra layer.
  bool approx_eq(Element a, Element b, double) const { return a == b; }
  double residual(Element a, Element b) const { return a == b ? 0.0 : 1.0; }
  std::string format(Element a) const { return std::to_string(a); }
  int carrier_size() const { return n_; }
  Element element_at(int i) const { return i; }
  int index_of(Element a) const { return a; }

  const std::vector<uint16_t>& raw_add() const { return add_; }

 private:
  friend std::pair<TableVerdict, std::optional<FiniteGyrogroup>> verify_table(
      int n, const std::vector<uint16_t>& add, int limit);
  friend FiniteGyrogroup from_group(int n, const std::vector<uint16_t>& cayley,
                                    int limit);

  FiniteGyrogroup() = default;

  int n_ = 0;
  std::vector<uint16_t> add_;
  uint16_t identity_ = 0;
  std::vector<uint16_t> neg_;
  std::vector<int32_t> gyr_id_;
  std::vector<std::vector<uint16_t>> gyr_pool_;
  std::vector<std::pair<Element, Element>> gyr_rep_;
};

// Runs the axiom checklist on a raw table:
//   G1  a two-sided identity exists
//   G2  every element has a two-sided inverse
//   G3  left translations are permutations, neg(a)+(a+b) = b, and every
//       derived gyration is a bijective automorphism of the table
//   G4  gyr[a+b, b] = gyr[a, b] as permutations
// All failures are collected into the verdict (no exception for an invalid
// table); the gyrogroup is materialized only when everything passes.
// Throws Error(resource_limit) when n exceeds `limit`, and
// Error(index_out_of_range) when a cell is outside [0, n).
std::pair<TableVerdict, std::optional<FiniteGyrogroup>> verify_table(
    int n, const std::vector<uint16_t>& add, int limit = kDefaultLimit);

// Builds a gyrogroup from a group Cayley table (all gyrations trivial).
// Throws Error(not_a_group) with the first associativity/identity/inverse
// witness in the message.
FiniteGyrogroup from_group(int n, const std::vector<uint16_t>& cayley,
                           int limit = kDefaultLimit);

// Table file format: first non-comment line is n, followed by n rows of n
// whitespace-separated indices in [0, n). Lines starting with '#' are
// ignored. Trailing newline optional.
std::pair<int, std::vector<uint16_t>> read_table(std::istream& in);
std::pair<int, std::vector<uint16_t>> read_table_file(const std::string& path);
void write_table(const FiniteGyrogroup& g, std::ostream& out);
void write_table_file(const FiniteGyrogroup& g, const std::string& path);

// read + verify; throws Error(invalid_argument) with the first failure when
// the file does not describe a gyrogroup. Every table that enters the system
// through this path has been re-verified.
FiniteGyrogroup load_gyrogroup(const std::string& path,
                               int limit = kDefaultLimit);

}  // namespace gyro

#endif
