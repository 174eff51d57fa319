#pragma once
// Indexed families of axis-parallel subspaces of the 2^n-dimensional
// register space, identified with subsets of {0,1}^n.
//
// parity(n):  one member per nonzero b, member(b) = {x : <x,b> = 0 mod 2}.
//             The all-zero b is excluded: it would index the whole space
//             and distinguish nothing.
// pointed(n): one member per (n-1)-bit b,
//             member(b) = {x : x1 = 0} union {1.b}.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dqc1/basis_permutation.hpp"
#include "dqc1/numeric.hpp"

namespace dqc1 {

enum class FamilyKind { parity, pointed, explicit_sets };

class SubspaceFamily {
 public:
  static SubspaceFamily parity(unsigned n);   // 2 <= n <= 20
  static SubspaceFamily pointed(unsigned n);  // 2 <= n <= 20
  // Arbitrary member lists (deduplicated, sorted); indices are positions.
  static SubspaceFamily explicit_sets(unsigned n, std::vector<std::vector<std::uint64_t>> members);

  [[nodiscard]] FamilyKind kind() const { return kind_; }
  [[nodiscard]] unsigned n() const { return n_; }
  [[nodiscard]] std::uint64_t index_count() const;
  [[nodiscard]] std::uint64_t index_at(std::uint64_t pos) const;

  // Membership is a closed-form test; nothing is materialized.
  [[nodiscard]] bool contains(std::uint64_t index, std::uint64_t x) const;
  [[nodiscard]] std::uint64_t member_size(std::uint64_t index) const;
  [[nodiscard]] std::vector<std::uint64_t> member_elements(std::uint64_t index) const;
  // 2^n bits packed into 64-bit blocks, for fast pair intersection.
  [[nodiscard]] std::vector<std::uint64_t> member_bitset(std::uint64_t index) const;

  [[nodiscard]] std::string label() const;

 private:
  SubspaceFamily(FamilyKind kind, unsigned n) : kind_(kind), n_(n) {}

  FamilyKind kind_;
  unsigned n_;
  std::vector<std::vector<std::uint64_t>> explicit_members_;
};

// Exact pair intersection size; closed form for parity and pointed,
// enumeration for explicit families. index1 != index2.
[[nodiscard]] std::uint64_t intersection_size(const SubspaceFamily& f, std::uint64_t index1,
                                              std::uint64_t index2);

// Independent enumeration oracle for the same quantity (n <= 20).
[[nodiscard]] std::uint64_t intersection_size_enumerated(const SubspaceFamily& f,
                                                         std::uint64_t index1,
                                                         std::uint64_t index2);

struct OverlapStats {
  std::string family_label;
  std::uint64_t pair_count = 0;
  Rational max_ratio{0};  // |A ^ A'| / |A| over unordered pairs (both sides for
  Rational min_ratio{0};  // unequal member sizes)
  std::map<std::uint64_t, std::uint64_t> intersection_histogram;  // size -> pairs
};

// Scans all unordered index pairs; requires index_count <= 2^14.
[[nodiscard]] OverlapStats overlap_stats(const SubspaceFamily& f);

enum class WitnessStatus { found, none, undecided };

struct PermutabilityWitness {
  WitnessStatus status = WitnessStatus::none;
  std::optional<BasisPermutation> witness;  // carries member(b) onto member(pi(b))
  std::string note;
};

// pi permutes index positions: pi[pos] is the new position.
//
// pointed: always found; the witness fixes every x1=0 string and relabels
//          the pointed strings.
// parity:  a witness exists among invertible linear substitutions iff the
//          index map is such a substitution. n <= 4 is decided by
//          exhaustive search over them ("none" when absent); for larger n
//          a witness may still be found by linear reconstruction, but a
//          miss reports "undecided" (nonlinear relabelings are not
//          searched). Absence is a result, not an error.
[[nodiscard]] PermutabilityWitness permutability_witness(const SubspaceFamily& f,
                                                         const std::vector<std::uint64_t>& pi);

// Full verification by enumeration: the witness maps member(index_at(p))
// onto member(index_at(pi[p])) for every position p.
[[nodiscard]] bool witness_carries_family(const SubspaceFamily& f,
                                          const std::vector<std::uint64_t>& pi,
                                          const BasisPermutation& witness);

}  // namespace dqc1
