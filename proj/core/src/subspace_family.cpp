#include "dqc1/subspace_family.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace dqc1 {

namespace {

void require_range(unsigned n) {
  if (n < 2 || n > 20) throw std::invalid_argument("family needs 2 <= n <= 20");
}

}  // namespace

SubspaceFamily SubspaceFamily::parity(unsigned n) {
  require_range(n);
  return SubspaceFamily(FamilyKind::parity, n);
}

SubspaceFamily SubspaceFamily::pointed(unsigned n) {
  require_range(n);
  return SubspaceFamily(FamilyKind::pointed, n);
}

SubspaceFamily SubspaceFamily::explicit_sets(unsigned n,
                                             std::vector<std::vector<std::uint64_t>> members) {
  require_range(n);
  SubspaceFamily f(FamilyKind::explicit_sets, n);
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (auto& m : members) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    for (std::uint64_t x : m) {
      if (x >= limit) throw std::invalid_argument("member string outside the register");
    }
  }
  f.explicit_members_ = std::move(members);
  return f;
}

std::uint64_t SubspaceFamily::index_count() const {
  switch (kind_) {
    case FamilyKind::parity:
      return (std::uint64_t{1} << n_) - 1;
    case FamilyKind::pointed:
      return std::uint64_t{1} << (n_ - 1);
    case FamilyKind::explicit_sets:
      return explicit_members_.size();
  }
  return 0;
}

std::uint64_t SubspaceFamily::index_at(std::uint64_t pos) const {
  if (pos >= index_count()) throw std::invalid_argument("index position out of range");
  return kind_ == FamilyKind::parity ? pos + 1 : pos;
}

bool SubspaceFamily::contains(std::uint64_t index, std::uint64_t x) const {
  if (x >> n_) throw std::invalid_argument("string outside the register");
  switch (kind_) {
    case FamilyKind::parity:
      if (index == 0 || (index >> n_)) throw std::invalid_argument("bad parity index");
      return std::popcount(index & x) % 2 == 0;
    case FamilyKind::pointed: {
      if (index >> (n_ - 1)) throw std::invalid_argument("bad pointed index");
      const std::uint64_t top = std::uint64_t{1} << (n_ - 1);
      return (x & top) == 0 || x == (top | index);
    }
    case FamilyKind::explicit_sets: {
      const auto& m = explicit_members_.at(index);
      return std::binary_search(m.begin(), m.end(), x);
    }
  }
  return false;
}

std::uint64_t SubspaceFamily::member_size(std::uint64_t index) const {
  switch (kind_) {
    case FamilyKind::parity:
      return std::uint64_t{1} << (n_ - 1);
    case FamilyKind::pointed:
      return (std::uint64_t{1} << (n_ - 1)) + 1;
    case FamilyKind::explicit_sets:
      return explicit_members_.at(index).size();
  }
  return 0;
}

std::vector<std::uint64_t> SubspaceFamily::member_elements(std::uint64_t index) const {
  if (kind_ == FamilyKind::explicit_sets) return explicit_members_.at(index);
  std::vector<std::uint64_t> out;
  out.reserve(member_size(index));
  const std::uint64_t limit = std::uint64_t{1} << n_;
  for (std::uint64_t x = 0; x < limit; ++x) {
    if (contains(index, x)) out.push_back(x);
  }
  return out;
}

std::vector<std::uint64_t> SubspaceFamily::member_bitset(std::uint64_t index) const {
  const std::uint64_t limit = std::uint64_t{1} << n_;
  std::vector<std::uint64_t> blocks((limit + 63) / 64, 0);
  for (std::uint64_t x = 0; x < limit; ++x) {
    if (contains(index, x)) blocks[x >> 6] |= std::uint64_t{1} << (x & 63);
  }
  return blocks;
}

std::string SubspaceFamily::label() const {
  switch (kind_) {
    case FamilyKind::parity:
      return "parity(n=" + std::to_string(n_) + ")";
    case FamilyKind::pointed:
      return "pointed(n=" + std::to_string(n_) + ")";
    case FamilyKind::explicit_sets:
      return "explicit(n=" + std::to_string(n_) +
             ",members=" + std::to_string(explicit_members_.size()) + ")";
  }
  return "?";
}

std::uint64_t intersection_size(const SubspaceFamily& f, std::uint64_t index1,
                                std::uint64_t index2) {
  if (index1 == index2) throw std::invalid_argument("intersection needs distinct indices");
  switch (f.kind()) {
    case FamilyKind::parity:
      // Distinct nonzero functionals are independent over GF(2).
      return std::uint64_t{1} << (f.n() - 2);
    case FamilyKind::pointed:
      // The pointed strings differ, so only the shared x1=0 block remains.
      return std::uint64_t{1} << (f.n() - 1);
    case FamilyKind::explicit_sets:
      return intersection_size_enumerated(f, index1, index2);
  }
  return 0;
}

std::uint64_t intersection_size_enumerated(const SubspaceFamily& f, std::uint64_t index1,
                                           std::uint64_t index2) {
  const auto b1 = f.member_bitset(index1);
  const auto b2 = f.member_bitset(index2);
  std::uint64_t count = 0;
  for (size_t i = 0; i < b1.size(); ++i) count += std::popcount(b1[i] & b2[i]);
  return count;
}

OverlapStats overlap_stats(const SubspaceFamily& f) {
  const std::uint64_t count = f.index_count();
  if (count > (std::uint64_t{1} << 14)) {
    throw std::invalid_argument("overlap_stats supports at most 2^14 indices");
  }
  OverlapStats stats;
  stats.family_label = f.label();
  bool first = true;
  for (std::uint64_t p = 0; p < count; ++p) {
    const std::uint64_t bp = f.index_at(p);
    const std::uint64_t size_p = f.member_size(bp);
    for (std::uint64_t q = p + 1; q < count; ++q) {
      const std::uint64_t bq = f.index_at(q);
      const std::uint64_t inter = intersection_size(f, bp, bq);
      ++stats.pair_count;
      ++stats.intersection_histogram[inter];
      for (std::uint64_t denom : {size_p, f.member_size(bq)}) {
        const Rational ratio{BigNat(inter), BigNat(denom)};
        if (first || ratio > stats.max_ratio) stats.max_ratio = ratio;
        if (first || ratio < stats.min_ratio) stats.min_ratio = ratio;
        first = false;
      }
    }
  }
  return stats;
}

namespace {

// GF(2) linear algebra on n x n matrices, rows as bit masks.
using Gf2Matrix = std::vector<std::uint32_t>;

std::uint32_t apply_gf2(const Gf2Matrix& m, std::uint32_t x) {
  std::uint32_t y = 0;
  for (size_t r = 0; r < m.size(); ++r) {
    y |= static_cast<std::uint32_t>(std::popcount(m[r] & x) % 2) << r;
  }
  return y;
}

Gf2Matrix transpose_gf2(const Gf2Matrix& m) {
  const size_t n = m.size();
  Gf2Matrix t(n, 0);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) {
      if ((m[r] >> c) & 1u) t[c] |= std::uint32_t{1} << r;
    }
  }
  return t;
}

bool invert_gf2(Gf2Matrix m, Gf2Matrix& inv) {
  const size_t n = m.size();
  inv.assign(n, 0);
  for (size_t i = 0; i < n; ++i) inv[i] = std::uint32_t{1} << i;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && !((m[pivot] >> col) & 1u)) ++pivot;
    if (pivot == n) return false;
    std::swap(m[col], m[pivot]);
    std::swap(inv[col], inv[pivot]);
    for (size_t r = 0; r < n; ++r) {
      if (r != col && ((m[r] >> col) & 1u)) {
        m[r] ^= m[col];
        inv[r] ^= inv[col];
      }
    }
  }
  return true;
}

// The substitution x -> Mx carries member(b) to member((M^T)^-1 b), so M
// realizes pi iff M^T pi(b) = b for every index b.
bool matrix_realizes(const Gf2Matrix& m_transposed, const SubspaceFamily& f,
                     const std::vector<std::uint64_t>& pi) {
  const std::uint64_t count = f.index_count();
  for (std::uint64_t p = 0; p < count; ++p) {
    const auto b = static_cast<std::uint32_t>(f.index_at(p));
    const auto pib = static_cast<std::uint32_t>(f.index_at(pi[p]));
    if (apply_gf2(m_transposed, pib) != b) return false;
  }
  return true;
}

BasisPermutation substitution_permutation(const Gf2Matrix& m, unsigned n) {
  std::map<std::uint64_t, std::uint64_t> moved;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < limit; ++x) {
    const std::uint64_t y = apply_gf2(m, static_cast<std::uint32_t>(x));
    if (y != x) moved.emplace(x, y);
  }
  return BasisPermutation(n, std::move(moved));
}

void validate_index_permutation(const std::vector<std::uint64_t>& pi, std::uint64_t count) {
  if (pi.size() != count) throw std::invalid_argument("index permutation has the wrong size");
  std::vector<bool> seen(count, false);
  for (std::uint64_t v : pi) {
    if (v >= count || seen[v]) throw std::invalid_argument("not a permutation of index positions");
    seen[v] = true;
  }
}

}  // namespace

PermutabilityWitness permutability_witness(const SubspaceFamily& f,
                                           const std::vector<std::uint64_t>& pi) {
  validate_index_permutation(pi, f.index_count());
  PermutabilityWitness out;

  if (f.kind() == FamilyKind::pointed) {
    const unsigned n = f.n();
    const std::uint64_t top = std::uint64_t{1} << (n - 1);
    std::map<std::uint64_t, std::uint64_t> moved;
    for (std::uint64_t p = 0; p < f.index_count(); ++p) {
      if (pi[p] == p) continue;
      moved.emplace(top | f.index_at(p), top | f.index_at(pi[p]));
    }
    out.status = WitnessStatus::found;
    out.witness = BasisPermutation(n, std::move(moved));
    out.note = "fixes every x1=0 string and relabels the pointed strings";
    return out;
  }

  if (f.kind() != FamilyKind::parity) {
    out.status = WitnessStatus::undecided;
    out.note = "witness search is defined for the parity and pointed families";
    return out;
  }

  const unsigned n = f.n();
  if (n <= 4) {
    // Exhaustive search over invertible linear substitutions.
    const std::uint32_t cells = n * n;
    for (std::uint64_t packed = 0; packed < (std::uint64_t{1} << cells); ++packed) {
      Gf2Matrix m(n, 0);
      for (unsigned r = 0; r < n; ++r) {
        m[r] = static_cast<std::uint32_t>((packed >> (r * n)) & ((1u << n) - 1));
      }
      Gf2Matrix unused;
      if (!invert_gf2(m, unused)) continue;
      if (matrix_realizes(transpose_gf2(m), f, pi)) {
        out.status = WitnessStatus::found;
        out.witness = substitution_permutation(m, n);
        out.note = "invertible linear substitution (exhaustive search)";
        return out;
      }
    }
    out.status = WitnessStatus::none;
    out.note = "no invertible linear substitution realizes the index map "
               "(exhaustive search up to n=4)";
    return out;
  }

  // Larger n: reconstruct the only possible linear index map and verify it.
  // pi must act linearly on indices: T(b) = pi(b) with T invertible; then
  // M = (T^T)^-1 gives the substitution.
  std::vector<std::uint64_t> pos_of(f.index_count() + 1, 0);
  for (std::uint64_t p = 0; p < f.index_count(); ++p) pos_of[f.index_at(p)] = p;
  Gf2Matrix t_cols(n, 0);  // T by columns: image of each unit vector
  for (unsigned i = 0; i < n; ++i) {
    const std::uint64_t e = std::uint64_t{1} << i;
    t_cols[i] = static_cast<std::uint32_t>(f.index_at(pi[pos_of[e]]));
  }
  // Row form of T from its columns.
  Gf2Matrix t_rows(n, 0);
  for (unsigned c = 0; c < n; ++c) {
    for (unsigned r = 0; r < n; ++r) {
      if ((t_cols[c] >> r) & 1u) t_rows[r] |= std::uint32_t{1} << c;
    }
  }
  bool linear = true;
  for (std::uint64_t p = 0; p < f.index_count() && linear; ++p) {
    const auto b = static_cast<std::uint32_t>(f.index_at(p));
    if (apply_gf2(t_rows, b) != f.index_at(pi[p])) linear = false;
  }
  Gf2Matrix t_inv;
  if (linear && invert_gf2(t_rows, t_inv)) {
    const Gf2Matrix m = transpose_gf2(t_inv);
    if (matrix_realizes(transpose_gf2(m), f, pi)) {
      out.status = WitnessStatus::found;
      out.witness = substitution_permutation(m, n);
      out.note = "invertible linear substitution (reconstructed)";
      return out;
    }
  }
  out.status = WitnessStatus::undecided;
  out.note = "no invertible linear substitution realizes the index map; "
             "nonlinear relabelings were not searched";
  return out;
}

bool witness_carries_family(const SubspaceFamily& f, const std::vector<std::uint64_t>& pi,
                            const BasisPermutation& witness) {
  validate_index_permutation(pi, f.index_count());
  if (witness.num_bits() != f.n()) return false;
  for (std::uint64_t p = 0; p < f.index_count(); ++p) {
    const std::uint64_t target = f.index_at(pi[p]);
    const auto source_elems = f.member_elements(f.index_at(p));
    if (source_elems.size() != f.member_size(target)) return false;
    for (std::uint64_t x : source_elems) {
      if (!f.contains(target, witness(x))) return false;
    }
  }
  return true;
}

}  // namespace dqc1
