#include "dqc1/basis_permutation.hpp"

#include <set>
#include <stdexcept>

namespace dqc1 {

BasisPermutation::BasisPermutation(unsigned n) : n_(n) {
  if (n < 1 || n > 62) throw std::invalid_argument("basis permutation needs 1 <= n <= 62");
}

BasisPermutation::BasisPermutation(unsigned n, std::map<std::uint64_t, std::uint64_t> moved)
    : BasisPermutation(n) {
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::set<std::uint64_t> keys, values;
  for (auto it = moved.begin(); it != moved.end();) {
    if (it->first >= limit || it->second >= limit) {
      throw std::invalid_argument("moved string outside the n-bit register");
    }
    if (it->first == it->second) {
      it = moved.erase(it);
      continue;
    }
    keys.insert(it->first);
    values.insert(it->second);
    ++it;
  }
  if (keys != values) {
    throw std::invalid_argument("moved strings do not form a permutation");
  }
  moved_ = std::move(moved);
}

BasisPermutation BasisPermutation::from_five_states(const Perm5& p, unsigned n) {
  if (n < 3 || n > 24) throw std::invalid_argument("five-state embedding needs 3 <= n <= 24");
  std::map<std::uint64_t, std::uint64_t> moved;
  const std::uint64_t suffixes = std::uint64_t{1} << (n - 3);
  for (std::uint8_t state = 1; state <= 5; ++state) {
    if (p(state) == state) continue;
    const std::uint64_t from_prefix = static_cast<std::uint64_t>(state - 1) << (n - 3);
    const std::uint64_t to_prefix = static_cast<std::uint64_t>(p(state) - 1) << (n - 3);
    for (std::uint64_t s = 0; s < suffixes; ++s) {
      moved.emplace(from_prefix | s, to_prefix | s);
    }
  }
  return BasisPermutation(n, std::move(moved));
}

std::uint64_t BasisPermutation::operator()(std::uint64_t x) const {
  auto it = moved_.find(x);
  return it == moved_.end() ? x : it->second;
}

BasisPermutation BasisPermutation::inverse() const {
  std::map<std::uint64_t, std::uint64_t> inv;
  for (const auto& [from, to] : moved_) inv.emplace(to, from);
  return BasisPermutation(n_, std::move(inv));
}

}  // namespace dqc1
