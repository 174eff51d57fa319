#include "dqc1/partition.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace dqc1 {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

Partition Partition::parse(const std::string& text) {
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[') {
    throw std::invalid_argument("partition must start with '[': '" + text + "'");
  }
  ++i;
  std::vector<unsigned> parts;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip_ws();
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw std::invalid_argument("expected part at position " + std::to_string(i) +
                                    " in '" + text + "'");
      }
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        if (v > 1'000'000'000UL) throw std::invalid_argument("part out of range in '" + text + "'");
        ++i;
      }
      parts.push_back(static_cast<unsigned>(v));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      throw std::invalid_argument("expected ',' or ']' at position " + std::to_string(i) +
                                  " in '" + text + "'");
    }
  }
  skip_ws();
  if (i != text.size()) {
    throw std::invalid_argument("trailing characters after ']' in '" + text + "'");
  }
  return Partition(std::move(parts));
}

unsigned Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

unsigned Partition::part(unsigned i) const {
  if (i == 0) throw std::invalid_argument("rows are 1-based");
  return i <= parts_.size() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition{};
  std::vector<unsigned> conj(parts_[0], 0);
  for (unsigned j = 0; j < parts_[0]; ++j) {
    unsigned count = 0;
    for (unsigned p : parts_) {
      if (p >= j + 1) ++count;
    }
    conj[j] = count;
  }
  return Partition(std::move(conj));
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ']';
  return s;
}

std::vector<std::vector<unsigned>> hook_lengths(const Partition& shape) {
  const auto& parts = shape.parts();
  const Partition conj = shape.conjugate();
  std::vector<std::vector<unsigned>> hooks(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) {
    hooks[i].resize(parts[i]);
    for (unsigned j = 1; j <= parts[i]; ++j) {
      // arm: cells to the right; leg: cells below.
      unsigned arm = parts[i] - j;
      unsigned leg = conj.part(j) - static_cast<unsigned>(i + 1);
      hooks[i][j - 1] = arm + leg + 1;
    }
  }
  return hooks;
}

BigNat hook_product(const Partition& shape) {
  BigNat prod = 1;
  for (const auto& row : hook_lengths(shape)) {
    for (unsigned h : row) prod *= h;
  }
  return prod;
}

BigNat irrep_dimension(const Partition& shape) {
  BigNat num = factorial(shape.weight());
  BigNat den = hook_product(shape);
  BigNat q, r;
  divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error("hook product does not divide weight!");
  return q;
}

std::vector<Cell> inside_corners(const Partition& shape) {
  std::vector<Cell> corners;
  const auto& parts = shape.parts();
  for (unsigned i = 1; i <= parts.size(); ++i) {
    unsigned here = parts[i - 1];
    unsigned below = i < parts.size() ? parts[i] : 0;
    if (here > below) corners.push_back(Cell{i, here});
  }
  return corners;
}

std::vector<Partition> restrictions(const Partition& shape) {
  if (shape.weight() == 0) throw std::invalid_argument("cannot restrict the empty shape");
  std::vector<Partition> result;
  for (const Cell& c : inside_corners(shape)) {
    std::vector<unsigned> parts = shape.parts();
    parts[c.row - 1] -= 1;
    if (parts[c.row - 1] == 0) parts.erase(parts.begin() + (c.row - 1));
    result.emplace_back(std::move(parts));
  }
  return result;
}

PartitionEnumerator::PartitionEnumerator(unsigned m) : m_(m) {
  if (m_ > 0) current_.assign(1, m_);
}

std::optional<Partition> PartitionEnumerator::next() {
  if (done_) return std::nullopt;
  if (!emitted_first_) {
    emitted_first_ = true;
    if (m_ == 0) {
      done_ = true;
      return Partition{};
    }
    return Partition(current_);
  }
  // Advance in reverse-lexicographic order: shrink the rightmost part >= 2
  // and redistribute the freed cells as evenly-large tail parts.
  size_t r = current_.size();
  while (r > 0 && current_[r - 1] == 1) --r;
  if (r == 0) {
    done_ = true;
    return std::nullopt;
  }
  unsigned removed = 0;
  for (size_t i = r - 1; i < current_.size(); ++i) removed += current_[i];
  unsigned v = current_[r - 1] - 1;
  current_.resize(r - 1);
  unsigned q = removed / v;
  unsigned s = removed % v;
  current_.insert(current_.end(), q, v);
  if (s > 0) current_.push_back(s);
  return Partition(current_);
}

std::vector<Partition> partitions_of(unsigned m) {
  std::vector<Partition> all;
  PartitionEnumerator e(m);
  while (auto p = e.next()) all.push_back(std::move(*p));
  return all;
}

}  // namespace dqc1
