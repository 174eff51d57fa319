#include "dqc1/perm5.hpp"

#include <stdexcept>

namespace dqc1 {

Perm5 Perm5::from_images(const std::array<std::uint8_t, 5>& images) {
  bool seen[6] = {};
  for (std::uint8_t v : images) {
    if (v < 1 || v > 5 || seen[v]) throw std::invalid_argument("not a permutation of 1..5");
    seen[v] = true;
  }
  Perm5 p;
  p.img_ = images;
  return p;
}

Perm5 Perm5::cycle(std::initializer_list<std::uint8_t> points) {
  std::array<std::uint8_t, 5> img{1, 2, 3, 4, 5};
  bool seen[6] = {};
  const auto* data = points.begin();
  const auto count = points.size();
  for (size_t i = 0; i < count; ++i) {
    std::uint8_t v = data[i];
    if (v < 1 || v > 5 || seen[v]) throw std::invalid_argument("bad cycle");
    seen[v] = true;
  }
  for (size_t i = 0; i < count; ++i) {
    img[data[i] - 1] = data[(i + 1) % count];
  }
  return from_images(img);
}

Perm5 Perm5::operator*(const Perm5& then) const {
  Perm5 r;
  for (int i = 0; i < 5; ++i) r.img_[i] = then.img_[img_[i] - 1];
  return r;
}

Perm5 Perm5::inverse() const {
  Perm5 r;
  for (int i = 0; i < 5; ++i) r.img_[img_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return r;
}

bool Perm5::is_identity() const {
  return *this == Perm5{};
}

bool Perm5::is_five_cycle() const {
  std::uint8_t x = 1;
  for (int steps = 1; steps < 5; ++steps) {
    x = img_[x - 1];
    if (x == 1) return false;
  }
  return img_[x - 1] == 1;
}

bool Perm5::is_even() const {
  // Parity via cycle structure: even iff (5 - #cycles) is even.
  bool visited[6] = {};
  int cycles = 0;
  for (std::uint8_t s = 1; s <= 5; ++s) {
    if (visited[s]) continue;
    ++cycles;
    std::uint8_t x = s;
    while (!visited[x]) {
      visited[x] = true;
      x = img_[x - 1];
    }
  }
  return (5 - cycles) % 2 == 0;
}

std::string Perm5::to_string() const {
  bool visited[6] = {};
  std::string s;
  for (std::uint8_t start = 1; start <= 5; ++start) {
    if (visited[start] || img_[start - 1] == start) {
      visited[start] = true;
      continue;
    }
    s += '(';
    std::uint8_t x = start;
    bool first = true;
    while (!visited[x]) {
      visited[x] = true;
      if (!first) s += ' ';
      first = false;
      s += static_cast<char>('0' + x);
      x = img_[x - 1];
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

}  // namespace dqc1
