#include "dqc1/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace dqc1 {

BigNat factorial(unsigned n) {
  BigNat r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigNat binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigNat r = 1;
  // r stays integral: after multiplying i consecutive values it is divisible by i!.
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigNat pow_nat(const BigNat& base, unsigned exp) {
  BigNat r = 1;
  BigNat b = base;
  while (exp != 0) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal: '" + text + "'");

  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string p = s.substr(0, slash);
    std::string q = s.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) {
      throw std::invalid_argument("malformed fraction: '" + text + "'");
    }
    BigNat den(q);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    value = Rational(BigNat(p), den);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac)) {
      throw std::invalid_argument("malformed decimal: '" + text + "'");
    }
    BigNat scale = pow_nat(10, static_cast<unsigned>(frac.size()));
    BigNat num = BigNat(whole) * scale + (frac.empty() ? BigNat(0) : BigNat(frac));
    value = Rational(num, scale);
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed integer: '" + text + "'");
    value = Rational(BigNat(s));
  }
  if (negative) value = -value;
  return value;
}

std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace dqc1
