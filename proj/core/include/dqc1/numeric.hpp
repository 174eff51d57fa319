#pragma once
// Exact integer and rational scalars. Everything combinatorial in this
// library is computed without floating point; doubles appear only in
// reports and in the dense density-matrix simulator.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace dqc1 {

using BigNat = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

[[nodiscard]] BigNat factorial(unsigned n);

// binomial(n, k) = 0 for k > n.
[[nodiscard]] BigNat binomial(unsigned n, unsigned k);

[[nodiscard]] BigNat pow_nat(const BigNat& base, unsigned exp);

// Accepts "p/q", a finite decimal ("0.25"), or an integer ("7").
// Throws std::invalid_argument on anything else or on q == 0.
[[nodiscard]] Rational parse_rational(const std::string& text);

// Canonical "p/q" with q >= 1, e.g. "3/4", "0/1", "-1/2".
[[nodiscard]] std::string format_rational(const Rational& r);

}  // namespace dqc1
