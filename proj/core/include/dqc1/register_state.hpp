#pragma once
// One-clean-qubit register: k clean qubits followed by n-k maximally
// mixed ones, so the initial state is uniform over the 2^(n-k) basis
// strings whose first k bits are 0.
//
// Two backends. Diagonal mode keeps exact rational probabilities as a
// uniform background plus a sparse override table, which scales to n = 30
// as long as the permutations touch few strings. Dense mode holds the
// full complex density matrix (n <= 10) and additionally supports small
// unitaries.

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "dqc1/basis_permutation.hpp"
#include "dqc1/branching_program.hpp"
#include "dqc1/numeric.hpp"

namespace dqc1 {

enum class SimMode { diagonal, dense };

class RegisterState {
 public:
  // k == 0 means no clean qubits (fully mixed register).
  // Diagonal: 1 <= n <= 30. Dense: 1 <= n <= 10.
  static RegisterState fresh(unsigned n, unsigned k, SimMode mode = SimMode::diagonal);

  [[nodiscard]] unsigned num_qubits() const { return n_; }
  [[nodiscard]] unsigned clean_qubits() const { return k_; }
  [[nodiscard]] SimMode mode() const { return mode_; }

  // Diagonal mode: exact probability of a basis string.
  [[nodiscard]] Rational probability(std::uint64_t basis) const;

  // Dense mode accessors (row, column below 2^n).
  [[nodiscard]] std::complex<double> dense_entry(std::uint64_t row, std::uint64_t col) const;
  [[nodiscard]] const std::vector<std::complex<double>>& dense_data() const;

  // Exact equality of diagonal states (same n, k and distribution).
  friend bool operator==(const RegisterState&, const RegisterState&);

 private:
  RegisterState() = default;
  [[nodiscard]] Rational base_probability(std::uint64_t basis) const;

  unsigned n_ = 0, k_ = 0;
  SimMode mode_ = SimMode::diagonal;
  std::map<std::uint64_t, Rational> overrides_;  // diagonal deviations from the base
  std::vector<std::complex<double>> dense_;      // row-major 2^n x 2^n

  friend RegisterState apply_permutation(const RegisterState&, const BasisPermutation&);
  friend RegisterState run_bp(const RegisterState&, const PermBP&, const std::vector<bool>&);
  friend RegisterState to_dense(const RegisterState&);
  friend RegisterState apply_unitary(const RegisterState&,
                                     const std::vector<std::complex<double>>&,
                                     const std::vector<unsigned>&);
  friend std::pair<Rational, Rational> measure(const RegisterState&, unsigned);
  friend std::pair<double, double> measure_dense(const RegisterState&, unsigned);
};

// Pushforward along g: the new weight of y is the old weight of g^-1(y).
// Exact in diagonal mode; an index relabeling in dense mode.
[[nodiscard]] RegisterState apply_permutation(const RegisterState& s, const BasisPermutation& g);

// Applies each instruction of the program as a basis permutation of the
// top-3-bit prefix states (program state i sits on prefix i-1; prefixes
// 101..110..111 are untouched). Diagonal mode, n >= 3.
[[nodiscard]] RegisterState run_bp(const RegisterState& s, const PermBP& bp,
                                   const std::vector<bool>& assignment);

// Exact marginal (p0, p1) of one qubit (1-based), diagonal mode.
[[nodiscard]] std::pair<Rational, Rational> measure(const RegisterState& s, unsigned qubit);

// Marginal of one qubit in dense mode.
[[nodiscard]] std::pair<double, double> measure_dense(const RegisterState& s, unsigned qubit);

// Embeds a diagonal state as a dense density matrix (n <= 10).
[[nodiscard]] RegisterState to_dense(const RegisterState& s);

// rho' = U rho U^dagger on up to 3 target qubits (dense mode). `u` is
// row-major 2^t x 2^t over the targets in the given order, checked
// unitary within 1e-12; the trace must come back within 1e-10 of 1.
[[nodiscard]] RegisterState apply_unitary(const RegisterState& s,
                                          const std::vector<std::complex<double>>& u,
                                          const std::vector<unsigned>& targets);

// Haar-like random unitary of the given dimension (Gaussian matrix made
// orthonormal), deterministic in the generator state.
[[nodiscard]] std::vector<std::complex<double>> random_unitary(unsigned dim,
                                                               std::mt19937_64& rng);

}  // namespace dqc1
