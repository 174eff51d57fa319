#include "dqc1/register_state.hpp"

#include <cmath>
#include <stdexcept>

namespace dqc1 {

namespace {

void require_diagonal(const RegisterState& s, const char* op) {
  if (s.mode() != SimMode::diagonal) {
    throw std::invalid_argument(std::string(op) + " needs a diagonal-mode state");
  }
}

void require_dense(const RegisterState& s, const char* op) {
  if (s.mode() != SimMode::dense) {
    throw std::invalid_argument(std::string(op) + " needs a dense-mode state");
  }
}

}  // namespace

RegisterState RegisterState::fresh(unsigned n, unsigned k, SimMode mode) {
  if (n < 1) throw std::invalid_argument("register needs at least one qubit");
  if (k > n) throw std::invalid_argument("clean qubits cannot exceed register size");
  if (mode == SimMode::diagonal && n > 30) {
    throw std::invalid_argument("diagonal mode supports n <= 30");
  }
  if (mode == SimMode::dense && n > 10) {
    throw std::invalid_argument("dense mode supports n <= 10");
  }
  RegisterState s;
  s.n_ = n;
  s.k_ = k;
  s.mode_ = mode;
  if (mode == SimMode::dense) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    s.dense_.assign(dim * dim, {0.0, 0.0});
    const std::uint64_t support = std::uint64_t{1} << (n - k);
    const double w = 1.0 / static_cast<double>(support);
    for (std::uint64_t y = 0; y < support; ++y) s.dense_[y * dim + y] = {w, 0.0};
  }
  return s;
}

Rational RegisterState::base_probability(std::uint64_t basis) const {
  // Uniform over strings whose first k bits are 0.
  if (k_ > 0 && (basis >> (n_ - k_)) != 0) return Rational(0);
  return Rational(BigNat(1), BigNat(1) << (n_ - k_));
}

Rational RegisterState::probability(std::uint64_t basis) const {
  require_diagonal(*this, "probability");
  if (basis >> n_) throw std::invalid_argument("basis string outside the register");
  auto it = overrides_.find(basis);
  return it == overrides_.end() ? base_probability(basis) : it->second;
}

std::complex<double> RegisterState::dense_entry(std::uint64_t row, std::uint64_t col) const {
  require_dense(*this, "dense_entry");
  const std::uint64_t dim = std::uint64_t{1} << n_;
  if (row >= dim || col >= dim) throw std::invalid_argument("dense index outside the register");
  return dense_[row * dim + col];
}

const std::vector<std::complex<double>>& RegisterState::dense_data() const {
  require_dense(*this, "dense_data");
  return dense_;
}

bool operator==(const RegisterState& a, const RegisterState& b) {
  if (a.n_ != b.n_ || a.k_ != b.k_ || a.mode_ != b.mode_) return false;
  if (a.mode_ != SimMode::diagonal) {
    throw std::invalid_argument("exact equality is defined for diagonal mode only");
  }
  return a.overrides_ == b.overrides_;  // overrides are kept pruned
}

RegisterState apply_permutation(const RegisterState& s, const BasisPermutation& g) {
  if (g.num_bits() != s.num_qubits()) {
    throw std::invalid_argument("permutation register size mismatch");
  }
  if (s.mode() == SimMode::dense) {
    const std::uint64_t dim = std::uint64_t{1} << s.num_qubits();
    RegisterState out = s;
    for (std::uint64_t r = 0; r < dim; ++r) {
      const std::uint64_t gr = g(r);
      for (std::uint64_t c = 0; c < dim; ++c) {
        out.dense_[gr * dim + g(c)] = s.dense_[r * dim + c];
      }
    }
    return out;
  }
  RegisterState out = s;
  // The support is closed, so every changed weight lands on a moved string.
  for (const auto& [from, to] : g.moved()) {
    const Rational v = s.probability(from);
    if (v == out.base_probability(to)) {
      out.overrides_.erase(to);
    } else {
      out.overrides_[to] = v;
    }
  }
  return out;
}

RegisterState run_bp(const RegisterState& s, const PermBP& bp,
                     const std::vector<bool>& assignment) {
  require_diagonal(s, "run_bp");
  if (s.num_qubits() < 3) throw std::invalid_argument("run_bp needs n >= 3");
  if (s.num_qubits() > 24) throw std::invalid_argument("run_bp supports n <= 24");

  RegisterState out = s;
  const unsigned n = s.num_qubits();
  const unsigned shift = n - 3;
  const std::uint64_t suffixes = std::uint64_t{1} << shift;
  std::vector<std::pair<std::uint64_t, Rational>> staged;
  for (const BpInstruction& ins : bp.instructions) {
    if (ins.var == 0 || ins.var > assignment.size()) {
      throw std::out_of_range("assignment missing x" + std::to_string(ins.var));
    }
    const Perm5& p = assignment[ins.var - 1] ? ins.if_one : ins.if_zero;
    if (p.is_identity()) continue;
    // In-place pushforward of the five-state prefix action.
    staged.clear();
    for (std::uint8_t state = 1; state <= 5; ++state) {
      const std::uint8_t image = p(state);
      if (image == state) continue;
      const std::uint64_t from_prefix = static_cast<std::uint64_t>(state - 1) << shift;
      const std::uint64_t to_prefix = static_cast<std::uint64_t>(image - 1) << shift;
      for (std::uint64_t suf = 0; suf < suffixes; ++suf) {
        staged.emplace_back(to_prefix | suf, out.probability(from_prefix | suf));
      }
    }
    for (auto& [y, v] : staged) {
      if (v == out.base_probability(y)) {
        out.overrides_.erase(y);
      } else {
        out.overrides_[y] = std::move(v);
      }
    }
  }
  return out;
}

std::pair<Rational, Rational> measure(const RegisterState& s, unsigned qubit) {
  require_diagonal(s, "measure");
  const unsigned n = s.num_qubits(), k = s.clean_qubits();
  if (qubit < 1 || qubit > n) throw std::invalid_argument("qubit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (n - qubit);

  // Base distribution marginal: clean qubits read 0; mixed ones are fair.
  Rational p1 = qubit <= k ? Rational(0) : Rational(1, 2);
  for (const auto& [y, v] : s.overrides_) {
    if (y & bit) p1 += v - s.base_probability(y);
  }
  return {Rational(1) - p1, p1};
}

std::pair<double, double> measure_dense(const RegisterState& s, unsigned qubit) {
  require_dense(s, "measure_dense");
  const unsigned n = s.num_qubits();
  if (qubit < 1 || qubit > n) throw std::invalid_argument("qubit index out of range");
  const std::uint64_t dim = std::uint64_t{1} << n;
  const std::uint64_t bit = std::uint64_t{1} << (n - qubit);
  double p0 = 0.0, p1 = 0.0;
  for (std::uint64_t y = 0; y < dim; ++y) {
    double w = s.dense_data()[y * dim + y].real();
    (y & bit ? p1 : p0) += w;
  }
  return {p0, p1};
}

RegisterState to_dense(const RegisterState& s) {
  require_diagonal(s, "to_dense");
  if (s.num_qubits() > 10) throw std::invalid_argument("dense mode supports n <= 10");
  RegisterState out = RegisterState::fresh(s.num_qubits(), s.clean_qubits(), SimMode::dense);
  const std::uint64_t dim = std::uint64_t{1} << s.num_qubits();
  for (std::uint64_t y = 0; y < dim; ++y) {
    out.dense_[y * dim + y] = {static_cast<double>(s.probability(y)), 0.0};
  }
  return out;
}

RegisterState apply_unitary(const RegisterState& s, const std::vector<std::complex<double>>& u,
                            const std::vector<unsigned>& targets) {
  require_dense(s, "apply_unitary");
  const unsigned n = s.num_qubits();
  const unsigned t = static_cast<unsigned>(targets.size());
  if (t == 0 || t > 3) throw std::invalid_argument("apply_unitary takes 1 to 3 targets");
  const std::uint64_t sub = std::uint64_t{1} << t;
  if (u.size() != sub * sub) throw std::invalid_argument("unitary size mismatch");
  for (unsigned a = 0; a < t; ++a) {
    if (targets[a] < 1 || targets[a] > n) throw std::invalid_argument("target out of range");
    for (unsigned b = a + 1; b < t; ++b) {
      if (targets[a] == targets[b]) throw std::invalid_argument("duplicate target qubit");
    }
  }

  // Unitarity within 1e-12: max |(U^dagger U - I)_{ij}|.
  for (std::uint64_t i = 0; i < sub; ++i) {
    for (std::uint64_t j = 0; j < sub; ++j) {
      std::complex<double> dot{0.0, 0.0};
      for (std::uint64_t r = 0; r < sub; ++r) {
        dot += std::conj(u[r * sub + i]) * u[r * sub + j];
      }
      if (std::abs(dot - (i == j ? 1.0 : 0.0)) > 1e-12) {
        throw std::invalid_argument("matrix is not unitary within 1e-12");
      }
    }
  }

  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<std::uint64_t> bits(t);
  for (unsigned a = 0; a < t; ++a) bits[a] = std::uint64_t{1} << (n - targets[a]);

  auto subindex = [&](std::uint64_t full) {
    std::uint64_t idx = 0;
    for (unsigned a = 0; a < t; ++a) {
      idx = (idx << 1) | ((full & bits[a]) ? 1u : 0u);
    }
    return idx;
  };
  auto with_sub = [&](std::uint64_t full, std::uint64_t idx) {
    for (unsigned a = 0; a < t; ++a) {
      const std::uint64_t bit = bits[a];
      if ((idx >> (t - 1 - a)) & 1u) {
        full |= bit;
      } else {
        full &= ~bit;
      }
    }
    return full;
  };

  RegisterState out = s;
  std::vector<std::complex<double>> work(dim * dim);

  // work = U_full * rho
  for (std::uint64_t r = 0; r < dim; ++r) {
    const std::uint64_t ri = subindex(r);
    for (std::uint64_t c = 0; c < dim; ++c) {
      std::complex<double> acc{0.0, 0.0};
      for (std::uint64_t x = 0; x < sub; ++x) {
        acc += u[ri * sub + x] * s.dense_[with_sub(r, x) * dim + c];
      }
      work[r * dim + c] = acc;
    }
  }
  // out = work * U_full^dagger
  for (std::uint64_t r = 0; r < dim; ++r) {
    for (std::uint64_t c = 0; c < dim; ++c) {
      const std::uint64_t ci = subindex(c);
      std::complex<double> acc{0.0, 0.0};
      for (std::uint64_t x = 0; x < sub; ++x) {
        acc += work[r * dim + with_sub(c, x)] * std::conj(u[ci * sub + x]);
      }
      out.dense_[r * dim + c] = acc;
    }
  }

  double trace = 0.0;
  for (std::uint64_t y = 0; y < dim; ++y) trace += out.dense_[y * dim + y].real();
  if (std::abs(trace - 1.0) > 1e-10) {
    throw std::logic_error("trace drifted beyond 1e-10 after apply_unitary");
  }
  return out;
}

std::vector<std::complex<double>> random_unitary(unsigned dim, std::mt19937_64& rng) {
  if (dim == 0) throw std::invalid_argument("dimension must be positive");
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::complex<double>> m(static_cast<size_t>(dim) * dim);
  for (auto& z : m) z = {gauss(rng), gauss(rng)};

  // Gram-Schmidt on columns, repeated once for numerical orthogonality.
  for (int pass = 0; pass < 2; ++pass) {
    for (unsigned c = 0; c < dim; ++c) {
      for (unsigned prev = 0; prev < c; ++prev) {
        std::complex<double> dot{0.0, 0.0};
        for (unsigned r = 0; r < dim; ++r) dot += std::conj(m[r * dim + prev]) * m[r * dim + c];
        for (unsigned r = 0; r < dim; ++r) m[r * dim + c] -= dot * m[r * dim + prev];
      }
      double norm = 0.0;
      for (unsigned r = 0; r < dim; ++r) norm += std::norm(m[r * dim + c]);
      norm = std::sqrt(norm);
      if (norm < 1e-12) throw std::logic_error("degenerate random matrix");
      for (unsigned r = 0; r < dim; ++r) m[r * dim + c] /= norm;
    }
  }
  return m;
}

}  // namespace dqc1
