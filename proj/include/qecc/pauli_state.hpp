// Copyright 2026 The qecc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QECC_PAULI_STATE_HPP
#define QECC_PAULI_STATE_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qecc/lattice.hpp"

namespace qecc {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxSpins = 30;

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

/// i^phase * prod_n P_n with P_n in {I,X,Y,Z}. Letters are stored in the
/// symplectic (x,z) bit form: X=(1,0), Z=(0,1), Y=(1,1); Y is the Pauli
/// matrix itself, not the product XZ. Phase is an exact quarter-turn count.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n_spins);

  static PauliString identity(std::size_t n_spins) { return PauliString(n_spins); }
  /// "X0 Z3", "I", optionally prefixed by a phase token "+", "-", "i" or "-i".
  static PauliString parse(std::string_view text, std::size_t n_spins);
  /// Dense form "XZZXI", site 0 first.
  static PauliString from_letters(std::string_view letters);

  std::size_t n_spins() const { return n_spins_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  /// Power of i, in [0, 4).
  unsigned phase() const { return phase_; }
  Complex phase_value() const;

  PauliLetter letter(std::size_t site) const;
  void set(std::size_t site, PauliLetter p);
  PauliString with_phase(unsigned quarter_turns) const;

  std::size_t weight() const;
  std::size_t z_count() const;   // number of Z letters
  std::size_t xy_count() const;  // number of X or Y letters

  /// Operator product (*this) * rhs with exact phase.
  PauliString operator*(const PauliString& rhs) const;
  bool commutes_with(const PauliString& rhs) const;

  bool operator==(const PauliString&) const = default;
  auto operator<=>(const PauliString&) const = default;

  std::string to_string() const;

 private:
  std::size_t n_spins_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  unsigned phase_ = 0;
};

/// Amplitudes over 2^N basis states. Site n <-> bit n of the basis index;
/// bit value 0 <-> sigma^z eigenvalue +1.
///
/// States built with the named factories, Pauli application and the
/// propagators have unit norm (checked to 1e-10). Results of applying a
/// Hamiltonian are plain vectors and carry no norm guarantee.
class StateVector {
 public:
  StateVector() = default;

  static StateVector basis_state(std::size_t n_spins, std::uint64_t index);
  /// Throws ConfigError unless |norm - 1| <= 1e-10.
  static StateVector from_amplitudes(std::size_t n_spins, std::vector<Complex> amplitudes);
  /// Rescales to unit norm; throws NumericalError on a zero vector.
  static StateVector normalized(std::size_t n_spins, std::vector<Complex> amplitudes);
  /// No norm check; for operator images such as H*psi.
  static StateVector unchecked(std::size_t n_spins, std::vector<Complex> amplitudes);

  std::size_t n_spins() const { return n_spins_; }
  std::size_t dimension() const { return amps_.size(); }
  double norm() const;

  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> amplitudes() { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  Complex& operator[](std::size_t i) { return amps_[i]; }

 private:
  StateVector(std::size_t n, std::vector<Complex> a) : n_spins_(n), amps_(std::move(a)) {}
  std::size_t n_spins_ = 0;
  std::vector<Complex> amps_;
};

StateVector apply_pauli_string(const PauliString& s, const StateVector& psi);
/// <a|b>, conjugating a.
Complex inner_product(const StateVector& a, const StateVector& b);
/// ||a - b||.
double distance(const StateVector& a, const StateVector& b);

struct SplitBudget {
  std::size_t k_par = 0;   // max number of Z letters
  std::size_t k_perp = 0;  // max number of X/Y letters
};

/// All strings of weight <= max_weight, each unordered support once, ordered
/// by weight, then support, then letters. With a split budget, the strings
/// with z_count <= k_par and xy_count <= k_perp (max_weight is ignored).
std::vector<PauliString> enumerate_error_strings(std::size_t n_spins, std::size_t max_weight,
                                                 std::optional<SplitBudget> split = std::nullopt);

/// Sum of weighted Pauli strings, grouped by flip pattern for matrix-free
/// application.
class PauliSum {
 public:
  explicit PauliSum(std::size_t n_spins) : n_spins_(n_spins) {}

  void add(Complex coefficient, const PauliString& s);
  std::size_t n_spins() const { return n_spins_; }
  std::size_t term_count() const;

  StateVector apply(const StateVector& psi) const;
  /// Row-major dense matrix, dimension 2^N x 2^N.
  std::vector<Complex> to_dense() const;
  /// Upper bound on the operator norm: sum of |coefficients|.
  double norm_bound() const;

 private:
  struct Term {
    std::uint64_t z_mask;
    Complex coefficient;  // includes i^phase and the i per Y letter
  };
  struct Group {
    std::uint64_t x_mask;
    std::vector<Term> terms;
  };
  std::size_t n_spins_;
  std::vector<Group> groups_;
};

/// Pauli expansion of the sample's Hamiltonian (edge factor 2 included,
/// plus b0 sum sigma^z).
PauliSum hamiltonian_terms(const HamiltonianSample& h, const LatticeSpec& lattice);

StateVector apply_hamiltonian(const HamiltonianSample& h, const LatticeSpec& lattice,
                              const StateVector& psi);

}  // namespace qecc

#endif  // QECC_PAULI_STATE_HPP
