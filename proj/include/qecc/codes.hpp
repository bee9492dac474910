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

#ifndef QECC_CODES_HPP
#define QECC_CODES_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qecc/pauli_state.hpp"
#include "qecc/propagator.hpp"

namespace qecc {

/// Stabilizer code with an explicit orthonormal codeword basis.
///
/// Invariants, checked on construction: generators commute pairwise, every
/// codeword is a +1 eigenstate of every generator (residual <= 1e-10), and
/// the codeword basis is orthonormal to 1e-10.
class StabilizerCode {
 public:
  /// Builds the code space by projecting computational basis states with
  /// prod_g (1 + g)/2 and orthonormalizing until 2^M codewords are found.
  StabilizerCode(std::string name, std::size_t n_spins, std::size_t max_errors,
                 std::vector<PauliString> generators);
  /// Uses the given codewords (validated against the invariants above).
  StabilizerCode(std::string name, std::size_t n_spins, std::size_t max_errors,
                 std::vector<PauliString> generators, std::vector<StateVector> codewords);

  const std::string& name() const { return name_; }
  std::size_t n_spins() const { return n_spins_; }
  std::size_t n_logical() const { return n_logical_; }
  std::size_t max_errors() const { return max_errors_; }
  const std::vector<PauliString>& generators() const { return generators_; }
  const std::vector<StateVector>& codeword_basis() const { return codewords_; }
  /// rho = M / N
  double bit_rate() const { return bit_rate_; }
  /// kappa = K / N
  double error_rate() const { return error_rate_; }

 private:
  void check_invariants() const;

  std::string name_;
  std::size_t n_spins_ = 0;
  std::size_t n_logical_ = 0;
  std::size_t max_errors_ = 0;
  std::vector<PauliString> generators_;
  std::vector<StateVector> codewords_;
  double bit_rate_ = 0.0;
  double error_rate_ = 0.0;
};

/// "five_qubit" ([[5,1,3]]) or "steane" ([[7,1,3]]). Logical |1> is
/// X^{(x)N} applied to logical |0>.
StabilizerCode builtin_code(std::string_view name);

/// Text format, one item per line, '#' comments:
///   n_spins = 5
///   max_errors = 1          (optional, default 1)
///   X0 Z1 Z2 X3             (generators in PauliString text form)
StabilizerCode parse_code_text(std::string_view text, std::string name = "custom");
StabilizerCode load_code_file(const std::string& path);

/// Resolves a builtin name or, failing that, a code file path.
StabilizerCode resolve_code(const std::string& name_or_path);

struct NondegeneracyReport {
  bool passed = false;
  double max_violation = 0.0;
  std::optional<PauliString> worst_string;
  std::size_t worst_row = 0;     // codeword indices of the worst matrix element
  std::size_t worst_column = 0;
  std::size_t strings_checked = 0;
  double threshold = 1e-10;
};

/// Checks <c_i| s |c_j> = 0 for every pair of codewords and every
/// non-identity string of weight 1..2K.
NondegeneracyReport verify_nondegeneracy(const StabilizerCode& code, double threshold = 1e-10);

/// sum_i amplitudes[i] |c_i>, normalized.
StateVector encode_state(const StabilizerCode& code, std::span<const Complex> logical_amplitudes);

/// The vectors {s psi0} for a fixed set of error strings, checked once to be
/// orthonormal. Fidelity is then sum_s |<s psi0 | psi>|^2, which equals the
/// squared norm of psi projected onto the error space.
class ErrorBasis {
 public:
  static constexpr double kResidualLimit = 1e-8;

  /// Throws NumericalError if the Gram matrix deviates from the identity by
  /// more than kResidualLimit (degenerate or invalid code for this psi0).
  ErrorBasis(const StateVector& psi0, std::vector<PauliString> strings);

  const std::vector<PauliString>& strings() const { return strings_; }
  double orthonormality_residual() const { return residual_; }

  /// <s psi0 | psi> for every string, in strings() order.
  std::vector<Complex> amplitudes(const StateVector& psi) const;
  double fidelity(const StateVector& psi) const;
  /// sum_s <s psi0|psi> s psi0.
  StateVector project(const StateVector& psi) const;

 private:
  std::vector<PauliString> strings_;
  std::vector<StateVector> vectors_;
  double residual_ = 0.0;
};

/// Strings of the error space for a code: weight <= K, or a split budget.
std::vector<PauliString> error_strings_for(const StabilizerCode& code,
                                           std::optional<SplitBudget> split = std::nullopt);

double error_space_fidelity(const StabilizerCode& code, const StateVector& psi0,
                            const StateVector& psi_t, std::optional<SplitBudget> split = std::nullopt);

/// Error-space fidelity for an ideal non-degenerate encoding: psi0 is
/// maximally entangled with a noiseless reference register of N spins, so
/// {s psi0} is orthonormal for every string s and
///
///   F(t) = sum_s |Tr(s U(t))|^2 / 4^N,   U(t) = e^{i b0 t Sz} e^{-i H t}.
///
/// The identity term alone is the squared overlap |<psi0|psi(t)>|^2.
/// Per-string traces are precomputed per magnetization sector so each time
/// point costs O(strings * N * 2^N).
class ReferenceCodeEvaluator {
 public:
  /// `undo_b0` > 0 applies the toggling-frame correction e^{i b0 t Sz}.
  ReferenceCodeEvaluator(const SpectralPropagator& propagator, std::vector<PauliString> strings,
                         double undo_b0 = 0.0);

  const std::vector<PauliString>& strings() const { return strings_; }
  /// |Tr(s U(t))|^2 / 4^N for every string.
  std::vector<double> weights(double t) const;
  double fidelity(double t) const;

 private:
  std::vector<PauliString> strings_;
  Eigen::VectorXd energies_;
  double undo_b0_;
  std::size_t n_spins_;
  // sector_terms_[s] is (N+1) x dim: row m holds, per eigenvector k, the part
  // of <v_k| s |v_k> coming from basis states with m flipped spins.
  std::vector<Eigen::MatrixXcd> sector_terms_;
};

}  // namespace qecc

#endif  // QECC_CODES_HPP
