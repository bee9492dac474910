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

#ifndef QECC_PROPAGATOR_HPP
#define QECC_PROPAGATOR_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "qecc/lattice.hpp"
#include "qecc/pauli_state.hpp"

namespace qecc {

enum class PropagationMethod { kDenseEigen, kPolynomial, kAuto };

PropagationMethod parse_propagation_method(std::string_view name);
std::string to_string(PropagationMethod m);

struct PropagationSettings {
  PropagationMethod method = PropagationMethod::kAuto;
  double tolerance = 1e-10;
  std::optional<double> max_step;

  /// Dimension at or below which kAuto picks the dense path.
  static constexpr std::size_t kDenseLimit = 2048;

  void validate() const;
  PropagationMethod resolve(std::size_t n_spins) const;
};

/// Full eigendecomposition of a Hamiltonian; evolves to any time for the
/// cost of two dense matrix-vector products.
class SpectralPropagator {
 public:
  explicit SpectralPropagator(const PauliSum& hamiltonian);
  SpectralPropagator(const HamiltonianSample& h, const LatticeSpec& lattice);

  std::size_t n_spins() const { return n_spins_; }
  const Eigen::VectorXd& energies() const { return energies_; }
  const Eigen::MatrixXcd& eigenvectors() const { return vectors_; }

  StateVector evolve(const StateVector& psi, double t) const;
  /// e^{-iHt} as a dense matrix.
  Eigen::MatrixXcd unitary(double t) const;

 private:
  std::size_t n_spins_ = 0;
  Eigen::VectorXd energies_;
  Eigen::MatrixXcd vectors_;
};

/// Chebyshev expansion of e^{-iHt} applied to psi without forming H.
/// Steps are chosen so each step's expansion stays short; throws
/// NumericalError if the series does not converge or the norm drifts by more
/// than `tolerance`.
StateVector chebyshev_evolve(const PauliSum& hamiltonian, const StateVector& psi, double t,
                             double tolerance, std::optional<double> max_step = std::nullopt);

/// psi(t) = e^{-iHt} psi0 for the full sample (including its b0 field).
StateVector evolve(const HamiltonianSample& h, const LatticeSpec& lattice, const StateVector& psi0,
                   double t, const PropagationSettings& settings = {});

/// e^{i b0 t sum_n sigma^z_n} psi, exact and diagonal.
StateVector undo_uniform_field(const StateVector& psi, double b0, double t);

/// G(t) psi0 = e^{i H0 t} e^{-i (H + H0) t} psi0 with H0 = b0 sum sigma^z.
/// Requires h.b0 > 0.
StateVector evolve_toggling(const HamiltonianSample& h, const LatticeSpec& lattice,
                            const StateVector& psi0, double t,
                            const PropagationSettings& settings = {});

/// Time-ordered product of segment propagators, first segment applied first.
StateVector evolve_piecewise(std::span<const Segment> schedule, const LatticeSpec& lattice,
                             const StateVector& psi0, const PropagationSettings& settings = {});

/// Time average of the toggling-frame Hamiltonian for large b0: keeps B^z,
/// J^zz and the symmetric transverse part (J^xx + J^yy)/2 on both xx and yy.
/// The result has b0 = 0. Throws ConfigError if any edge has J^xy != J^yx.
HamiltonianSample effective_hamiltonian(const HamiltonianSample& h, const LatticeSpec& lattice);

}  // namespace qecc

#endif  // QECC_PROPAGATOR_HPP
