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

#include "qecc/propagator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#ifdef QECC_HAVE_LAPACKE
#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>
#endif

#include "qecc/error.hpp"

namespace qecc {

namespace {

// Upper bound on a*dt for one Chebyshev step.
constexpr double kMaxPhasePerStep = 40.0;

void axpy(Complex a, std::span<const Complex> x, std::span<Complex> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

StateVector chebyshev_step(const PauliSum& h, const StateVector& psi, double dt, double scale,
                           double step_tolerance) {
  const double x = scale * dt;
  const std::size_t dim = psi.dimension();
  // Bessel coefficients decay super-exponentially once k exceeds x.
  const auto k_max = static_cast<std::size_t>(x + 60.0 + 10.0 * std::sqrt(x + 1.0));

  std::vector<Complex> result(dim, Complex{});
  std::vector<Complex> prev(psi.amplitudes().begin(), psi.amplitudes().end());
  std::vector<Complex> cur;

  axpy(std::cyl_bessel_j(0.0, x), prev, result);

  auto scaled_apply = [&](const std::vector<Complex>& v) {
    StateVector out = h.apply(StateVector::unchecked(psi.n_spins(), v));
    std::vector<Complex> a(out.amplitudes().begin(), out.amplitudes().end());
    for (auto& c : a) c /= scale;
    return a;
  };

  cur = scaled_apply(prev);
  static constexpr Complex kMinusI[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  std::size_t small_run = 0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double jk = std::cyl_bessel_j(static_cast<double>(k), x);
    axpy(2.0 * kMinusI[k % 4] * jk, cur, result);
    if (static_cast<double>(k) > x && std::abs(jk) < step_tolerance) {
      if (++small_run >= 2) return StateVector::unchecked(psi.n_spins(), std::move(result));
    } else {
      small_run = 0;
    }
    // T_{k+1} = 2 H~ T_k - T_{k-1}
    std::vector<Complex> next = scaled_apply(cur);
    for (std::size_t i = 0; i < dim; ++i) next[i] = 2.0 * next[i] - prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  throw NumericalError("Chebyshev expansion did not converge");
}

void check_norm(const StateVector& psi, double tolerance) {
  if (std::abs(psi.norm() - 1.0) > tolerance) {
    throw NumericalError("propagation norm drift exceeds tolerance");
  }
}

}  // namespace

PropagationMethod parse_propagation_method(std::string_view name) {
  if (name == "dense_eigen") return PropagationMethod::kDenseEigen;
  if (name == "polynomial_matrix_free" || name == "polynomial") return PropagationMethod::kPolynomial;
  if (name == "auto") return PropagationMethod::kAuto;
  throw ConfigError("unknown propagation method '" + std::string(name) + "'");
}

std::string to_string(PropagationMethod m) {
  switch (m) {
    case PropagationMethod::kDenseEigen: return "dense_eigen";
    case PropagationMethod::kPolynomial: return "polynomial_matrix_free";
    case PropagationMethod::kAuto: return "auto";
  }
  return "auto";
}

void PropagationSettings::validate() const {
  if (!(tolerance > 0.0 && tolerance <= 1e-4)) throw ConfigError("tolerance must be in (0, 1e-4]");
  if (max_step && !(*max_step > 0.0)) throw ConfigError("max_step must be > 0");
}

PropagationMethod PropagationSettings::resolve(std::size_t n_spins) const {
  if (method != PropagationMethod::kAuto) return method;
  return (std::size_t{1} << n_spins) <= kDenseLimit ? PropagationMethod::kDenseEigen
                                                    : PropagationMethod::kPolynomial;
}

SpectralPropagator::SpectralPropagator(const PauliSum& hamiltonian)
    : n_spins_(hamiltonian.n_spins()) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_spins_);
  const std::vector<Complex> dense = hamiltonian.to_dense();
  Eigen::MatrixXcd m =
      Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
          dense.data(), dim, dim);
#ifdef QECC_HAVE_LAPACKE
  energies_.resize(dim);
  const lapack_int info =
      LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'U', static_cast<lapack_int>(dim),
                     reinterpret_cast<lapack_complex_double*>(m.data()), static_cast<lapack_int>(dim),
                     energies_.data());
  if (info != 0) throw NumericalError("eigendecomposition failed (zheevd info " + std::to_string(info) + ")");
  vectors_ = std::move(m);
#else
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
  energies_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
#endif
}

SpectralPropagator::SpectralPropagator(const HamiltonianSample& h, const LatticeSpec& lattice)
    : SpectralPropagator(hamiltonian_terms(h, lattice)) {}

StateVector SpectralPropagator::evolve(const StateVector& psi, double t) const {
  if (psi.n_spins() != n_spins_) throw ConfigError("state / Hamiltonian size mismatch");
  const auto dim = static_cast<Eigen::Index>(psi.dimension());
  Eigen::Map<const Eigen::VectorXcd> in(psi.amplitudes().data(), dim);
  Eigen::VectorXcd coeff = vectors_.adjoint() * in;
  for (Eigen::Index k = 0; k < dim; ++k) coeff[k] *= std::polar(1.0, -energies_[k] * t);
  Eigen::VectorXcd out = vectors_ * coeff;
  return StateVector::unchecked(n_spins_, std::vector<Complex>(out.data(), out.data() + dim));
}

Eigen::MatrixXcd SpectralPropagator::unitary(double t) const {
  Eigen::VectorXcd phases(energies_.size());
  for (Eigen::Index k = 0; k < energies_.size(); ++k) phases[k] = std::polar(1.0, -energies_[k] * t);
  return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

StateVector chebyshev_evolve(const PauliSum& hamiltonian, const StateVector& psi, double t,
                             double tolerance, std::optional<double> max_step) {
  if (t < 0.0) throw ConfigError("evolution time must be >= 0");
  if (t == 0.0) return psi;
  const double scale = hamiltonian.norm_bound() * (1.0 + 1e-12);
  if (scale == 0.0) return psi;
  std::size_t steps = static_cast<std::size_t>(std::ceil(scale * t / kMaxPhasePerStep));
  if (max_step) steps = std::max(steps, static_cast<std::size_t>(std::ceil(t / *max_step)));
  steps = std::max<std::size_t>(steps, 1);
  const double dt = t / static_cast<double>(steps);
  const double step_tolerance = tolerance * 1e-2 / static_cast<double>(steps);
  StateVector cur = psi;
  for (std::size_t s = 0; s < steps; ++s) cur = chebyshev_step(hamiltonian, cur, dt, scale, step_tolerance);
  return cur;
}

StateVector evolve(const HamiltonianSample& h, const LatticeSpec& lattice, const StateVector& psi0,
                   double t, const PropagationSettings& settings) {
  settings.validate();
  if (t < 0.0) throw ConfigError("evolution time must be >= 0");
  if (psi0.n_spins() != lattice.n_spins) throw ConfigError("state / lattice size mismatch");
  if (t == 0.0) return psi0;
  const PauliSum terms = hamiltonian_terms(h, lattice);
  StateVector out = settings.resolve(lattice.n_spins) == PropagationMethod::kDenseEigen
                        ? SpectralPropagator(terms).evolve(psi0, t)
                        : chebyshev_evolve(terms, psi0, t, settings.tolerance, settings.max_step);
  check_norm(out, std::max(settings.tolerance, 1e-10) * std::max(1.0, psi0.norm()));
  return out;
}

StateVector undo_uniform_field(const StateVector& psi, double b0, double t) {
  StateVector out = psi;
  const auto n = static_cast<int>(psi.n_spins());
  for (std::uint64_t i = 0; i < psi.dimension(); ++i) {
    const int sz = n - 2 * std::popcount(i);
    out[i] *= std::polar(1.0, b0 * t * sz);
  }
  return out;
}

StateVector evolve_toggling(const HamiltonianSample& h, const LatticeSpec& lattice,
                            const StateVector& psi0, double t, const PropagationSettings& settings) {
  if (!(h.b0 > 0.0)) throw ConfigError("toggling frame needs b0 > 0");
  return undo_uniform_field(evolve(h, lattice, psi0, t, settings), h.b0, t);
}

StateVector evolve_piecewise(std::span<const Segment> schedule, const LatticeSpec& lattice,
                             const StateVector& psi0, const PropagationSettings& settings) {
  StateVector cur = psi0;
  for (const auto& seg : schedule) {
    if (!(seg.duration > 0.0)) throw ConfigError("segment durations must be positive");
    cur = evolve(seg.hamiltonian, lattice, cur, seg.duration, settings);
  }
  return cur;
}

HamiltonianSample effective_hamiltonian(const HamiltonianSample& h, const LatticeSpec& lattice) {
  if (h.fields.size() != lattice.n_spins || h.couplings.size() != lattice.edges.size()) {
    throw ConfigError("Hamiltonian sample does not match lattice");
  }
  HamiltonianSample out = HamiltonianSample::zero(lattice);
  out.xy_symmetric = true;
  for (std::size_t n = 0; n < h.fields.size(); ++n) out.fields[n][2] = h.fields[n][2];
  for (std::size_t e = 0; e < h.couplings.size(); ++e) {
    const Mat3& j = h.couplings[e];
    if (j[0][1] != j[1][0]) {
      throw ConfigError("effective Hamiltonian needs J^xy == J^yx on every edge");
    }
    const double transverse = 0.5 * (j[0][0] + j[1][1]);
    out.couplings[e][0][0] = transverse;
    out.couplings[e][1][1] = transverse;
    out.couplings[e][2][2] = j[2][2];
  }
  return out;
}

}  // namespace qecc
