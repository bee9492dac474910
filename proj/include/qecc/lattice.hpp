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

#ifndef QECC_LATTICE_HPP
#define QECC_LATTICE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace qecc {

using Edge = std::pair<std::size_t, std::size_t>;

/// Uniform-degree interaction graph on `n_spins` sites. Edges are stored
/// unordered with first < second.
struct LatticeSpec {
  std::size_t n_spins = 0;
  std::vector<Edge> edges;
  std::size_t degree = 0;
};

/// Ring of n sites. n == 2 yields the single edge {0,1} with degree 1.
LatticeSpec build_ring(std::size_t n_spins);

/// Validates and normalizes a custom edge list. Throws ConfigError on
/// self-loops, duplicates, out-of-range indices or non-uniform degree.
LatticeSpec build_custom_lattice(std::size_t n_spins, std::span<const Edge> edges);

/// Parses "0 1 1 2 2 0" (whitespace-separated site pairs).
std::vector<Edge> parse_edge_list(std::string_view text);

struct DisorderParams {
  double b2 = 0.0;  // E|B_n|^2
  double j2 = 0.0;  // sum over the 9 components of E(J^{ab})^2
  double b0 = 0.0;  // known uniform z-field
  std::optional<double> correlation_time;  // none = static disorder
  std::uint64_t seed = 0;
  bool xy_symmetric = true;

  void validate() const;
};

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;  // [alpha][beta]

/// One disorder realization. The operator it represents is
///
///   H = sum_n B_n . sigma_n + sum_{edges (n,m)} 2 sigma_n . J_e . sigma_m
///       + b0 sum_n sigma^z_n
///
/// where the factor 2 accounts for both orderings (n,m) and (m,n) with
/// J_mn = J_nm^T.
struct HamiltonianSample {
  std::vector<Vec3> fields;
  std::vector<Mat3> couplings;  // one per lattice edge, same order
  double b0 = 0.0;
  bool xy_symmetric = false;

  static HamiltonianSample zero(const LatticeSpec& lattice);
};

HamiltonianSample sample_hamiltonian(const LatticeSpec& lattice, const DisorderParams& params,
                                     std::uint64_t realization_index);

struct Segment {
  HamiltonianSample hamiltonian;
  double duration = 0.0;
};

/// Piecewise-constant schedule with a fresh independent sample on each
/// interval of length tau. The last segment is shortened to end at t_max.
std::vector<Segment> sample_trajectory(const LatticeSpec& lattice, const DisorderParams& params,
                                       double t_max, std::uint64_t realization_index);

/// sqrt(b2 + 2 d j2).
double energy_uncertainty(const DisorderParams& params, const LatticeSpec& lattice);

/// Counter-based seed for (seed, realization, segment). Exposed so other
/// modules can derive independent streams the same way.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t realization, std::uint64_t segment);

}  // namespace qecc

#endif  // QECC_LATTICE_HPP
