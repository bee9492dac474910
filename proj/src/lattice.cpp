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

#include "qecc/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "qecc/error.hpp"

namespace qecc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

HamiltonianSample draw(const LatticeSpec& lattice, const DisorderParams& params,
                       std::uint64_t stream_seed) {
  HamiltonianSample h = HamiltonianSample::zero(lattice);
  h.b0 = params.b0;
  h.xy_symmetric = params.xy_symmetric;

  std::mt19937_64 rng(stream_seed);
  std::normal_distribution<double> unit(0.0, 1.0);
  const double field_sd = std::sqrt(params.b2 / 3.0);
  const double coupling_sd = std::sqrt(params.j2 / 9.0);

  for (auto& b : h.fields) {
    for (auto& c : b) c = field_sd * unit(rng);
  }
  for (auto& j : h.couplings) {
    for (auto& row : j) {
      for (auto& c : row) c = coupling_sd * unit(rng);
    }
    if (params.xy_symmetric) {
      // (a+b)/sqrt(2) keeps the per-component variance at j2/9.
      const double s = (j[0][1] + j[1][0]) / std::sqrt(2.0);
      j[0][1] = s;
      j[1][0] = s;
    }
  }
  return h;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t realization, std::uint64_t segment) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ realization);
  h = splitmix64(h ^ (segment * 0xd1b54a32d192ed03ULL));
  return h;
}

LatticeSpec build_ring(std::size_t n_spins) {
  if (n_spins < 2) throw ConfigError("ring needs at least 2 spins");
  std::vector<Edge> edges;
  if (n_spins == 2) {
    edges.emplace_back(0, 1);
  } else {
    for (std::size_t i = 0; i < n_spins; ++i) edges.emplace_back(i, (i + 1) % n_spins);
  }
  return build_custom_lattice(n_spins, edges);
}

LatticeSpec build_custom_lattice(std::size_t n_spins, std::span<const Edge> edges) {
  if (n_spins < 2) throw ConfigError("lattice needs at least 2 spins");
  if (edges.empty()) throw ConfigError("lattice has no edges");
  LatticeSpec out;
  out.n_spins = n_spins;
  std::set<Edge> seen;
  std::vector<std::size_t> deg(n_spins, 0);
  for (auto [a, b] : edges) {
    if (a >= n_spins || b >= n_spins) {
      throw ConfigError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                        ") has a site index out of range");
    }
    if (a == b) throw ConfigError("self-loop on site " + std::to_string(a));
    Edge e{std::min(a, b), std::max(a, b)};
    if (!seen.insert(e).second) {
      throw ConfigError("duplicate edge (" + std::to_string(e.first) + "," +
                        std::to_string(e.second) + ")");
    }
    ++deg[a];
    ++deg[b];
    out.edges.push_back(e);
  }
  out.degree = deg[0];
  for (std::size_t n = 0; n < n_spins; ++n) {
    if (deg[n] != out.degree) {
      throw ConfigError("non-uniform degree: site " + std::to_string(n) + " has " +
                        std::to_string(deg[n]) + " neighbors, site 0 has " +
                        std::to_string(out.degree));
    }
  }
  return out;
}

std::vector<Edge> parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Edge> edges;
  long long a = 0;
  while (in >> a) {
    long long b = 0;
    if (!(in >> b)) throw ConfigError("edge list has an odd number of entries");
    if (a < 0 || b < 0) throw ConfigError("negative site index in edge list");
    edges.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  }
  if (!in.eof()) throw ConfigError("edge list contains a non-integer token");
  return edges;
}

void DisorderParams::validate() const {
  if (!(b2 >= 0.0) || !std::isfinite(b2)) throw ConfigError("disorder.b2 must be >= 0");
  if (!(j2 >= 0.0) || !std::isfinite(j2)) throw ConfigError("disorder.j2 must be >= 0");
  if (!(b0 >= 0.0) || !std::isfinite(b0)) throw ConfigError("disorder.b0 must be >= 0");
  if (correlation_time && !(*correlation_time > 0.0)) {
    throw ConfigError("disorder.tau must be > 0 when given");
  }
}

HamiltonianSample HamiltonianSample::zero(const LatticeSpec& lattice) {
  HamiltonianSample h;
  h.fields.assign(lattice.n_spins, Vec3{0.0, 0.0, 0.0});
  h.couplings.assign(lattice.edges.size(), Mat3{});
  return h;
}

HamiltonianSample sample_hamiltonian(const LatticeSpec& lattice, const DisorderParams& params,
                                     std::uint64_t realization_index) {
  params.validate();
  return draw(lattice, params, mix_seed(params.seed, realization_index, 0));
}

std::vector<Segment> sample_trajectory(const LatticeSpec& lattice, const DisorderParams& params,
                                       double t_max, std::uint64_t realization_index) {
  params.validate();
  if (!params.correlation_time) throw ConfigError("trajectory sampling needs disorder.tau");
  if (!(t_max > 0.0)) throw ConfigError("trajectory needs t_max > 0");
  const double tau = *params.correlation_time;
  // Guard against t_max = k*tau landing a hair above k after division.
  const auto count =
      static_cast<std::size_t>(std::ceil(t_max / tau * (1.0 - 1e-12)));
  std::vector<Segment> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    const double start = static_cast<double>(s) * tau;
    const double duration = std::min(tau, t_max - start);
    out.push_back({draw(lattice, params, mix_seed(params.seed, realization_index, s + 1)),
                   duration});
  }
  return out;
}

double energy_uncertainty(const DisorderParams& params, const LatticeSpec& lattice) {
  return std::sqrt(params.b2 + 2.0 * static_cast<double>(lattice.degree) * params.j2);
}

}  // namespace qecc
