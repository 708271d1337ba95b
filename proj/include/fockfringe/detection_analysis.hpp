// Copyright 2026 fockfringe developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "fockfringe/fock_state.hpp"
#include "fockfringe/optical_network.hpp"

namespace fockfringe {

/// Photon counts per output channel; structurally a basis ket read as a
/// detector coincidence pattern (total >= 1, vacuum never counts as a click).
using DetectionPattern = BasisKet;

/// Per-pattern probability series over a uniform phase grid covering one
/// full period [0, 2pi).
struct FringeTable {
  std::vector<double> phi_grid;
  std::map<DetectionPattern, std::vector<double>> series;
};

/// Probability of every coincidence pattern in a normalized state (norm must
/// be within 1e-9 of one). The zero-photon pattern and probabilities below
/// 1e-15 are dropped.
std::map<DetectionPattern, double> coincidence_distribution(const PureState& state);

/// Sweeps phi over a uniform grid of `grid_size` points in [0, 2pi), sends
/// `input` through `interferometer(phi)` and records every coincidence
/// pattern. Patterns absent at some grid points get probability 0 there.
FringeTable fringe_scan(const PureState& input, int grid_size,
                        const std::function<Network(double)>& interferometer = mach_zehnder);

/// (max - min)/(max + min) of a non-negative series; 0 when max = min = 0.
double visibility(std::span<const double> series);

/// Cosine-series decomposition of a series sampled uniformly over exactly one
/// 2pi period: magnitude of the cos(k phi + delta) component per harmonic k,
/// with the mean at k = 0. Harmonics below `threshold` are omitted.
std::map<int, double> harmonic_spectrum(std::span<const double> series,
                                        double threshold = 1e-9);

/// Largest harmonic index above `threshold`; 0 for a constant series.
/// Throws std::domain_error on an all-zero series.
int debroglie_reduction_factor(std::span<const double> series,
                               double threshold = 1e-9);

/// Uncorrelated single-photon reference for a two-channel pattern:
/// P_A(phi)^nA * P_B(phi)^nB with P_A = (1 + sin phi)/2, P_B = (1 - sin phi)/2.
double classical_reference(const DetectionPattern& pattern, double phi);

/// Probability that n photons entering a balanced n_ports-way splitter all
/// leave through distinct ports, so n non-resolving detectors see n clicks:
/// n_ports!/((n_ports - n)! n_ports^n); zero when n exceeds the port count.
double multiport_resolution_probability(int n_photons, int n_ports);

}  // namespace fockfringe
