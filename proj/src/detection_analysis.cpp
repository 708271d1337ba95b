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

#include "fockfringe/detection_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fockfringe {

namespace {

constexpr double kNormTolerance = 1e-9;
constexpr double kProbabilityFloor = 1e-15;

}  // namespace

std::map<DetectionPattern, double> coincidence_distribution(const PureState& state) {
  if (std::abs(state.norm_squared() - 1.0) > kNormTolerance) {
    throw std::domain_error("coincidence_distribution requires a normalized state");
  }
  std::map<DetectionPattern, double> distribution;
  for (const auto& [ket, amplitude] : state.terms()) {
    if (ket.total() == 0) continue;  // no photons, no coincidence event
    const double probability = std::norm(amplitude);
    if (probability < kProbabilityFloor) continue;
    distribution.emplace(ket, probability);
  }
  return distribution;
}

FringeTable fringe_scan(const PureState& input, int grid_size,
                        const std::function<Network(double)>& interferometer) {
  if (grid_size < 8) {
    throw std::invalid_argument("fringe grid must have at least 8 points");
  }
  FringeTable table;
  table.phi_grid.reserve(static_cast<std::size_t>(grid_size));
  std::vector<std::map<DetectionPattern, double>> per_point;
  per_point.reserve(static_cast<std::size_t>(grid_size));
  for (int i = 0; i < grid_size; ++i) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(i) /
                       static_cast<double>(grid_size);
    table.phi_grid.push_back(phi);
    per_point.push_back(
        coincidence_distribution(apply_network(input, interferometer(phi))));
  }
  for (const auto& distribution : per_point) {
    for (const auto& [pattern, probability] : distribution) {
      table.series.try_emplace(pattern,
                               std::vector<double>(static_cast<std::size_t>(grid_size), 0.0));
    }
  }
  for (std::size_t i = 0; i < per_point.size(); ++i) {
    for (const auto& [pattern, probability] : per_point[i]) {
      table.series[pattern][i] = probability;
    }
  }
  return table;
}

double visibility(std::span<const double> series) {
  if (series.empty()) {
    throw std::invalid_argument("visibility of an empty series");
  }
  double lo = series[0];
  double hi = series[0];
  for (double v : series) {
    if (v < 0.0) {
      throw std::domain_error("visibility requires non-negative values");
    }
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi == 0.0) return 0.0;
  return (hi - lo) / (hi + lo);
}

std::map<int, double> harmonic_spectrum(std::span<const double> series,
                                        double threshold) {
  const std::size_t size = series.size();
  if (size < 2) {
    throw std::invalid_argument("harmonic spectrum needs at least two samples");
  }
  std::map<int, double> spectrum;
  const int max_harmonic = static_cast<int>(size) / 2;
  for (int k = 0; k <= max_harmonic; ++k) {
    Complex bin{0.0, 0.0};
    for (std::size_t j = 0; j < size; ++j) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) *
                           static_cast<double>(j) / static_cast<double>(size);
      bin += series[j] * std::polar(1.0, angle);
    }
    double magnitude = std::abs(bin) / static_cast<double>(size);
    // Interior harmonics split between the +k and -k bins.
    if (k != 0 && 2 * k != static_cast<int>(size)) magnitude *= 2.0;
    if (magnitude > threshold) spectrum.emplace(k, magnitude);
  }
  return spectrum;
}

int debroglie_reduction_factor(std::span<const double> series, double threshold) {
  if (threshold <= 0.0) {
    throw std::invalid_argument("harmonic threshold must be positive");
  }
  const bool all_zero =
      std::all_of(series.begin(), series.end(), [](double v) { return v == 0.0; });
  if (series.empty() || all_zero) {
    throw std::domain_error("reduction factor of an all-zero series");
  }
  int factor = 0;
  for (const auto& [harmonic, magnitude] : harmonic_spectrum(series, threshold)) {
    factor = std::max(factor, harmonic);
  }
  return factor;
}

double classical_reference(const DetectionPattern& pattern, double phi) {
  if (pattern.mode_count() != 2) {
    throw std::invalid_argument("classical reference expects a two-channel pattern");
  }
  const double p_a = 0.5 * (1.0 + std::sin(phi));
  const double p_b = 0.5 * (1.0 - std::sin(phi));
  return std::pow(p_a, pattern.occupation(0)) * std::pow(p_b, pattern.occupation(1));
}

double multiport_resolution_probability(int n_photons, int n_ports) {
  if (n_photons < 1 || n_ports < 1) {
    throw std::invalid_argument("photon and port counts must be positive");
  }
  if (n_photons > n_ports) return 0.0;
  // Falling factorial over n_ports^n, assembled so that small cases divide
  // one exact integer product by another.
  double distinct = 1.0;
  double total = 1.0;
  for (int i = 0; i < n_photons; ++i) {
    distinct *= static_cast<double>(n_ports - i);
    total *= static_cast<double>(n_ports);
  }
  return distinct / total;
}

}  // namespace fockfringe
