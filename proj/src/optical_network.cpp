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

#include "fockfringe/optical_network.hpp"

#include <cmath>
#include <stdexcept>

#include "math_detail.hpp"

namespace fockfringe {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void require_mode_in_range(int mode, int mode_count, const char* what) {
  if (mode < 0 || mode >= mode_count) {
    throw std::out_of_range(std::string(what) + ": mode index " +
                            std::to_string(mode) + " out of range for " +
                            std::to_string(mode_count) + " modes");
  }
}

}  // namespace

bool is_unitary(const Matrix2& m, double tolerance) {
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      Complex dot{0.0, 0.0};
      for (int k = 0; k < 2; ++k) dot += m[r][k] * std::conj(m[c][k]);
      const Complex expected = (r == c) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      if (std::abs(dot - expected) > tolerance) return false;
    }
  }
  return true;
}

bool is_unitary(const ComplexMatrix& m, double tolerance) {
  const std::size_t dim = m.size();
  for (const auto& row : m) {
    if (row.size() != dim) return false;
  }
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      Complex dot{0.0, 0.0};
      for (std::size_t k = 0; k < dim; ++k) dot += m[r][k] * std::conj(m[c][k]);
      const Complex expected = (r == c) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      if (std::abs(dot - expected) > tolerance) return false;
    }
  }
  return true;
}

BeamSplitter::BeamSplitter(int mode_a, int mode_b, const Matrix2& matrix)
    : mode_a_(mode_a), mode_b_(mode_b), matrix_(matrix) {
  if (mode_a < 0 || mode_b < 0) {
    throw std::out_of_range("beam splitter mode indices must be non-negative");
  }
  if (mode_a == mode_b) {
    throw std::invalid_argument("beam splitter modes must be distinct");
  }
  if (!is_unitary(matrix)) {
    throw std::invalid_argument("beam splitter matrix is not unitary");
  }
}

BeamSplitter BeamSplitter::balanced(int mode_a, int mode_b) {
  return BeamSplitter(mode_a, mode_b,
                      Matrix2{{{Complex{kInvSqrt2, 0.0}, Complex{0.0, kInvSqrt2}},
                               {Complex{kInvSqrt2, 0.0}, Complex{0.0, -kInvSqrt2}}}});
}

PhaseShifter::PhaseShifter(int mode, double phi) : mode_(mode), phi_(phi) {
  if (mode < 0) {
    throw std::out_of_range("phase shifter mode index must be non-negative");
  }
  if (!std::isfinite(phi)) {
    throw std::invalid_argument("phase must be finite");
  }
}

Network::Network(int mode_count) : mode_count_(mode_count) {
  if (mode_count < 1) {
    throw std::invalid_argument("mode count must be positive");
  }
}

Network& Network::add(const BeamSplitter& bs) {
  require_mode_in_range(bs.mode_a(), mode_count_, "network");
  require_mode_in_range(bs.mode_b(), mode_count_, "network");
  elements_.emplace_back(bs);
  return *this;
}

Network& Network::add(const PhaseShifter& ps) {
  require_mode_in_range(ps.mode(), mode_count_, "network");
  elements_.emplace_back(ps);
  return *this;
}

PureState apply_beam_splitter(const PureState& state, const BeamSplitter& bs) {
  require_mode_in_range(bs.mode_a(), state.mode_count(), "apply_beam_splitter");
  require_mode_in_range(bs.mode_b(), state.mode_count(), "apply_beam_splitter");
  const int p = bs.mode_a();
  const int q = bs.mode_b();
  const Matrix2& m = bs.matrix();

  // Each incoming ket carries (a_p^dag)^n (a_q^dag)^m / sqrt(n! m!) on the
  // pair; substitute the transformed operators and expand both powers
  // binomially, restoring the sqrt(k!) ladder normalization at the end.
  std::map<BasisKet, Complex> out;
  for (const auto& [ket, amplitude] : state.terms()) {
    const int n = ket.occupation(p);
    const int mm = ket.occupation(q);
    const double inv_in_norm =
        1.0 / (detail::sqrt_factorial(n) * detail::sqrt_factorial(mm));
    for (int k = 0; k <= n; ++k) {
      const Complex ca = detail::binomial(n, k) * detail::powi(m[0][0], k) *
                         detail::powi(m[0][1], n - k);
      for (int j = 0; j <= mm; ++j) {
        const Complex cb = detail::binomial(mm, j) * detail::powi(m[1][0], j) *
                           detail::powi(m[1][1], mm - j);
        const int n_p = k + j;
        const int n_q = (n - k) + (mm - j);
        const double out_norm =
            detail::sqrt_factorial(n_p) * detail::sqrt_factorial(n_q);
        const BasisKet target =
            ket.with_occupation(p, n_p).with_occupation(q, n_q);
        out[target] += amplitude * inv_in_norm * ca * cb * out_norm;
      }
    }
  }
  return PureState::from_map(state.mode_count(), std::move(out),
                             state.prune_epsilon());
}

PureState apply_phase(const PureState& state, const PhaseShifter& ps) {
  require_mode_in_range(ps.mode(), state.mode_count(), "apply_phase");
  std::map<BasisKet, Complex> out;
  for (const auto& [ket, amplitude] : state.terms()) {
    const int n = ket.occupation(ps.mode());
    out.emplace(ket, amplitude * std::polar(1.0, static_cast<double>(n) * ps.phi()));
  }
  return PureState::from_map(state.mode_count(), std::move(out),
                             state.prune_epsilon());
}

PureState apply_network(const PureState& state, const Network& net) {
  if (state.mode_count() != net.mode_count()) {
    throw std::invalid_argument("network and state mode counts differ");
  }
  PureState current = state;
  for (const auto& element : net.elements()) {
    current = std::visit(
        [&current](const auto& e) {
          using E = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<E, BeamSplitter>) {
            return apply_beam_splitter(current, e);
          } else {
            return apply_phase(current, e);
          }
        },
        element);
  }
  return current;
}

Network mach_zehnder(double phi) {
  Network net(2);
  net.add(BeamSplitter::balanced(0, 1));
  net.add(PhaseShifter(0, phi));
  net.add(BeamSplitter::balanced(0, 1));
  return net;
}

Network mach_zehnder_output_stage(double phi) {
  Network net(2);
  net.add(PhaseShifter(0, phi));
  net.add(BeamSplitter::balanced(0, 1));
  return net;
}

ComplexMatrix overall_unitary(const Network& net) {
  const std::size_t dim = static_cast<std::size_t>(net.mode_count());
  ComplexMatrix u(dim, std::vector<Complex>(dim, Complex{0.0, 0.0}));
  for (std::size_t i = 0; i < dim; ++i) u[i][i] = Complex{1.0, 0.0};

  // Composing "old operators in terms of new" maps multiplies the matrices
  // in application order: overall = E1 * E2 * ... * En.
  for (const auto& element : net.elements()) {
    ComplexMatrix e(dim, std::vector<Complex>(dim, Complex{0.0, 0.0}));
    for (std::size_t i = 0; i < dim; ++i) e[i][i] = Complex{1.0, 0.0};
    std::visit(
        [&e](const auto& el) {
          using E = std::decay_t<decltype(el)>;
          if constexpr (std::is_same_v<E, BeamSplitter>) {
            const auto p = static_cast<std::size_t>(el.mode_a());
            const auto q = static_cast<std::size_t>(el.mode_b());
            e[p][p] = el.matrix()[0][0];
            e[p][q] = el.matrix()[0][1];
            e[q][p] = el.matrix()[1][0];
            e[q][q] = el.matrix()[1][1];
          } else {
            const auto p = static_cast<std::size_t>(el.mode());
            e[p][p] = std::polar(1.0, el.phi());
          }
        },
        element);
    ComplexMatrix next(dim, std::vector<Complex>(dim, Complex{0.0, 0.0}));
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        Complex sum{0.0, 0.0};
        for (std::size_t k = 0; k < dim; ++k) sum += u[r][k] * e[k][c];
        next[r][c] = sum;
      }
    }
    u = std::move(next);
  }
  return u;
}

Complex transition_amplitude_oracle(const ComplexMatrix& unitary,
                                    const BasisKet& input,
                                    const BasisKet& output) {
  const std::size_t dim = unitary.size();
  if (dim == 0 || input.mode_count() != static_cast<int>(dim) ||
      output.mode_count() != static_cast<int>(dim)) {
    throw std::invalid_argument("oracle: matrix and ket dimensions differ");
  }
  for (const auto& row : unitary) {
    if (row.size() != dim) {
      throw std::invalid_argument("oracle: matrix is not square");
    }
  }
  if (!is_unitary(unitary)) {
    throw std::invalid_argument("oracle: matrix is not unitary");
  }
  if (input.total() != output.total()) return Complex{0.0, 0.0};

  // One entry per photon, listing its input mode.
  std::vector<std::size_t> photon_modes;
  for (int mode = 0; mode < input.mode_count(); ++mode) {
    for (int i = 0; i < input.occupation(mode); ++i) {
      photon_modes.push_back(static_cast<std::size_t>(mode));
    }
  }
  const std::size_t n_photons = photon_modes.size();

  // Walk every assignment of photons to output modes (dim^N monomials of the
  // fully expanded product) and collect those matching the output ket.
  std::vector<std::size_t> assignment(n_photons, 0);
  std::vector<int> occupation(dim, 0);
  Complex coefficient{0.0, 0.0};
  while (true) {
    Complex product{1.0, 0.0};
    std::fill(occupation.begin(), occupation.end(), 0);
    for (std::size_t i = 0; i < n_photons; ++i) {
      product *= unitary[photon_modes[i]][assignment[i]];
      ++occupation[assignment[i]];
    }
    bool matches = true;
    for (std::size_t mode = 0; mode < dim; ++mode) {
      if (occupation[mode] != output.occupation(static_cast<int>(mode))) {
        matches = false;
        break;
      }
    }
    if (matches) coefficient += product;

    // Next assignment in base-dim counting; stop after the last one.
    std::size_t pos = 0;
    while (pos < n_photons && ++assignment[pos] == dim) {
      assignment[pos] = 0;
      ++pos;
    }
    if (pos == n_photons) break;
  }

  double norm_ratio = 1.0;
  for (int mode = 0; mode < output.mode_count(); ++mode) {
    norm_ratio *= detail::sqrt_factorial(output.occupation(mode));
  }
  for (int mode = 0; mode < input.mode_count(); ++mode) {
    norm_ratio /= detail::sqrt_factorial(input.occupation(mode));
  }
  return coefficient * norm_ratio;
}

}  // namespace fockfringe
