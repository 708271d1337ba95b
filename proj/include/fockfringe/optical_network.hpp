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

#include <array>
#include <variant>
#include <vector>

#include "fockfringe/fock_state.hpp"

namespace fockfringe {

/// Row-major 2x2 complex matrix.
using Matrix2 = std::array<std::array<Complex, 2>, 2>;

/// Square complex matrix for whole-network transfer matrices.
using ComplexMatrix = std::vector<std::vector<Complex>>;

/// True when M * M^dagger is the identity within `tolerance`.
bool is_unitary(const Matrix2& matrix, double tolerance = 1e-12);
bool is_unitary(const ComplexMatrix& matrix, double tolerance = 1e-12);

/// Passive two-mode element. The matrix maps the incoming pair of creation
/// operators to the outgoing pair: a_p^dag -> M00 c_p^dag + M01 c_q^dag and
/// a_q^dag -> M10 c_p^dag + M11 c_q^dag.
class BeamSplitter {
 public:
  /// Throws if the mode indices coincide, are negative, or the matrix is
  /// not unitary within 1e-12.
  BeamSplitter(int mode_a, int mode_b, const Matrix2& matrix);

  /// The balanced convention used throughout: rows (1, i)/sqrt(2) and
  /// (1, -i)/sqrt(2).
  static BeamSplitter balanced(int mode_a, int mode_b);

  int mode_a() const { return mode_a_; }
  int mode_b() const { return mode_b_; }
  const Matrix2& matrix() const { return matrix_; }

 private:
  int mode_a_;
  int mode_b_;
  Matrix2 matrix_;
};

/// Single-mode phase: a ket with n photons in `mode` gains exp(i*n*phi).
class PhaseShifter {
 public:
  PhaseShifter(int mode, double phi);  // throws on non-finite phi

  int mode() const { return mode_; }
  double phi() const { return phi_; }

 private:
  int mode_;
  double phi_;
};

using NetworkElement = std::variant<BeamSplitter, PhaseShifter>;

/// An ordered sequence of elements acting on a fixed number of modes.
class Network {
 public:
  explicit Network(int mode_count);

  Network& add(const BeamSplitter& bs);   // validates indices against mode count
  Network& add(const PhaseShifter& ps);

  int mode_count() const { return mode_count_; }
  const std::vector<NetworkElement>& elements() const { return elements_; }

 private:
  int mode_count_;
  std::vector<NetworkElement> elements_;
};

PureState apply_beam_splitter(const PureState& state, const BeamSplitter& bs);
PureState apply_phase(const PureState& state, const PhaseShifter& ps);

/// Applies the elements in listed order.
PureState apply_network(const PureState& state, const Network& net);

/// Balanced Mach-Zehnder on two modes: input splitter, phase phi on mode 0,
/// output mixer. Mode 0 is the upper rail at every stage.
Network mach_zehnder(double phi);

/// The phase-plus-output-mixer tail of the Mach-Zehnder, for states injected
/// directly inside the interferometer.
Network mach_zehnder_output_stage(double phi);

/// Collapses a network to its overall mode transfer matrix (the product of
/// the per-element matrices in application order).
ComplexMatrix overall_unitary(const Network& net);

/// <output|U|input> by brute-force distributive expansion of the transformed
/// creation-operator product, with no combinatorial shortcuts. Serves as the
/// independent oracle for the per-ket expansion used by apply_beam_splitter.
/// Kets with different photon totals have amplitude zero.
Complex transition_amplitude_oracle(const ComplexMatrix& unitary,
                                    const BasisKet& input,
                                    const BasisKet& output);

}  // namespace fockfringe
