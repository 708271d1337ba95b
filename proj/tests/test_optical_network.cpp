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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "fockfringe/fock_state.hpp"
#include "fockfringe/optical_network.hpp"
#include "fockfringe/photon_sources.hpp"
#include "test_util.hpp"

using namespace fockfringe;
using fftest::max_amplitude_difference;
using fftest::random_state;

namespace {

PureState basis(std::initializer_list<int> occ) {
  return PureState::from_terms(static_cast<int>(occ.size()),
                               {{BasisKet(occ), Complex{1.0, 0.0}}});
}

Matrix2 random_unitary(std::mt19937& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> mix(0.0, 0.5 * std::numbers::pi);
  const Complex phase = std::polar(1.0, angle(rng));
  const double b = angle(rng);
  const double g = angle(rng);
  const double t = mix(rng);
  return Matrix2{{{phase * std::polar(std::cos(t), b), phase * std::polar(std::sin(t), g)},
                  {phase * std::polar(-std::sin(t), -g), phase * std::polar(std::cos(t), -b)}}};
}

}  // namespace

TEST_CASE("beam splitter construction validates its matrix") {
  const Matrix2 not_unitary{{{Complex{1.0, 0.0}, Complex{1.0, 0.0}},
                             {Complex{0.0, 0.0}, Complex{1.0, 0.0}}}};
  CHECK_THROWS_AS(BeamSplitter(0, 1, not_unitary), std::invalid_argument);
  CHECK_THROWS_AS(BeamSplitter(1, 1, BeamSplitter::balanced(0, 1).matrix()),
                  std::invalid_argument);
  CHECK_THROWS_AS(BeamSplitter(-1, 1, BeamSplitter::balanced(0, 1).matrix()),
                  std::out_of_range);
  CHECK(is_unitary(BeamSplitter::balanced(0, 1).matrix()));
}

TEST_CASE("balanced splitter on a single photon") {
  const PureState out = apply_beam_splitter(basis({1, 0}), BeamSplitter::balanced(0, 1));
  CHECK(std::abs(out.amplitude(BasisKet{1, 0}) - Complex{1.0 / std::sqrt(2.0), 0.0}) < 1e-15);
  CHECK(std::abs(out.amplitude(BasisKet{0, 1}) - Complex{0.0, 1.0 / std::sqrt(2.0)}) < 1e-15);
}

TEST_CASE("balanced splitter cancels the photon-pair split") {
  const PureState out = apply_beam_splitter(basis({1, 1}), BeamSplitter::balanced(0, 1));
  CHECK(std::abs(out.amplitude(BasisKet{2, 0}) - Complex{1.0 / std::sqrt(2.0), 0.0}) < 1e-15);
  CHECK(std::abs(out.amplitude(BasisKet{0, 2}) - Complex{1.0 / std::sqrt(2.0), 0.0}) < 1e-15);
  CHECK(std::abs(out.amplitude(BasisKet{1, 1})) < 1e-12);
}

TEST_CASE("balanced splitter on two pairs keeps only even splits") {
  const PureState out = apply_beam_splitter(basis({2, 2}), BeamSplitter::balanced(0, 1));
  CHECK(std::abs(out.amplitude(BasisKet{4, 0}) - Complex{std::sqrt(3.0 / 8.0), 0.0}) < 1e-14);
  CHECK(std::abs(out.amplitude(BasisKet{0, 4}) - Complex{std::sqrt(3.0 / 8.0), 0.0}) < 1e-14);
  CHECK(std::abs(out.amplitude(BasisKet{2, 2}) - Complex{0.5, 0.0}) < 1e-14);
  CHECK(std::abs(out.amplitude(BasisKet{3, 1})) < 1e-12);
  CHECK(std::abs(out.amplitude(BasisKet{1, 3})) < 1e-12);
  CHECK(out.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("phase shifter multiplies by exp(i n phi)") {
  const PureState vac = PureState::vacuum(2);
  CHECK(max_amplitude_difference(apply_phase(vac, PhaseShifter(0, 1.234)), vac) == 0.0);

  const PureState two = basis({2, 0});
  const PureState full_turn = apply_phase(two, PhaseShifter(0, std::numbers::pi));
  CHECK(std::abs(full_turn.amplitude(BasisKet{2, 0}) - Complex{1.0, 0.0}) < 1e-12);

  const PureState quarter = apply_phase(basis({1, 0}), PhaseShifter(0, std::numbers::pi / 2));
  CHECK(std::abs(quarter.amplitude(BasisKet{1, 0}) - Complex{0.0, 1.0}) < 1e-12);

  CHECK_THROWS_AS(apply_phase(vac, PhaseShifter(2, 0.1)), std::out_of_range);
  CHECK_THROWS_AS(PhaseShifter(0, std::nan("")), std::invalid_argument);
}

TEST_CASE("empty network is the identity") {
  std::mt19937 rng(5150u);
  const PureState psi = random_state(rng, 2);
  CHECK(max_amplitude_difference(apply_network(psi, Network(2)), psi) == 0.0);
}

TEST_CASE("network application order and mode checks") {
  Network net(2);
  net.add(BeamSplitter::balanced(0, 1));
  const PureState out = apply_network(basis({1, 1}), net);
  CHECK(std::abs(out.amplitude(BasisKet{2, 0}) - Complex{1.0 / std::sqrt(2.0), 0.0}) < 1e-15);

  CHECK_THROWS_AS(apply_network(PureState::vacuum(3), net), std::invalid_argument);
  CHECK_THROWS_AS(Network(2).add(BeamSplitter::balanced(0, 2)), std::out_of_range);
}

TEST_CASE("mach_zehnder reproduces the single-photon output amplitudes") {
  // Amplitudes (i + e^{i phi})/2 on the upper channel, (1 + i e^{i phi})/2
  // on the lower one.
  for (double phi : {0.0, 0.3, std::numbers::pi / 2, 2.0, 5.5}) {
    const PureState out = apply_network(basis({1, 0}), mach_zehnder(phi));
    const Complex expected_a = (Complex{0.0, 1.0} + std::polar(1.0, phi)) / 2.0;
    const Complex expected_b = (Complex{1.0, 0.0} + Complex{0.0, 1.0} * std::polar(1.0, phi)) / 2.0;
    CHECK(std::abs(out.amplitude(BasisKet{1, 0}) - expected_a) < 1e-14);
    CHECK(std::abs(out.amplitude(BasisKet{0, 1}) - expected_b) < 1e-14);
  }
}

TEST_CASE("mach_zehnder special points") {
  const PureState bright = apply_network(basis({1, 0}), mach_zehnder(std::numbers::pi / 2));
  CHECK(pattern_probability(bright, BasisKet{1, 0}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pattern_probability(bright, BasisKet{0, 1}) < 1e-12);

  const PureState pair = apply_network(basis({1, 1}), mach_zehnder(0.0));
  CHECK(pattern_probability(pair, BasisKet{1, 1}) < 1e-12);
}

TEST_CASE("mach_zehnder at zero phase is not the identity but conserves sectors") {
  std::mt19937 rng(8080u);
  const PureState psi = random_state(rng, 2);
  const PureState out = apply_network(psi, mach_zehnder(0.0));
  CHECK(max_amplitude_difference(apply_network(basis({1, 0}), mach_zehnder(0.0)),
                                 basis({1, 0})) > 0.1);
  for (int n = 0; n <= 6; ++n) {
    CHECK(postselect_total(out, n).probability ==
          doctest::Approx(postselect_total(psi, n).probability).epsilon(1e-10));
  }
}

TEST_CASE("oracle base cases") {
  const ComplexMatrix identity{{Complex{1.0, 0.0}, Complex{0.0, 0.0}},
                               {Complex{0.0, 0.0}, Complex{1.0, 0.0}}};
  CHECK(std::abs(transition_amplitude_oracle(identity, BasisKet{2, 1}, BasisKet{2, 1}) -
                 Complex{1.0, 0.0}) < 1e-15);
  CHECK(transition_amplitude_oracle(identity, BasisKet{2, 1}, BasisKet{1, 2}) ==
        Complex{0.0, 0.0});
  CHECK(transition_amplitude_oracle(identity, BasisKet{2, 1}, BasisKet{1, 1}) ==
        Complex{0.0, 0.0});

  const Matrix2 balanced = BeamSplitter::balanced(0, 1).matrix();
  const ComplexMatrix bs{{balanced[0][0], balanced[0][1]}, {balanced[1][0], balanced[1][1]}};
  CHECK(std::abs(transition_amplitude_oracle(bs, BasisKet{1, 1}, BasisKet{2, 0}) -
                 Complex{1.0 / std::sqrt(2.0), 0.0}) < 1e-15);
  CHECK(std::abs(transition_amplitude_oracle(bs, BasisKet{2, 2}, BasisKet{3, 1})) < 1e-15);

  const ComplexMatrix skewed{{Complex{1.0, 0.0}, Complex{1.0, 0.0}},
                             {Complex{0.0, 0.0}, Complex{1.0, 0.0}}};
  CHECK_THROWS_AS(transition_amplitude_oracle(skewed, BasisKet{1, 0}, BasisKet{1, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(transition_amplitude_oracle(bs, BasisKet{1, 0, 0}, BasisKet{1, 0, 0}),
                  std::invalid_argument);
}

TEST_CASE("random networks preserve the norm") {
  std::mt19937 rng(612u);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_int_distribution<int> element_count(1, 4);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int modes : {2, 3}) {
    std::uniform_int_distribution<int> pick_mode(0, modes - 1);
    for (int trial = 0; trial < 15; ++trial) {
      Network net(modes);
      const int elements = element_count(rng);
      for (int e = 0; e < elements; ++e) {
        if (coin(rng) == 0) {
          net.add(PhaseShifter(pick_mode(rng), angle(rng)));
        } else {
          int a = pick_mode(rng);
          int b = pick_mode(rng);
          if (a == b) b = (b + 1) % modes;
          net.add(BeamSplitter(a, b, random_unitary(rng)));
        }
      }
      const PureState psi = random_state(rng, modes);
      const PureState out = apply_network(psi, net);
      CHECK(std::abs(std::sqrt(out.norm_squared()) - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("collapsed networks agree with the oracle amplitude by amplitude") {
  std::mt19937 rng(271828u);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int trial = 0; trial < 10; ++trial) {
    Network net(2);
    net.add(BeamSplitter(0, 1, random_unitary(rng)));
    net.add(PhaseShifter(trial % 2, angle(rng)));
    net.add(BeamSplitter(0, 1, random_unitary(rng)));
    const ComplexMatrix u = overall_unitary(net);
    REQUIRE(is_unitary(u, 1e-12));
    for (int total = 0; total <= 6; ++total) {
      for (int n = 0; n <= total; ++n) {
        const BasisKet input{n, total - n};
        const PureState out = apply_network(basis({n, total - n}), net);
        for (int k = 0; k <= total; ++k) {
          const BasisKet output{k, total - k};
          CHECK(std::abs(out.amplitude(output) -
                         transition_amplitude_oracle(u, input, output)) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("three-mode elements embed correctly in the overall unitary") {
  std::mt19937 rng(5883u);
  Network net(3);
  net.add(BeamSplitter(0, 2, random_unitary(rng)));
  net.add(PhaseShifter(1, 0.77));
  net.add(BeamSplitter(1, 2, random_unitary(rng)));
  const ComplexMatrix u = overall_unitary(net);
  REQUIRE(is_unitary(u, 1e-12));
  for (int n0 = 0; n0 <= 2; ++n0) {
    for (int n1 = 0; n1 <= 2; ++n1) {
      for (int n2 = 0; n2 <= 2; ++n2) {
        const BasisKet input{n0, n1, n2};
        const PureState out =
            apply_network(PureState::from_terms(3, {{input, Complex{1.0, 0.0}}}), net);
        const int total = input.total();
        for (int k0 = 0; k0 <= total; ++k0) {
          for (int k1 = 0; k0 + k1 <= total; ++k1) {
            const BasisKet output{k0, k1, total - k0 - k1};
            CHECK(std::abs(out.amplitude(output) -
                           transition_amplitude_oracle(u, input, output)) < 1e-9);
          }
        }
      }
    }
  }
}

TEST_CASE("networks conserve the photon number") {
  std::mt19937 rng(100u);
  for (int trial = 0; trial < 10; ++trial) {
    const PureState psi = random_state(rng, 2);
    // Everything in one sector stays in that sector.
    for (int n = 0; n <= 6; ++n) {
      const auto sector = postselect_total(psi, n);
      if (sector.probability == 0.0) continue;
      const PureState out = apply_network(sector.state, mach_zehnder(1.1));
      for (const auto& [ket, amp] : out.terms()) CHECK(ket.total() == n);
    }
  }
}
