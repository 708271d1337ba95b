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
#include <random>
#include <stdexcept>

#include "fockfringe/fock_state.hpp"
#include "fockfringe/photon_sources.hpp"
#include "test_util.hpp"

using namespace fockfringe;
using fftest::max_amplitude_difference;
using fftest::monomial;
using fftest::random_state;

namespace {

// (u^dag^4/8 + u^dag^2 l^dag^2/4 + l^dag^4/8)|0>, assembled purely from
// ladder operators; several checks below compare against it.
PureState four_photon_inside() {
  return Complex{0.125, 0.0} * monomial(4, 0) +
         Complex{0.25, 0.0} * monomial(2, 2) +
         Complex{0.125, 0.0} * monomial(0, 4);
}

}  // namespace

TEST_CASE("from_terms builds the vacuum identity case") {
  const PureState vac = PureState::from_terms(2, {{BasisKet{0, 0}, Complex{1.0, 0.0}}});
  CHECK(vac.term_count() == 1);
  CHECK(vac.amplitude(BasisKet{0, 0}) == Complex{1.0, 0.0});
  CHECK(vac.mode_count() == 2);
}

TEST_CASE("from_terms builds the four-photon NOON state") {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const PureState state =
      PureState::from_terms(2, {{BasisKet{4, 0}, Complex{inv_sqrt2, 0.0}},
                                {BasisKet{0, 4}, Complex{inv_sqrt2, 0.0}}});
  CHECK(state.term_count() == 2);
  CHECK(state.norm_squared() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("from_terms prunes amplitudes at or below the threshold") {
  const PureState state =
      PureState::from_terms(2, {{BasisKet{1, 0}, Complex{1e-20, 0.0}}}, 1e-14);
  CHECK(state.is_zero());
  CHECK(state.term_count() == 0);
}

TEST_CASE("from_terms rejects malformed input") {
  CHECK_THROWS_AS(PureState::from_terms(2, {{BasisKet{1, 0, 0}, Complex{1.0, 0.0}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PureState::from_terms(2, {{BasisKet{1, 0}, Complex{1.0, 0.0}},
                                            {BasisKet{1, 0}, Complex{0.5, 0.0}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(BasisKet({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(PureState::from_terms(0, {}), std::invalid_argument);
}

TEST_CASE("apply_creation implements the ladder algebra") {
  const PureState vac = PureState::vacuum(2);
  const PureState one = apply_creation(vac, 0);
  CHECK(one.amplitude(BasisKet{1, 0}) == Complex{1.0, 0.0});

  const PureState two = apply_creation(one, 0);
  CHECK(std::abs(two.amplitude(BasisKet{2, 0}) - Complex{std::sqrt(2.0), 0.0}) < 1e-15);

  const PureState pair = apply_creation(apply_creation(vac, 0), 1);
  CHECK(pair.amplitude(BasisKet{1, 1}) == Complex{1.0, 0.0});

  CHECK_THROWS_AS(apply_creation(vac, 2), std::out_of_range);
  CHECK_THROWS_AS(apply_creation(vac, -1), std::out_of_range);
}

TEST_CASE("apply_creation is linear") {
  std::mt19937 rng(7123u);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const PureState psi = random_state(rng, 2);
    const PureState chi = random_state(rng, 2);
    const Complex a{coeff(rng), coeff(rng)};
    const Complex b{coeff(rng), coeff(rng)};
    const PureState lhs = apply_creation(a * psi + b * chi, 1);
    const PureState rhs = a * apply_creation(psi, 1) + b * apply_creation(chi, 1);
    CHECK(max_amplitude_difference(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("inner_product matches the hand-expanded four-photon state") {
  const PureState inside = four_photon_inside();

  const PureState bra40 = PureState::from_terms(2, {{BasisKet{4, 0}, Complex{1.0, 0.0}}});
  CHECK(inner_product(bra40, inside).real() ==
        doctest::Approx(std::sqrt(6.0) / 4.0).epsilon(1e-13));

  const PureState bra22 = PureState::from_terms(2, {{BasisKet{2, 2}, Complex{1.0, 0.0}}});
  CHECK(inner_product(bra22, inside).real() == doctest::Approx(0.5).epsilon(1e-13));

  const PureState vac = PureState::vacuum(2);
  CHECK(inner_product(vac, vac) == Complex{1.0, 0.0});

  CHECK_THROWS_AS(inner_product(vac, PureState::vacuum(3)), std::invalid_argument);
}

TEST_CASE("inner_product is conjugate-linear on the left") {
  std::mt19937 rng(99u);
  const PureState psi = random_state(rng, 2);
  const PureState chi = random_state(rng, 2);
  const Complex z{0.3, -0.7};
  CHECK(std::abs(inner_product(z * psi, chi) -
                 std::conj(z) * inner_product(psi, chi)) < 1e-14);
  CHECK(std::abs(inner_product(psi, z * chi) - z * inner_product(psi, chi)) < 1e-14);
}

TEST_CASE("norm_squared equals the term-wise inner product exactly") {
  std::mt19937 rng(4242u);
  for (int trial = 0; trial < 10; ++trial) {
    const PureState psi = random_state(rng, 3);
    CHECK(inner_product(psi, psi).real() == psi.norm_squared());
    CHECK(inner_product(psi, psi).imag() == 0.0);
  }
}

TEST_CASE("normalize rescales and reports the original norm") {
  const PureState sym = PureState::from_terms(2, {{BasisKet{2, 0}, Complex{1.0, 0.0}},
                                                  {BasisKet{0, 2}, Complex{1.0, 0.0}}});
  const auto [unit, norm] = normalize(sym);
  CHECK(norm == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(std::abs(unit.amplitude(BasisKet{2, 0}) - Complex{1.0 / std::sqrt(2.0), 0.0}) < 1e-15);

  const auto [single, two] = normalize(
      PureState::from_terms(2, {{BasisKet{1, 0}, Complex{2.0, 0.0}}}));
  CHECK(two == 2.0);
  CHECK(single.amplitude(BasisKet{1, 0}) == Complex{1.0, 0.0});

  CHECK_THROWS_AS(normalize(PureState::from_terms(2, {})), std::domain_error);
}

TEST_CASE("the four-photon inside state is already unit norm") {
  // Expanded via ladder operators only; must agree with the closed form.
  const PureState inside = four_photon_inside();
  CHECK(inside.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("postselect_total projects the squeezed vacuum onto pair sectors") {
  const PureState state = squeezed_vacuum({Complex{0.1, 0.0}, 6});

  const auto two = postselect_total(state, 2);
  CHECK(two.state.term_count() == 1);
  CHECK(std::abs(two.state.amplitude(BasisKet{1, 1}) - Complex{1.0, 0.0}) < 1e-14);

  const auto four = postselect_total(state, 4);
  CHECK(four.state.term_count() == 1);
  CHECK(std::abs(four.state.amplitude(BasisKet{2, 2}) - Complex{1.0, 0.0}) < 1e-14);

  const auto odd = postselect_total(noon(4), 3);
  CHECK(odd.probability == 0.0);
  CHECK(odd.state.is_zero());

  CHECK_THROWS_AS(postselect_total(state, -1), std::invalid_argument);
}

TEST_CASE("postselect_total probabilities sum to one") {
  std::mt19937 rng(31337u);
  for (int trial = 0; trial < 10; ++trial) {
    const PureState psi = random_state(rng, 2);
    double total = 0.0;
    for (int n = 0; n <= 6; ++n) total += postselect_total(psi, n).probability;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("pattern_probability reads squared amplitudes") {
  CHECK(pattern_probability(noon(4), BasisKet{4, 0}) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(pattern_probability(four_photon_inside(), BasisKet{4, 0}) ==
        doctest::Approx(3.0 / 8.0).epsilon(1e-13));
  CHECK(pattern_probability(noon(4), BasisKet{2, 1}) == 0.0);
  CHECK_THROWS_AS(pattern_probability(noon(4), BasisKet{1, 0, 0}), std::invalid_argument);
}

TEST_CASE("pattern probabilities over a full sector sum to one") {
  const PureState inside = four_photon_inside();
  double total = 0.0;
  for (int k = 0; k <= 4; ++k) {
    total += pattern_probability(inside, BasisKet{k, 4 - k});
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pruning removes bounded weight") {
  const double eps = 1e-8;
  std::vector<std::pair<BasisKet, Complex>> entries;
  double total_weight = 0.0;
  for (int k = 0; k <= 9; ++k) {
    const double magnitude = (k < 5) ? 0.5 : eps / (k - 3.0);  // five tiny terms
    entries.emplace_back(BasisKet{k, 0}, Complex{magnitude, 0.0});
    total_weight += magnitude * magnitude;
  }
  const PureState state = PureState::from_terms(2, entries, eps);
  const auto pruned = static_cast<double>(entries.size() - state.term_count());
  CHECK(pruned == 5.0);
  CHECK(total_weight - state.norm_squared() <= pruned * eps * eps);
}

TEST_CASE("term iteration is lexicographic in the occupations") {
  const PureState state = PureState::from_terms(
      2, {{BasisKet{2, 0}, Complex{0.5, 0.0}},
          {BasisKet{0, 2}, Complex{0.5, 0.0}},
          {BasisKet{1, 1}, Complex{0.5, 0.0}},
          {BasisKet{0, 1}, Complex{0.5, 0.0}}});
  std::vector<BasisKet> seen;
  for (const auto& [ket, amp] : state.terms()) seen.push_back(ket);
  CHECK(seen == std::vector<BasisKet>{BasisKet{0, 1}, BasisKet{0, 2},
                                      BasisKet{1, 1}, BasisKet{2, 0}});
}
