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

#include <map>
#include <random>
#include <set>
#include <vector>

#include "fockfringe/fock_state.hpp"

namespace fftest {

using fockfringe::BasisKet;
using fockfringe::Complex;
using fockfringe::PureState;

// (a_0^dag)^n0 (a_1^dag)^n1 |0,0> = sqrt(n0! n1!) |n0,n1>, built one ladder
// step at a time.
inline PureState monomial(int n0, int n1) {
  PureState state = PureState::vacuum(2);
  for (int i = 0; i < n0; ++i) state = fockfringe::apply_creation(state, 0);
  for (int i = 0; i < n1; ++i) state = fockfringe::apply_creation(state, 1);
  return state;
}

// Largest |a_ket - b_ket| over the union of both states' kets.
inline double max_amplitude_difference(const PureState& a, const PureState& b) {
  std::set<BasisKet> kets;
  for (const auto& [ket, amp] : a.terms()) kets.insert(ket);
  for (const auto& [ket, amp] : b.terms()) kets.insert(ket);
  double worst = 0.0;
  for (const auto& ket : kets) {
    worst = std::max(worst, std::abs(a.amplitude(ket) - b.amplitude(ket)));
  }
  return worst;
}

// Normalized state with a handful of random terms (occupations <= 3).
inline PureState random_state(std::mt19937& rng, int modes) {
  std::uniform_int_distribution<int> occupation(0, 3);
  std::uniform_int_distribution<int> term_count(1, 5);
  std::uniform_real_distribution<double> amplitude(-1.0, 1.0);
  std::map<BasisKet, Complex> terms;
  const int count = term_count(rng);
  for (int t = 0; t < count; ++t) {
    std::vector<int> occ(static_cast<std::size_t>(modes));
    for (auto& v : occ) v = occupation(rng);
    terms[BasisKet(occ)] += Complex{amplitude(rng), amplitude(rng)};
  }
  return fockfringe::normalize(PureState::from_map(modes, std::move(terms))).state;
}

}  // namespace fftest
