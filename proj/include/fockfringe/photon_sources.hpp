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

#include "fockfringe/fock_state.hpp"

namespace fockfringe {

/// Two-mode squeezed vacuum parameters: pair amplitude alpha (|alpha| < 1)
/// and the largest number of photon pairs retained.
struct SqueezedVacuumSpec {
  Complex alpha;
  int pair_cutoff = 10;
};

/// Truncated two-mode squeezed vacuum, sum_n c_n |n,n> with c_n proportional
/// to alpha^n, renormalized to unit norm within the truncated subspace.
PureState squeezed_vacuum(const SqueezedVacuumSpec& spec);

/// Probability of post-selecting exactly n_pairs photon pairs from the
/// untruncated unit-norm squeezed vacuum: (1 - |alpha|^2) |alpha|^(2 n).
/// Note the non-normalizing convention |alpha|^(2n)/(1 - |alpha|^2) seen in
/// some treatments differs by the factor 1/(1 - |alpha|^2)^2; only the
/// unit-norm value is a probability.
double pair_detection_probability(Complex alpha, int n_pairs);

/// |n,n> on two modes.
PureState pair_fock(int n_pairs);

/// (|N,0> + |0,N>)/sqrt(2).
PureState noon(int n_photons);

/// Unit-norm expansion of [(a^dag - b^dag)^(2n) + (a^dag + b^dag)^(2n)]|0>,
/// built by exact binomial expansion. A balanced beam splitter maps it to a
/// 2n-photon NOON state (the branches pick up a relative sign (-1)^n).
PureState kitten_input(int n);

}  // namespace fockfringe
