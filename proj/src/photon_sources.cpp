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

#include "fockfringe/photon_sources.hpp"

#include <cmath>
#include <stdexcept>

#include "math_detail.hpp"

namespace fockfringe {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void require_pair_amplitude(Complex alpha) {
  if (!(std::abs(alpha) < 1.0)) {
    throw std::domain_error("pair amplitude must satisfy |alpha| < 1");
  }
}

}  // namespace

PureState squeezed_vacuum(const SqueezedVacuumSpec& spec) {
  require_pair_amplitude(spec.alpha);
  if (spec.pair_cutoff < 0) {
    throw std::invalid_argument("pair cutoff must be non-negative");
  }
  // (alpha a^dag b^dag)^n / n! |0> = alpha^n |n,n>.
  std::map<BasisKet, Complex> terms;
  for (int n = 0; n <= spec.pair_cutoff; ++n) {
    terms.emplace(BasisKet{n, n}, detail::powi(spec.alpha, n));
  }
  return normalize(PureState::from_map(2, std::move(terms))).state;
}

double pair_detection_probability(Complex alpha, int n_pairs) {
  require_pair_amplitude(alpha);
  if (n_pairs < 0) {
    throw std::invalid_argument("pair count must be non-negative");
  }
  const double alpha_sq = std::norm(alpha);
  return (1.0 - alpha_sq) * detail::powi(alpha_sq, n_pairs);
}

PureState pair_fock(int n_pairs) {
  if (n_pairs < 0) {
    throw std::invalid_argument("pair count must be non-negative");
  }
  return PureState::from_terms(2, {{BasisKet{n_pairs, n_pairs}, Complex{1.0, 0.0}}});
}

PureState noon(int n_photons) {
  if (n_photons < 1) {
    throw std::invalid_argument("NOON photon number must be positive");
  }
  return PureState::from_terms(2, {{BasisKet{n_photons, 0}, Complex{kInvSqrt2, 0.0}},
                                   {BasisKet{0, n_photons}, Complex{kInvSqrt2, 0.0}}});
}

PureState kitten_input(int n) {
  if (n < 1) {
    throw std::invalid_argument("kitten order must be positive");
  }
  // (a^dag - b^dag)^(2n) + (a^dag + b^dag)^(2n)
  //   = sum_k [(-1)^k + 1] C(2n,k) a^dag^k b^dag^(2n-k);
  // odd k cancels, even k doubles. Acting on vacuum brings sqrt(k!(2n-k)!).
  const int two_n = 2 * n;
  std::map<BasisKet, Complex> terms;
  for (int k = 0; k <= two_n; k += 2) {
    const double coefficient = 2.0 * detail::binomial(two_n, k) *
                               detail::sqrt_factorial(k) *
                               detail::sqrt_factorial(two_n - k);
    terms.emplace(BasisKet{k, two_n - k}, Complex{coefficient, 0.0});
  }
  return normalize(PureState::from_map(2, std::move(terms))).state;
}

}  // namespace fockfringe
