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

#include <complex>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fockfringe {

using Complex = std::complex<double>;

/// Occupation-number label |n0,n1,...> over a fixed set of optical modes.
class BasisKet {
 public:
  BasisKet() = default;
  explicit BasisKet(std::vector<int> occupations);
  BasisKet(std::initializer_list<int> occupations);

  int mode_count() const { return static_cast<int>(occ_.size()); }
  int occupation(int mode) const;
  int total() const;
  const std::vector<int>& occupations() const { return occ_; }

  /// Copy of this ket with one extra photon in `mode`.
  BasisKet with_raised(int mode) const;
  /// Copy of this ket with `mode` set to `value`.
  BasisKet with_occupation(int mode, int value) const;

  /// e.g. "|2,0>"
  std::string to_string() const;

  auto operator<=>(const BasisKet&) const = default;

 private:
  std::vector<int> occ_;
};

inline constexpr double kDefaultPruneEpsilon = 1e-14;

/// Sparse pure state: complex amplitudes keyed by basis kets, all of one
/// mode count. Terms with |amplitude| <= prune_epsilon are never stored,
/// and iteration order is lexicographic in the occupation numbers.
/// Immutable after construction; every operation returns a new state.
class PureState {
 public:
  /// Builds a state from explicit (ket, amplitude) terms. Rejects kets of
  /// the wrong length, duplicate kets and negative occupations. The result
  /// is pruned but NOT normalized.
  static PureState from_terms(int mode_count,
                              std::span<const std::pair<BasisKet, Complex>> entries,
                              double prune_epsilon = kDefaultPruneEpsilon);
  static PureState from_terms(int mode_count,
                              std::initializer_list<std::pair<BasisKet, Complex>> entries,
                              double prune_epsilon = kDefaultPruneEpsilon);

  /// Builds a state from an already-keyed amplitude map (kets must have the
  /// right length; the map guarantees uniqueness). Prunes, does not normalize.
  static PureState from_map(int mode_count, std::map<BasisKet, Complex> terms,
                            double prune_epsilon = kDefaultPruneEpsilon);

  /// |0,0,...,0>
  static PureState vacuum(int mode_count,
                          double prune_epsilon = kDefaultPruneEpsilon);

  int mode_count() const { return mode_count_; }
  double prune_epsilon() const { return prune_epsilon_; }
  const std::map<BasisKet, Complex>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Amplitude of `ket`, zero if absent. Throws on mode-count mismatch.
  Complex amplitude(const BasisKet& ket) const;

  /// Sum of |amplitude|^2 over all stored terms.
  double norm_squared() const;

 private:
  PureState(int mode_count, double prune_epsilon)
      : mode_count_(mode_count), prune_epsilon_(prune_epsilon) {}

  int mode_count_ = 0;
  double prune_epsilon_ = kDefaultPruneEpsilon;
  std::map<BasisKet, Complex> terms_;
};

/// Scaled copy: z * |psi>.
PureState operator*(const Complex& scale, const PureState& state);

/// Termwise sum of two states on the same modes (not normalized).
PureState operator+(const PureState& lhs, const PureState& rhs);

/// Ladder action a_mode^dagger: |..,n,..> -> sqrt(n+1) |..,n+1,..> termwise.
PureState apply_creation(const PureState& state, int mode);

/// <lhs|rhs>; conjugate-linear in lhs, linear in rhs.
Complex inner_product(const PureState& lhs, const PureState& rhs);

struct NormalizationResult {
  PureState state;  // unit norm
  double norm;      // sqrt(<psi|psi>) of the input
};

/// Rescales to unit norm. Throws std::domain_error on the zero state.
NormalizationResult normalize(const PureState& state);

struct PostselectionResult {
  PureState state;     // renormalized component, or the zero state
  double probability;  // weight of the selected photon-number sector
};

/// Projects onto the total-photon-number sector `n_total` and renormalizes.
/// An empty sector yields the zero state with probability 0.
PostselectionResult postselect_total(const PureState& state, int n_total);

/// |<ket|state>|^2 for a normalized state.
double pattern_probability(const PureState& state, const BasisKet& ket);

}  // namespace fockfringe
