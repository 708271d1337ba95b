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

#include "fockfringe/fock_state.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fockfringe {

namespace {

void require_mode_count(int mode_count) {
  if (mode_count < 1) {
    throw std::invalid_argument("mode count must be positive");
  }
}

void require_ket_length(const BasisKet& ket, int mode_count) {
  if (ket.mode_count() != mode_count) {
    throw std::invalid_argument("basis ket length " +
                                std::to_string(ket.mode_count()) +
                                " does not match mode count " +
                                std::to_string(mode_count));
  }
}

}  // namespace

BasisKet::BasisKet(std::vector<int> occupations) : occ_(std::move(occupations)) {
  for (int n : occ_) {
    if (n < 0) throw std::invalid_argument("negative occupation number");
  }
}

BasisKet::BasisKet(std::initializer_list<int> occupations)
    : BasisKet(std::vector<int>(occupations)) {}

int BasisKet::occupation(int mode) const {
  if (mode < 0 || mode >= mode_count()) {
    throw std::out_of_range("mode index out of range");
  }
  return occ_[static_cast<std::size_t>(mode)];
}

int BasisKet::total() const {
  return std::accumulate(occ_.begin(), occ_.end(), 0);
}

BasisKet BasisKet::with_raised(int mode) const {
  return with_occupation(mode, occupation(mode) + 1);
}

BasisKet BasisKet::with_occupation(int mode, int value) const {
  if (mode < 0 || mode >= mode_count()) {
    throw std::out_of_range("mode index out of range");
  }
  if (value < 0) throw std::invalid_argument("negative occupation number");
  BasisKet out = *this;
  out.occ_[static_cast<std::size_t>(mode)] = value;
  return out;
}

std::string BasisKet::to_string() const {
  std::ostringstream os;
  os << '|';
  for (std::size_t i = 0; i < occ_.size(); ++i) {
    if (i > 0) os << ',';
    os << occ_[i];
  }
  os << '>';
  return os.str();
}

PureState PureState::from_terms(
    int mode_count, std::span<const std::pair<BasisKet, Complex>> entries,
    double prune_epsilon) {
  require_mode_count(mode_count);
  std::map<BasisKet, Complex> terms;
  for (const auto& [ket, amplitude] : entries) {
    require_ket_length(ket, mode_count);
    auto [it, inserted] = terms.emplace(ket, amplitude);
    if (!inserted) {
      throw std::invalid_argument("duplicate basis ket " + ket.to_string());
    }
  }
  return from_map(mode_count, std::move(terms), prune_epsilon);
}

PureState PureState::from_terms(
    int mode_count, std::initializer_list<std::pair<BasisKet, Complex>> entries,
    double prune_epsilon) {
  return from_terms(mode_count,
                    std::span<const std::pair<BasisKet, Complex>>(
                        entries.begin(), entries.size()),
                    prune_epsilon);
}

PureState PureState::from_map(int mode_count, std::map<BasisKet, Complex> terms,
                              double prune_epsilon) {
  require_mode_count(mode_count);
  if (prune_epsilon < 0) {
    throw std::invalid_argument("prune epsilon must be non-negative");
  }
  PureState state(mode_count, prune_epsilon);
  for (auto it = terms.begin(); it != terms.end();) {
    require_ket_length(it->first, mode_count);
    if (std::abs(it->second) <= prune_epsilon) {
      it = terms.erase(it);
    } else {
      ++it;
    }
  }
  state.terms_ = std::move(terms);
  return state;
}

PureState PureState::vacuum(int mode_count, double prune_epsilon) {
  return from_terms(mode_count,
                    {{BasisKet(std::vector<int>(static_cast<std::size_t>(mode_count), 0)),
                      Complex{1.0, 0.0}}},
                    prune_epsilon);
}

Complex PureState::amplitude(const BasisKet& ket) const {
  require_ket_length(ket, mode_count_);
  auto it = terms_.find(ket);
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

double PureState::norm_squared() const {
  double sum = 0.0;
  for (const auto& [ket, amplitude] : terms_) sum += std::norm(amplitude);
  return sum;
}

PureState operator*(const Complex& scale, const PureState& state) {
  std::map<BasisKet, Complex> terms = state.terms();
  for (auto& [ket, amplitude] : terms) amplitude *= scale;
  return PureState::from_map(state.mode_count(), std::move(terms),
                             state.prune_epsilon());
}

PureState operator+(const PureState& lhs, const PureState& rhs) {
  if (lhs.mode_count() != rhs.mode_count()) {
    throw std::invalid_argument("mode count mismatch in state sum");
  }
  std::map<BasisKet, Complex> terms = lhs.terms();
  for (const auto& [ket, amplitude] : rhs.terms()) terms[ket] += amplitude;
  return PureState::from_map(lhs.mode_count(), std::move(terms),
                             lhs.prune_epsilon());
}

PureState apply_creation(const PureState& state, int mode) {
  if (mode < 0 || mode >= state.mode_count()) {
    throw std::out_of_range("mode index out of range");
  }
  std::map<BasisKet, Complex> terms;
  for (const auto& [ket, amplitude] : state.terms()) {
    const int n = ket.occupation(mode);
    terms.emplace(ket.with_raised(mode),
                  amplitude * std::sqrt(static_cast<double>(n) + 1.0));
  }
  return PureState::from_map(state.mode_count(), std::move(terms),
                             state.prune_epsilon());
}

Complex inner_product(const PureState& lhs, const PureState& rhs) {
  if (lhs.mode_count() != rhs.mode_count()) {
    throw std::invalid_argument("mode count mismatch in inner product");
  }
  Complex sum{0.0, 0.0};
  for (const auto& [ket, amplitude] : lhs.terms()) {
    auto it = rhs.terms().find(ket);
    if (it != rhs.terms().end()) sum += std::conj(amplitude) * it->second;
  }
  return sum;
}

NormalizationResult normalize(const PureState& state) {
  const double norm = std::sqrt(state.norm_squared());
  if (norm == 0.0) {
    throw std::domain_error("cannot normalize the zero state");
  }
  return {Complex{1.0 / norm, 0.0} * state, norm};
}

PostselectionResult postselect_total(const PureState& state, int n_total) {
  if (n_total < 0) {
    throw std::invalid_argument("total photon number must be non-negative");
  }
  std::map<BasisKet, Complex> sector;
  double probability = 0.0;
  for (const auto& [ket, amplitude] : state.terms()) {
    if (ket.total() != n_total) continue;
    probability += std::norm(amplitude);
    sector.emplace(ket, amplitude);
  }
  PureState component = PureState::from_map(state.mode_count(),
                                            std::move(sector),
                                            state.prune_epsilon());
  if (component.is_zero()) {
    return {std::move(component), 0.0};
  }
  return {normalize(component).state, probability};
}

double pattern_probability(const PureState& state, const BasisKet& ket) {
  return std::norm(state.amplitude(ket));
}

}  // namespace fockfringe
