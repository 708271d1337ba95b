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

#include <string>
#include <vector>

namespace fockfringe {

/// One closed-form comparison between the simulator and an analytically
/// known result. Informational entries document conventions and never gate.
struct VerificationCheck {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool informational = false;
  std::string detail;  // optional extra context
};

/// Runs the built-in closed-form comparison suite: interferometer fringes
/// for one, two and four photons, NOON fraction, spectrum purity, the Mandel
/// dip, oracle equivalence on random beam splitters, the kitten input,
/// squeezed-vacuum post-selection weights and the multiport detector model.
std::vector<VerificationCheck> run_verification();

/// True when every non-informational check passed.
bool all_passed(const std::vector<VerificationCheck>& checks);

}  // namespace fockfringe
