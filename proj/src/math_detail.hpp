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
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace fockfringe::detail {

// n! fits in uint64 up to n = 20; that bounds the supported photon number
// per element application, well above the ~16-photon design ceiling.
inline constexpr int kMaxFactorial = 20;

inline constexpr std::array<std::uint64_t, kMaxFactorial + 1> kFactorials = [] {
  std::array<std::uint64_t, kMaxFactorial + 1> table{};
  table[0] = 1;
  for (int n = 1; n <= kMaxFactorial; ++n) {
    table[n] = table[n - 1] * static_cast<std::uint64_t>(n);
  }
  return table;
}();

inline double factorial(int n) {
  if (n < 0 || n > kMaxFactorial) {
    throw std::out_of_range("factorial: photon number out of supported range");
  }
  return static_cast<double>(kFactorials[static_cast<std::size_t>(n)]);
}

inline double sqrt_factorial(int n) { return std::sqrt(factorial(n)); }

// Exact C(n, k) for n <= 20.
inline double binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n || n > kMaxFactorial) {
    throw std::out_of_range("binomial: arguments out of supported range");
  }
  const std::uint64_t num = kFactorials[static_cast<std::size_t>(n)];
  const std::uint64_t den = kFactorials[static_cast<std::size_t>(k)] *
                            kFactorials[static_cast<std::size_t>(n - k)];
  return static_cast<double>(num / den);
}

// Integer power by repeated multiplication; powi(0, 0) = 1. std::pow on
// complex arguments routes through exp/log and misbehaves at zero base.
inline std::complex<double> powi(std::complex<double> base, int exponent) {
  std::complex<double> result{1.0, 0.0};
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

inline double powi(double base, int exponent) {
  double result = 1.0;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace fockfringe::detail
