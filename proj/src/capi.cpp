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

#include "fockfringe/fockfringe.h"

#include <cmath>
#include <cstring>
#include <iterator>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fockfringe/detection_analysis.hpp"
#include "fockfringe/fock_state.hpp"
#include "fockfringe/optical_network.hpp"
#include "fockfringe/photon_sources.hpp"
#include "fockfringe/verification.hpp"

namespace {

thread_local std::string g_last_error;

ff_status fail(ff_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs `body`, translating exceptions from the C++ core to status codes.
template <typename Fn>
ff_status guarded(Fn&& body) {
  try {
    return body();
  } catch (const std::out_of_range& e) {
    return fail(FF_ERROR_OUT_OF_RANGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(FF_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(FF_ERROR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(FF_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(FF_ERROR_INTERNAL, "unknown error");
  }
}

ff_status require(bool condition, const char* message) {
  return condition ? FF_OK : fail(FF_ERROR_INVALID_ARGUMENT, message);
}

fockfringe::BasisKet ket_from(const int* occupations, int mode_count) {
  return fockfringe::BasisKet(
      std::vector<int>(occupations, occupations + mode_count));
}

fockfringe::ComplexMatrix matrix_from(const double* values, int dim) {
  fockfringe::ComplexMatrix m(static_cast<std::size_t>(dim),
                              std::vector<fockfringe::Complex>(
                                  static_cast<std::size_t>(dim)));
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      const int base = 2 * (r * dim + c);
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          fockfringe::Complex{values[base], values[base + 1]};
    }
  }
  return m;
}

}  // namespace

struct ff_state {
  fockfringe::PureState impl;
};

struct ff_network {
  fockfringe::Network impl;
};

struct ff_fringe_table {
  fockfringe::FringeTable impl;
  // Flat view for index-based access; pattern order is lexicographic.
  std::vector<const fockfringe::DetectionPattern*> patterns;
  std::vector<const std::vector<double>*> series;

  explicit ff_fringe_table(fockfringe::FringeTable table)
      : impl(std::move(table)) {
    patterns.reserve(impl.series.size());
    series.reserve(impl.series.size());
    for (const auto& [pattern, values] : impl.series) {
      patterns.push_back(&pattern);
      series.push_back(&values);
    }
  }
};

struct ff_verify_report {
  std::vector<fockfringe::VerificationCheck> checks;
};

extern "C" {

const char* ff_version(void) { return "0.1.0"; }

const char* ff_last_error(void) { return g_last_error.c_str(); }

/* ---- states ------------------------------------------------------------ */

ff_status ff_state_from_terms(int mode_count, size_t term_count,
                              const int* occupations, const double* amplitudes,
                              ff_state** out) {
  if (ff_status s = require(out && (term_count == 0 || (occupations && amplitudes)),
                            "null pointer argument"); s != FF_OK) {
    return s;
  }
  if (mode_count < 1) {
    return fail(FF_ERROR_INVALID_ARGUMENT, "mode count must be positive");
  }
  return guarded([&] {
    std::vector<std::pair<fockfringe::BasisKet, fockfringe::Complex>> entries;
    entries.reserve(term_count);
    for (size_t t = 0; t < term_count; ++t) {
      entries.emplace_back(
          ket_from(occupations + t * static_cast<size_t>(mode_count), mode_count),
          fockfringe::Complex{amplitudes[2 * t], amplitudes[2 * t + 1]});
    }
    *out = new ff_state{fockfringe::PureState::from_terms(mode_count, entries)};
    return FF_OK;
  });
}

void ff_state_free(ff_state* state) { delete state; }

ff_status ff_state_clone(const ff_state* state, ff_state** out) {
  if (ff_status s = require(state && out, "null pointer argument"); s != FF_OK) {
    return s;
  }
  return guarded([&] {
    *out = new ff_state{state->impl};
    return FF_OK;
  });
}

ff_status ff_state_mode_count(const ff_state* state, int* out) {
  if (ff_status s = require(state && out, "null pointer argument"); s != FF_OK) {
    return s;
  }
  *out = state->impl.mode_count();
  return FF_OK;
}

ff_status ff_state_term_count(const ff_state* state, size_t* out) {
  if (ff_status s = require(state && out, "null pointer argument"); s != FF_OK) {
    return s;
  }
  *out = state->impl.term_count();
  return FF_OK;
}

ff_status ff_state_term(const ff_state* state, size_t index, int* occupations,
                        double* amplitude) {
  if (ff_status s = require(state && occupations && amplitude,
                            "null pointer argument"); s != FF_OK) {
    return s;
  }
  if (index >= state->impl.term_count()) {
    return fail(FF_ERROR_OUT_OF_RANGE, "term index out of range");
  }
  auto it = state->impl.terms().begin();
  std::advance(it, static_cast<std::ptrdiff_t>(index));
  const auto& occ = it->first.occupations();
  std::memcpy(occupations, occ.data(), occ.size() * sizeof(int));
  amplitude[0] = it->second.real();
  amplitude[1] = it->second.imag();
  return FF_OK;
}

ff_status ff_state_norm(const ff_state* state, double* out) {
  if (ff_status s = require(state && out, "null pointer argument"); s != FF_OK) {
    return s;
  }
  *out = std::sqrt(state->impl.norm_squared());
  return FF_OK;
}

ff_status ff_state_apply_creation(const ff_state* state, int mode,
                                  ff_state** out) {
  if (ff_status s = require(state && out, "null pointer argument"); s != FF_OK) {
    return s;
  }
  return guarded([&] {
    *out = new ff_state{fockfringe::apply_creation(state->impl, mode)};
    return FF_OK;
  });
}

ff_status ff_state_inner_product(const ff_state* lhs, const ff_state* rhs,
                                 double* re, double* im) {
  if (ff_status s = require(lhs && rhs && re && im, "null pointer argument");
      s != FF_OK) {
    return s;
  }
  return guarded([&] {
    const fockfringe::Complex value =
        fockfringe::inner_product(lhs->impl, rhs->impl);
    *re = value.real();
    *im = value.imag();
    return FF_OK;
  });
}

ff_status ff_state_normalize(const ff_state* state, ff_state** out,
                             double* norm) {
  if (ff_status s = require(state && out && norm, "null pointer argument");
      s != FF_OK) {
    return s;
  }
  return guarded([&] {
    auto result = fockfringe::normalize(state->impl);
    *out = new ff_state{std::move(result.state)};
    *norm = result.norm;
    return FF_OK;
  });
}

ff_status ff_state_postselect_total(const ff_state* state, int total,
                                    ff_state** out, double* probability) {
  if (ff_status s = require(state && out && probability, "null pointer argument");
      s != FF_OK) {
    return s;
  }
  return guarded([&] {
    auto result = fockfringe::postselect_total(state->impl, total);
    *out = new ff_state{std::move(result.state)};
    *probability = result.probability;
    return FF_OK;
  });
}

ff_status ff_state_pattern_probability(const ff_state* state, const int* ket,
                                       double* out) {
  if (ff_status s = require(state && ket && out, "null pointer argument");
      s != FF_OK) {
    return s;
  }
  return guarded([&] {
    *out = fockfringe::pattern_probability(
        state->impl, ket_from(ket, state->impl.mode_count()));
    return FF_OK;
  });
}

/* ---- photon sources ---------------------------------------------------- */

ff_status ff_source_pair_fock(int n_pairs, ff_state** out) {
  if (ff_status s = require(out != nullptr, "null pointer argument"); s != FF_OK) {
    return s;
  }
  return guarded([&] {
    *out = new ff_state{fockfringe::pair_fock(n_pairs)};
    return FF_OK;
  });
}

ff_status ff_source_noon(int n_photons, ff_state** out) {
  if (ff_status s = require(out != nullptr, "null pointer argument"); s != FF_OK) {
    return s;
  }
  return guarded([&] {
    *out = new ff_state{fockfringe::noon(n_photons)};
    return FF_OK;
  });
}

ff_status ff_source_kitten(int n, ff_state** out) {
  if (ff_status s = require(out != nullptr, "null pointer argument"); s != FF_OK) {
    return s;
  }
  return guarded([&] {
    *out = new ff_state{fockfringe::kitten_input(n)};
    return FF_OK;
  });
}

ff_status ff_source_squeezed_vacuum(double alpha_re, double alpha_im,
                                    int pair_cutoff, ff_state** out) {
  if (ff_status s = require(out != nullptr, "null pointer argument"); s != FF_OK) {
    return s;
  }
  return guarded([&] {
    *out = new ff_state{fockfringe::squeezed_vacuum(
        {fockfringe::Complex{alpha_re, alpha_im}, pair_cutoff})};
    return FF_OK;
  });
}

ff_status ff_pair_detection_probability(double alpha_re, double alpha_im,
                                        int n_pairs, double* out) {
  if (ff_status s = require(out != nullptr, "null pointer argument"); s != FF_OK) {
    return s;
  }
  return guarded([&] {
    *out = fockfringe::pair_detection_probability(
        fockfringe::Complex{alpha_re, alpha_im}, n_pairs);
    return FF_OK;
  });
}

/* ---- optical networks -------------------------------------------------- */

ff_status ff_network_new(int mode_count, ff_network** out) {
  if (ff_status s = require(out != nullptr, "null pointer argument"); s != FF_OK) {
    return s;
  }
  return guarded([&] {
    *out = new ff_network{fockfringe::Network(mode_count)};
    return FF_OK;
  });
}

void ff_network_free(ff_network* net) { delete net; }

ff_status ff_network_add_beam_splitter(ff_network* net, int mode_a, int mode_b,
                                       const double* matrix) {
  if (ff_status s = require(net && matrix, "null pointer argument"); s != FF_OK) {
    return s;
  }
  return guarded([&] {
    fockfringe::Matrix2 m;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        const int base = 2 * (2 * r + c);
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            fockfringe::Complex{matrix[base], matrix[base + 1]};
      }
    }
    net->impl.add(fockfringe::BeamSplitter(mode_a, mode_b, m));
    return FF_OK;
  });
}

ff_status ff_network_add_balanced_beam_splitter(ff_network* net, int mode_a,
                                                int mode_b) {
  if (ff_status s = require(net != nullptr, "null pointer argument"); s != FF_OK) {
    return s;
  }
  return guarded([&] {
    net->impl.add(fockfringe::BeamSplitter::balanced(mode_a, mode_b));
    return FF_OK;
  });
}

ff_status ff_network_add_phase(ff_network* net, int mode, double phi) {
  if (ff_status s = require(net != nullptr, "null pointer argument"); s != FF_OK) {
    return s;
  }
  return guarded([&] {
    net->impl.add(fockfringe::PhaseShifter(mode, phi));
    return FF_OK;
  });
}

ff_status ff_network_mach_zehnder(double phi, ff_network** out) {
  if (ff_status s = require(out != nullptr, "null pointer argument"); s != FF_OK) {
    return s;
  }
  return guarded([&] {
    *out = new ff_network{fockfringe::mach_zehnder(phi)};
    return FF_OK;
  });
}

ff_status ff_network_output_stage(double phi, ff_network** out) {
  if (ff_status s = require(out != nullptr, "null pointer argument"); s != FF_OK) {
    return s;
  }
  return guarded([&] {
    *out = new ff_network{fockfringe::mach_zehnder_output_stage(phi)};
    return FF_OK;
  });
}

ff_status ff_network_apply(const ff_network* net, const ff_state* state,
                           ff_state** out) {
  if (ff_status s = require(net && state && out, "null pointer argument");
      s != FF_OK) {
    return s;
  }
  return guarded([&] {
    *out = new ff_state{fockfringe::apply_network(state->impl, net->impl)};
    return FF_OK;
  });
}

ff_status ff_network_overall_unitary(const ff_network* net, double* matrix) {
  if (ff_status s = require(net && matrix, "null pointer argument"); s != FF_OK) {
    return s;
  }
  return guarded([&] {
    const fockfringe::ComplexMatrix u = fockfringe::overall_unitary(net->impl);
    const int dim = net->impl.mode_count();
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) {
        const int base = 2 * (r * dim + c);
        matrix[base] = u[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].real();
        matrix[base + 1] =
            u[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].imag();
      }
    }
    return FF_OK;
  });
}

ff_status ff_transition_amplitude_oracle(int mode_count, const double* unitary,
                                         const int* input_ket,
                                         const int* output_ket, double* re,
                                         double* im) {
  if (ff_status s = require(unitary && input_ket && output_ket && re && im,
                            "null pointer argument"); s != FF_OK) {
    return s;
  }
  if (mode_count < 1) {
    return fail(FF_ERROR_INVALID_ARGUMENT, "mode count must be positive");
  }
  return guarded([&] {
    const fockfringe::Complex amplitude = fockfringe::transition_amplitude_oracle(
        matrix_from(unitary, mode_count), ket_from(input_ket, mode_count),
        ket_from(output_ket, mode_count));
    *re = amplitude.real();
    *im = amplitude.imag();
    return FF_OK;
  });
}

/* ---- fringe scans and analysis ----------------------------------------- */

ff_status ff_fringe_scan(const ff_state* input, int grid_size, ff_stage stage,
                         ff_fringe_table** out) {
  if (ff_status s = require(input && out, "null pointer argument"); s != FF_OK) {
    return s;
  }
  if (stage != FF_STAGE_FULL_MZ && stage != FF_STAGE_OUTPUT_ONLY) {
    return fail(FF_ERROR_INVALID_ARGUMENT, "unknown interferometer stage");
  }
  return guarded([&] {
    const auto factory = stage == FF_STAGE_FULL_MZ
                             ? fockfringe::mach_zehnder
                             : fockfringe::mach_zehnder_output_stage;
    *out = new ff_fringe_table(
        fockfringe::fringe_scan(input->impl, grid_size, factory));
    return FF_OK;
  });
}

void ff_fringe_free(ff_fringe_table* table) { delete table; }

ff_status ff_fringe_grid_size(const ff_fringe_table* table, int* out) {
  if (ff_status s = require(table && out, "null pointer argument"); s != FF_OK) {
    return s;
  }
  *out = static_cast<int>(table->impl.phi_grid.size());
  return FF_OK;
}

ff_status ff_fringe_phi(const ff_fringe_table* table, int index, double* out) {
  if (ff_status s = require(table && out, "null pointer argument"); s != FF_OK) {
    return s;
  }
  if (index < 0 || static_cast<std::size_t>(index) >= table->impl.phi_grid.size()) {
    return fail(FF_ERROR_OUT_OF_RANGE, "grid index out of range");
  }
  *out = table->impl.phi_grid[static_cast<std::size_t>(index)];
  return FF_OK;
}

ff_status ff_fringe_pattern_count(const ff_fringe_table* table, size_t* out) {
  if (ff_status s = require(table && out, "null pointer argument"); s != FF_OK) {
    return s;
  }
  *out = table->patterns.size();
  return FF_OK;
}

ff_status ff_fringe_pattern_length(const ff_fringe_table* table, int* out) {
  if (ff_status s = require(table && out, "null pointer argument"); s != FF_OK) {
    return s;
  }
  *out = table->patterns.empty() ? 0 : table->patterns.front()->mode_count();
  return FF_OK;
}

ff_status ff_fringe_pattern(const ff_fringe_table* table, size_t index,
                            int* counts) {
  if (ff_status s = require(table && counts, "null pointer argument"); s != FF_OK) {
    return s;
  }
  if (index >= table->patterns.size()) {
    return fail(FF_ERROR_OUT_OF_RANGE, "pattern index out of range");
  }
  const auto& occ = table->patterns[index]->occupations();
  std::memcpy(counts, occ.data(), occ.size() * sizeof(int));
  return FF_OK;
}

ff_status ff_fringe_series(const ff_fringe_table* table, size_t index,
                           double* out) {
  if (ff_status s = require(table && out, "null pointer argument"); s != FF_OK) {
    return s;
  }
  if (index >= table->series.size()) {
    return fail(FF_ERROR_OUT_OF_RANGE, "pattern index out of range");
  }
  const auto& values = *table->series[index];
  std::memcpy(out, values.data(), values.size() * sizeof(double));
  return FF_OK;
}

ff_status ff_visibility(const double* series, int length, double* out) {
  if (ff_status s = require(series && out, "null pointer argument"); s != FF_OK) {
    return s;
  }
  if (length < 1) return fail(FF_ERROR_INVALID_ARGUMENT, "empty series");
  return guarded([&] {
    *out = fockfringe::visibility(
        std::span<const double>(series, static_cast<std::size_t>(length)));
    return FF_OK;
  });
}

ff_status ff_harmonic_spectrum(const double* series, int length,
                               double threshold, int capacity, int* harmonics,
                               double* magnitudes, int* count) {
  if (ff_status s = require(series && harmonics && magnitudes && count,
                            "null pointer argument"); s != FF_OK) {
    return s;
  }
  if (length < 2) return fail(FF_ERROR_INVALID_ARGUMENT, "series too short");
  return guarded([&] {
    const auto spectrum = fockfringe::harmonic_spectrum(
        std::span<const double>(series, static_cast<std::size_t>(length)),
        threshold);
    *count = static_cast<int>(spectrum.size());
    int written = 0;
    for (const auto& [harmonic, magnitude] : spectrum) {
      if (written >= capacity) {
        return fail(FF_ERROR_OUT_OF_RANGE, "spectrum capacity too small");
      }
      harmonics[written] = harmonic;
      magnitudes[written] = magnitude;
      ++written;
    }
    return FF_OK;
  });
}

ff_status ff_debroglie_reduction_factor(const double* series, int length,
                                        double threshold, int* out) {
  if (ff_status s = require(series && out, "null pointer argument"); s != FF_OK) {
    return s;
  }
  if (length < 2) return fail(FF_ERROR_INVALID_ARGUMENT, "series too short");
  return guarded([&] {
    *out = fockfringe::debroglie_reduction_factor(
        std::span<const double>(series, static_cast<std::size_t>(length)),
        threshold);
    return FF_OK;
  });
}

ff_status ff_classical_reference(const int* pattern, double phi, double* out) {
  if (ff_status s = require(pattern && out, "null pointer argument"); s != FF_OK) {
    return s;
  }
  return guarded([&] {
    *out = fockfringe::classical_reference(ket_from(pattern, 2), phi);
    return FF_OK;
  });
}

ff_status ff_multiport_resolution_probability(int n_photons, int n_ports,
                                              double* out) {
  if (ff_status s = require(out != nullptr, "null pointer argument"); s != FF_OK) {
    return s;
  }
  return guarded([&] {
    *out = fockfringe::multiport_resolution_probability(n_photons, n_ports);
    return FF_OK;
  });
}

/* ---- built-in verification --------------------------------------------- */

ff_status ff_verify_run(ff_verify_report** out) {
  if (ff_status s = require(out != nullptr, "null pointer argument"); s != FF_OK) {
    return s;
  }
  return guarded([&] {
    *out = new ff_verify_report{fockfringe::run_verification()};
    return FF_OK;
  });
}

void ff_verify_report_free(ff_verify_report* report) { delete report; }

ff_status ff_verify_report_count(const ff_verify_report* report, size_t* out) {
  if (ff_status s = require(report && out, "null pointer argument"); s != FF_OK) {
    return s;
  }
  *out = report->checks.size();
  return FF_OK;
}

ff_status ff_verify_report_entry(const ff_verify_report* report, size_t index,
                                 const char** name, double* max_deviation,
                                 double* tolerance, int* passed,
                                 int* informational) {
  if (ff_status s = require(report && name && max_deviation && tolerance &&
                                passed && informational,
                            "null pointer argument"); s != FF_OK) {
    return s;
  }
  if (index >= report->checks.size()) {
    return fail(FF_ERROR_OUT_OF_RANGE, "check index out of range");
  }
  const auto& check = report->checks[index];
  *name = check.name.c_str();
  *max_deviation = check.max_deviation;
  *tolerance = check.tolerance;
  *passed = check.passed ? 1 : 0;
  *informational = check.informational ? 1 : 0;
  return FF_OK;
}

ff_status ff_verify_report_detail(const ff_verify_report* report, size_t index,
                                  const char** detail) {
  if (ff_status s = require(report && detail, "null pointer argument");
      s != FF_OK) {
    return s;
  }
  if (index >= report->checks.size()) {
    return fail(FF_ERROR_OUT_OF_RANGE, "check index out of range");
  }
  *detail = report->checks[index].detail.c_str();
  return FF_OK;
}

ff_status ff_verify_report_all_passed(const ff_verify_report* report, int* out) {
  if (ff_status s = require(report && out, "null pointer argument"); s != FF_OK) {
    return s;
  }
  *out = fockfringe::all_passed(report->checks) ? 1 : 0;
  return FF_OK;
}

} /* extern "C" */
