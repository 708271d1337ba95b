/*
 * Copyright 2026 fockfringe developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the fockfringe simulator: sparse Fock states on a small
 * number of optical modes, linear-optical networks (beam splitters, phase
 * shifters, Mach-Zehnder presets), photon sources, coincidence fringe scans
 * and fringe analysis.
 *
 * Every function returns an ff_status; on failure ff_last_error() holds a
 * human-readable message for the calling thread. Objects returned through
 * ff_*_new/ff_*_scan/ff_source_* out-parameters are owned by the caller and
 * released with the matching ff_*_free.
 *
 * Complex scalars cross the boundary as (re, im) double pairs; complex
 * arrays and matrices are interleaved re,im in row-major order.
 */

#ifndef FOCKFRINGE_H
#define FOCKFRINGE_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(FOCKFRINGE_BUILD)
#    define FF_API __declspec(dllexport)
#  else
#    define FF_API __declspec(dllimport)
#  endif
#else
#  define FF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ff_status {
  FF_OK = 0,
  FF_ERROR_INVALID_ARGUMENT = 1, /* bad construction data, mismatched sizes */
  FF_ERROR_OUT_OF_RANGE = 2,     /* mode or term index out of range */
  FF_ERROR_DOMAIN = 3,           /* zero-state normalization, |alpha| >= 1, ... */
  FF_ERROR_INTERNAL = 4
} ff_status;

/* Opaque handles. */
typedef struct ff_state ff_state;               /* sparse pure state */
typedef struct ff_network ff_network;           /* ordered element list */
typedef struct ff_fringe_table ff_fringe_table; /* phi grid + pattern series */
typedef struct ff_verify_report ff_verify_report;

/* Which interferometer a fringe scan sweeps. */
typedef enum ff_stage {
  FF_STAGE_FULL_MZ = 0,    /* input splitter, phase, output mixer */
  FF_STAGE_OUTPUT_ONLY = 1 /* phase + output mixer, for states prepared inside */
} ff_stage;

FF_API const char* ff_version(void);

/* Message for the most recent failure on this thread; never NULL. */
FF_API const char* ff_last_error(void);

/* ---- states ------------------------------------------------------------ */

/*
 * Builds a state from term_count explicit terms. occupations holds
 * term_count * mode_count non-negative photon numbers; amplitudes holds
 * term_count re,im pairs. Duplicate kets are rejected. The state is pruned
 * (|amplitude| <= 1e-14 dropped) but not normalized.
 */
FF_API ff_status ff_state_from_terms(int mode_count, size_t term_count,
                                     const int* occupations,
                                     const double* amplitudes, ff_state** out);
FF_API void ff_state_free(ff_state* state);
FF_API ff_status ff_state_clone(const ff_state* state, ff_state** out);

FF_API ff_status ff_state_mode_count(const ff_state* state, int* out);
FF_API ff_status ff_state_term_count(const ff_state* state, size_t* out);
/*
 * Reads term `index` (terms are ordered lexicographically by occupations).
 * occupations must have room for mode_count ints, amplitude for 2 doubles.
 */
FF_API ff_status ff_state_term(const ff_state* state, size_t index,
                               int* occupations, double* amplitude);
FF_API ff_status ff_state_norm(const ff_state* state, double* out);

FF_API ff_status ff_state_apply_creation(const ff_state* state, int mode,
                                         ff_state** out);
FF_API ff_status ff_state_inner_product(const ff_state* lhs, const ff_state* rhs,
                                        double* re, double* im);
/* Fails with FF_ERROR_DOMAIN on the zero state. */
FF_API ff_status ff_state_normalize(const ff_state* state, ff_state** out,
                                    double* norm);
/* A missing sector yields the zero state and probability 0, not an error. */
FF_API ff_status ff_state_postselect_total(const ff_state* state, int total,
                                           ff_state** out, double* probability);
/* |<ket|state>|^2; ket holds mode_count photon numbers. */
FF_API ff_status ff_state_pattern_probability(const ff_state* state,
                                              const int* ket, double* out);

/* ---- photon sources ---------------------------------------------------- */

FF_API ff_status ff_source_pair_fock(int n_pairs, ff_state** out);
FF_API ff_status ff_source_noon(int n_photons, ff_state** out);
FF_API ff_status ff_source_kitten(int n, ff_state** out);
FF_API ff_status ff_source_squeezed_vacuum(double alpha_re, double alpha_im,
                                           int pair_cutoff, ff_state** out);
/* (1 - |alpha|^2) |alpha|^(2 n_pairs); requires |alpha| < 1. */
FF_API ff_status ff_pair_detection_probability(double alpha_re, double alpha_im,
                                               int n_pairs, double* out);

/* ---- optical networks -------------------------------------------------- */

FF_API ff_status ff_network_new(int mode_count, ff_network** out);
FF_API void ff_network_free(ff_network* net);
/*
 * matrix: 2x2 complex, 8 doubles interleaved re,im row-major, mapping the
 * incoming pair of creation operators to the outgoing pair. Must be unitary
 * within 1e-12.
 */
FF_API ff_status ff_network_add_beam_splitter(ff_network* net, int mode_a,
                                              int mode_b, const double* matrix);
/* The balanced convention: rows (1, i)/sqrt(2) and (1, -i)/sqrt(2). */
FF_API ff_status ff_network_add_balanced_beam_splitter(ff_network* net,
                                                       int mode_a, int mode_b);
FF_API ff_status ff_network_add_phase(ff_network* net, int mode, double phi);
/* Balanced two-mode Mach-Zehnder with phase phi on mode 0. */
FF_API ff_status ff_network_mach_zehnder(double phi, ff_network** out);
/* Phase + output mixer only, for states prepared inside the interferometer. */
FF_API ff_status ff_network_output_stage(double phi, ff_network** out);
FF_API ff_status ff_network_apply(const ff_network* net, const ff_state* state,
                                  ff_state** out);
/*
 * Overall mode transfer matrix of the network: mode_count x mode_count
 * complex values, written as 2 * mode_count^2 doubles interleaved re,im.
 */
FF_API ff_status ff_network_overall_unitary(const ff_network* net,
                                            double* matrix);
/*
 * Brute-force <output|U|input> for a mode_count x mode_count unitary given
 * like ff_network_overall_unitary writes it. Independent of the expansion
 * used by ff_network_apply; intended for cross-checks.
 */
FF_API ff_status ff_transition_amplitude_oracle(int mode_count,
                                                const double* unitary,
                                                const int* input_ket,
                                                const int* output_ket,
                                                double* re, double* im);

/* ---- fringe scans and analysis ----------------------------------------- */

/*
 * Sweeps phi over grid_size uniform points in [0, 2pi), sending a normalized
 * two-mode input through the chosen interferometer stage and recording every
 * coincidence pattern.
 */
FF_API ff_status ff_fringe_scan(const ff_state* input, int grid_size,
                                ff_stage stage, ff_fringe_table** out);
FF_API void ff_fringe_free(ff_fringe_table* table);
FF_API ff_status ff_fringe_grid_size(const ff_fringe_table* table, int* out);
FF_API ff_status ff_fringe_phi(const ff_fringe_table* table, int index,
                               double* out);
FF_API ff_status ff_fringe_pattern_count(const ff_fringe_table* table,
                                         size_t* out);
/* Channel count of every pattern in the table (two for these networks). */
FF_API ff_status ff_fringe_pattern_length(const ff_fringe_table* table,
                                          int* out);
/* Pattern `index` in lexicographic order; counts has room for the length. */
FF_API ff_status ff_fringe_pattern(const ff_fringe_table* table, size_t index,
                                   int* counts);
/* Probability series of pattern `index`; out has room for grid_size values. */
FF_API ff_status ff_fringe_series(const ff_fringe_table* table, size_t index,
                                  double* out);

/* (max - min)/(max + min) of a non-negative series; 0 for all-zero input. */
FF_API ff_status ff_visibility(const double* series, int length, double* out);
/*
 * Cosine-component magnitudes of a series sampled uniformly over one 2pi
 * period (mean at harmonic 0). Harmonics with magnitude <= threshold are
 * skipped. Writes up to capacity entries, reports the total in *count; if
 * capacity is too small, fills what fits and returns FF_ERROR_OUT_OF_RANGE.
 */
FF_API ff_status ff_harmonic_spectrum(const double* series, int length,
                                      double threshold, int capacity,
                                      int* harmonics, double* magnitudes,
                                      int* count);
/* Largest harmonic above threshold; 0 for constant series. */
FF_API ff_status ff_debroglie_reduction_factor(const double* series, int length,
                                               double threshold, int* out);
/* pattern: 2 channel counts. P_A(phi)^nA * P_B(phi)^nB. */
FF_API ff_status ff_classical_reference(const int* pattern, double phi,
                                        double* out);
FF_API ff_status ff_multiport_resolution_probability(int n_photons, int n_ports,
                                                     double* out);

/* ---- built-in verification --------------------------------------------- */

FF_API ff_status ff_verify_run(ff_verify_report** out);
FF_API void ff_verify_report_free(ff_verify_report* report);
FF_API ff_status ff_verify_report_count(const ff_verify_report* report,
                                        size_t* out);
/*
 * Reads check `index`. The name pointer stays valid while the report lives.
 * informational entries document conventions and never gate the result.
 */
FF_API ff_status ff_verify_report_entry(const ff_verify_report* report,
                                        size_t index, const char** name,
                                        double* max_deviation, double* tolerance,
                                        int* passed, int* informational);
FF_API ff_status ff_verify_report_detail(const ff_verify_report* report,
                                         size_t index, const char** detail);
FF_API ff_status ff_verify_report_all_passed(const ff_verify_report* report,
                                             int* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FOCKFRINGE_H */
