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

// Command-line front end for the fockfringe simulator, built entirely on the
// C API in fockfringe/fockfringe.h. Subcommands:
//   fringe  -- sweep an interferometer phase and write CSV + JSON summaries
//   verify  -- run the built-in closed-form comparison suite
//   state   -- print a source state's amplitude table

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fockfringe/fockfringe.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitValidation = 1;
constexpr int kExitVerifyFailed = 2;

struct StateDeleter {
  void operator()(ff_state* s) const { ff_state_free(s); }
};
struct FringeDeleter {
  void operator()(ff_fringe_table* t) const { ff_fringe_free(t); }
};
struct ReportDeleter {
  void operator()(ff_verify_report* r) const { ff_verify_report_free(r); }
};
using StatePtr = std::unique_ptr<ff_state, StateDeleter>;
using FringePtr = std::unique_ptr<ff_fringe_table, FringeDeleter>;
using ReportPtr = std::unique_ptr<ff_verify_report, ReportDeleter>;

[[noreturn]] void die(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(kExitValidation);
}

void check(ff_status status) {
  if (status != FF_OK) die(ff_last_error());
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

// ---- experiment configuration ---------------------------------------------

struct SourceSpec {
  std::string type;  // single_photon | pair_fock | squeezed_vacuum | noon | kitten
  int count = 0;     // pairs, photons or kitten order
  double alpha_re = 0.0;
  double alpha_im = 0.0;
  int cutoff = 10;
  int postselect_total = -1;  // -1: keep the full squeezed state
};

struct ExperimentConfig {
  SourceSpec source{.type = "single_photon"};
  int grid_size = 256;
  double threshold = 1e-9;
  std::vector<std::string> patterns;  // "nA:nB"; empty means all observed
  std::string out_csv = "fringe.csv";
  std::string out_json = "summary.json";
};

std::string render_source(const SourceSpec& s) {
  std::ostringstream os;
  if (s.type == "single_photon") return "single_photon";
  if (s.type == "pair_fock") {
    os << "pair_fock(" << s.count << ")";
  } else if (s.type == "noon") {
    os << "noon(" << s.count << ")";
  } else if (s.type == "kitten") {
    os << "kitten(" << s.count << ")";
  } else if (s.type == "squeezed_vacuum") {
    os << "squeezed_vacuum(" << s.alpha_re;
    if (s.alpha_im != 0.0) os << (s.alpha_im < 0 ? "" : "+") << s.alpha_im << "i";
    os << "," << s.cutoff;
    if (s.postselect_total >= 0) os << "," << s.postselect_total;
    os << ")";
  } else {
    os << s.type;
  }
  return os.str();
}

SourceSpec parse_source_string(const std::string& text) {
  SourceSpec spec;
  const auto open = text.find('(');
  const std::string name = text.substr(0, open);
  std::vector<std::string> args;
  if (open != std::string::npos) {
    if (text.back() != ')') die("malformed source spec '" + text + "'");
    std::string inner = text.substr(open + 1, text.size() - open - 2);
    std::stringstream ss(inner);
    std::string item;
    while (std::getline(ss, item, ',')) args.push_back(item);
  }
  auto int_arg = [&](std::size_t i) {
    try {
      return std::stoi(args.at(i));
    } catch (const std::exception&) {
      die("bad argument in source spec '" + text + "'");
    }
  };
  spec.type = name;
  if (name == "single_photon") {
    if (!args.empty()) die("single_photon takes no arguments");
  } else if (name == "pair_fock" || name == "noon" || name == "kitten") {
    if (args.size() != 1) die(name + " takes exactly one argument");
    spec.count = int_arg(0);
  } else if (name == "squeezed_vacuum") {
    if (args.size() < 2 || args.size() > 3) {
      die("squeezed_vacuum takes (alpha,cutoff[,postselect_total])");
    }
    try {
      spec.alpha_re = std::stod(args[0]);
    } catch (const std::exception&) {
      die("bad alpha in source spec '" + text + "'");
    }
    spec.cutoff = int_arg(1);
    if (args.size() == 3) spec.postselect_total = int_arg(2);
  } else {
    die("unknown source '" + name + "'");
  }
  return spec;
}

SourceSpec parse_source_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_source_string(j.get<std::string>());
  if (!j.is_object() || !j.contains("type")) {
    die("config source must be an object with a 'type' field");
  }
  SourceSpec spec;
  spec.type = j.at("type").get<std::string>();
  if (spec.type == "pair_fock") {
    spec.count = j.at("pairs").get<int>();
  } else if (spec.type == "noon") {
    spec.count = j.at("photons").get<int>();
  } else if (spec.type == "kitten") {
    spec.count = j.at("n").get<int>();
  } else if (spec.type == "squeezed_vacuum") {
    const auto& alpha = j.at("alpha");
    if (alpha.is_array()) {
      if (alpha.size() != 2) die("complex alpha must be a [re, im] pair");
      spec.alpha_re = alpha[0].get<double>();
      spec.alpha_im = alpha[1].get<double>();
    } else {
      spec.alpha_re = alpha.get<double>();
    }
    spec.cutoff = j.value("cutoff", 10);
    spec.postselect_total = j.value("postselect_total", -1);
  } else if (spec.type != "single_photon") {
    die("unknown source type '" + spec.type + "'");
  }
  return spec;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) die("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    die("config parse failure: " + std::string(e.what()));
  }
  ExperimentConfig config;
  if (j.contains("source")) config.source = parse_source_json(j.at("source"));
  config.grid_size = j.value("grid_size", config.grid_size);
  config.threshold = j.value("threshold", config.threshold);
  config.out_csv = j.value("out_csv", config.out_csv);
  config.out_json = j.value("out_json", config.out_json);
  if (j.contains("patterns")) {
    config.patterns = j.at("patterns").get<std::vector<std::string>>();
  }
  return config;
}

// ---- sources over the C API ------------------------------------------------

StatePtr build_source(const SourceSpec& spec) {
  ff_state* raw = nullptr;
  if (spec.type == "single_photon") {
    const int occupations[2] = {1, 0};
    const double amplitude[2] = {1.0, 0.0};
    check(ff_state_from_terms(2, 1, occupations, amplitude, &raw));
  } else if (spec.type == "pair_fock") {
    check(ff_source_pair_fock(spec.count, &raw));
  } else if (spec.type == "noon") {
    check(ff_source_noon(spec.count, &raw));
  } else if (spec.type == "kitten") {
    check(ff_source_kitten(spec.count, &raw));
  } else if (spec.type == "squeezed_vacuum") {
    check(ff_source_squeezed_vacuum(spec.alpha_re, spec.alpha_im, spec.cutoff, &raw));
    if (spec.postselect_total >= 0) {
      StatePtr full(raw);
      double probability = 0.0;
      ff_state* selected = nullptr;
      check(ff_state_postselect_total(full.get(), spec.postselect_total,
                                      &selected, &probability));
      StatePtr guard(selected);
      if (probability == 0.0) {
        die("post-selection on " + std::to_string(spec.postselect_total) +
            " photons removed all amplitude");
      }
      return guard;
    }
  } else {
    die("unknown source '" + spec.type + "'");
  }
  return StatePtr(raw);
}

// NOON states describe the light inside the interferometer, so they skip the
// input splitter and see only the phase and output mixer.
ff_stage stage_for(const SourceSpec& spec) {
  return spec.type == "noon" ? FF_STAGE_OUTPUT_ONLY : FF_STAGE_FULL_MZ;
}

// ---- fringe subcommand -------------------------------------------------------

struct PatternData {
  std::vector<int> counts;
  std::string label;  // "nA:nB"
  std::vector<double> series;
};

std::string pattern_label(const std::vector<int>& counts) {
  std::string label;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) label += ':';
    label += std::to_string(counts[i]);
  }
  return label;
}

int run_fringe(const ExperimentConfig& config) {
  if (config.grid_size < 8) die("grid_size must be at least 8");
  if (config.threshold <= 0.0) die("threshold must be positive");

  const StatePtr source = build_source(config.source);
  ff_fringe_table* raw_table = nullptr;
  check(ff_fringe_scan(source.get(), config.grid_size, stage_for(config.source),
                       &raw_table));
  const FringePtr table(raw_table);

  int grid_size = 0;
  check(ff_fringe_grid_size(table.get(), &grid_size));
  std::vector<double> phi(static_cast<std::size_t>(grid_size));
  for (int i = 0; i < grid_size; ++i) check(ff_fringe_phi(table.get(), i, &phi[i]));

  size_t pattern_count = 0;
  check(ff_fringe_pattern_count(table.get(), &pattern_count));
  int pattern_length = 0;
  check(ff_fringe_pattern_length(table.get(), &pattern_length));

  std::vector<PatternData> patterns;
  for (size_t p = 0; p < pattern_count; ++p) {
    PatternData data;
    data.counts.resize(static_cast<std::size_t>(pattern_length));
    check(ff_fringe_pattern(table.get(), p, data.counts.data()));
    data.label = pattern_label(data.counts);
    data.series.resize(static_cast<std::size_t>(grid_size));
    check(ff_fringe_series(table.get(), p, data.series.data()));
    patterns.push_back(std::move(data));
  }

  if (!config.patterns.empty()) {
    std::vector<PatternData> filtered;
    for (const std::string& wanted : config.patterns) {
      bool found = false;
      for (auto& candidate : patterns) {
        if (candidate.label == wanted) {
          filtered.push_back(candidate);
          found = true;
          break;
        }
      }
      if (!found) {
        std::cerr << "warning: pattern " << wanted
                  << " never occurs for this source; skipping\n";
      }
    }
    patterns = std::move(filtered);
  }

  // CSV: one row per (pattern, phi), series-major, fixed 17-digit rendering.
  std::string csv = "phi,pattern,probability\n";
  for (const auto& pattern : patterns) {
    for (int i = 0; i < grid_size; ++i) {
      csv += format_double(phi[static_cast<std::size_t>(i)]);
      csv += ',';
      csv += pattern.label;
      csv += ',';
      csv += format_double(pattern.series[static_cast<std::size_t>(i)]);
      csv += '\n';
    }
  }
  {
    std::ofstream out(config.out_csv, std::ios::binary);
    if (!out) die("cannot write CSV to '" + config.out_csv + "'");
    out << csv;
  }

  ordered_json summary;
  summary["source"] = render_source(config.source);
  summary["grid_size"] = grid_size;
  summary["patterns"] = ordered_json::array();
  for (const auto& pattern : patterns) {
    ordered_json entry;
    entry["pattern"] = pattern.label;

    double vis = 0.0;
    check(ff_visibility(pattern.series.data(), grid_size, &vis));
    entry["visibility"] = vis;

    const int capacity = grid_size / 2 + 2;
    std::vector<int> harmonics(static_cast<std::size_t>(capacity));
    std::vector<double> magnitudes(static_cast<std::size_t>(capacity));
    int harmonic_count = 0;
    check(ff_harmonic_spectrum(pattern.series.data(), grid_size, config.threshold,
                               capacity, harmonics.data(), magnitudes.data(),
                               &harmonic_count));
    ordered_json spectrum = ordered_json::object();
    for (int h = 0; h < harmonic_count; ++h) {
      spectrum[std::to_string(harmonics[static_cast<std::size_t>(h)])] =
          magnitudes[static_cast<std::size_t>(h)];
    }
    entry["harmonics"] = spectrum;

    int reduction = 0;
    check(ff_debroglie_reduction_factor(pattern.series.data(), grid_size,
                                        config.threshold, &reduction));
    entry["reduction_factor"] = reduction;

    // Four-photon coincidences get the uncorrelated single-photon reference
    // curve for direct comparison plots.
    int total = 0;
    for (int c : pattern.counts) total += c;
    if (total == 4 && pattern.counts.size() == 2) {
      std::vector<double> classical(static_cast<std::size_t>(grid_size));
      for (int i = 0; i < grid_size; ++i) {
        check(ff_classical_reference(pattern.counts.data(),
                                     phi[static_cast<std::size_t>(i)],
                                     &classical[static_cast<std::size_t>(i)]));
      }
      entry["classical_reference"] = classical;
    }
    summary["patterns"].push_back(std::move(entry));
  }
  {
    std::ofstream out(config.out_json, std::ios::binary);
    if (!out) die("cannot write JSON to '" + config.out_json + "'");
    out << summary.dump(2) << "\n";
  }

  std::cout << "wrote " << config.out_csv << " and " << config.out_json << " ("
            << render_source(config.source) << ", " << grid_size << " points, "
            << patterns.size() << " patterns)\n";
  return 0;
}

// ---- state subcommand --------------------------------------------------------

int run_state(const ExperimentConfig& config, bool as_json) {
  const StatePtr state = build_source(config.source);
  int modes = 0;
  check(ff_state_mode_count(state.get(), &modes));
  size_t terms = 0;
  check(ff_state_term_count(state.get(), &terms));
  double norm = 0.0;
  check(ff_state_norm(state.get(), &norm));

  std::vector<int> occupations(static_cast<std::size_t>(modes));
  if (as_json) {
    ordered_json out;
    out["source"] = render_source(config.source);
    out["modes"] = modes;
    out["norm"] = norm;
    out["terms"] = ordered_json::array();
    for (size_t t = 0; t < terms; ++t) {
      double amplitude[2] = {0.0, 0.0};
      check(ff_state_term(state.get(), t, occupations.data(), amplitude));
      out["terms"].push_back({{"ket", pattern_label(occupations)},
                              {"re", amplitude[0]},
                              {"im", amplitude[1]},
                              {"probability", amplitude[0] * amplitude[0] +
                                                  amplitude[1] * amplitude[1]}});
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "source: " << render_source(config.source) << "\n"
            << "modes: " << modes << "\n"
            << "norm: " << format_double(norm) << "\n"
            << "terms: " << terms << "\n"
            << "ket,re,im,probability\n";
  for (size_t t = 0; t < terms; ++t) {
    double amplitude[2] = {0.0, 0.0};
    check(ff_state_term(state.get(), t, occupations.data(), amplitude));
    std::cout << pattern_label(occupations) << ',' << format_double(amplitude[0])
              << ',' << format_double(amplitude[1]) << ','
              << format_double(amplitude[0] * amplitude[0] +
                               amplitude[1] * amplitude[1])
              << "\n";
  }
  return 0;
}

// ---- verify subcommand -------------------------------------------------------

int run_verify() {
  ff_verify_report* raw = nullptr;
  check(ff_verify_run(&raw));
  const ReportPtr report(raw);

  size_t count = 0;
  check(ff_verify_report_count(report.get(), &count));
  for (size_t i = 0; i < count; ++i) {
    const char* name = nullptr;
    double deviation = 0.0;
    double tolerance = 0.0;
    int passed = 0;
    int informational = 0;
    check(ff_verify_report_entry(report.get(), i, &name, &deviation, &tolerance,
                                 &passed, &informational));
    const char* tag = informational ? "INFO" : (passed ? "PASS" : "FAIL");
    std::printf("[ %s ] %-38s max deviation %#.3g (tolerance %#.3g)\n", tag, name,
                deviation, tolerance);
    const char* detail = nullptr;
    check(ff_verify_report_detail(report.get(), i, &detail));
    if (detail && detail[0] != '\0') std::printf("         %s\n", detail);
  }
  int all = 0;
  check(ff_verify_report_all_passed(report.get(), &all));
  std::printf("%s\n", all ? "all checks passed" : "verification FAILED");
  return all ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fockfringe: multi-photon interference fringes in Fock space"};
  app.set_version_flag("--version", ff_version());
  app.require_subcommand(1);

  std::string config_path;
  std::string source_text;
  int grid_size = 0;
  double threshold = 0.0;
  std::vector<std::string> patterns;
  std::string out_csv;
  std::string out_json;

  auto add_common = [&](CLI::App* cmd, bool with_outputs) {
    cmd->add_option("--config", config_path, "JSON experiment config");
    cmd->add_option("--source", source_text,
                    "source spec, e.g. pair_fock(2), noon(4), kitten(3), "
                    "squeezed_vacuum(0.2,30,4), single_photon");
    if (with_outputs) {
      cmd->add_option("--grid-size", grid_size, "phase grid points (>= 8)");
      cmd->add_option("--threshold", threshold, "harmonic magnitude threshold");
      cmd->add_option("--patterns", patterns, "patterns to report, e.g. 3:1 1:3");
      cmd->add_option("--out-csv", out_csv, "fringe CSV path");
      cmd->add_option("--out-json", out_json, "JSON summary path");
    }
  };

  CLI::App* fringe_cmd =
      app.add_subcommand("fringe", "phase sweep: CSV fringes + JSON summary");
  add_common(fringe_cmd, true);
  CLI::App* state_cmd =
      app.add_subcommand("state", "print a source state's amplitude table");
  add_common(state_cmd, false);
  bool state_as_json = false;
  state_cmd->add_flag("--json", state_as_json, "emit the table as JSON");
  app.add_subcommand("verify", "run the built-in closed-form comparison suite");

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand("verify")) return run_verify();

  const CLI::App* active = fringe_cmd->parsed() ? fringe_cmd : state_cmd;
  ExperimentConfig config;
  if (active->count("--config") > 0) config = load_config_file(config_path);
  if (active->count("--source") > 0) config.source = parse_source_string(source_text);
  if (fringe_cmd->parsed()) {
    if (fringe_cmd->count("--grid-size") > 0) config.grid_size = grid_size;
    if (fringe_cmd->count("--threshold") > 0) config.threshold = threshold;
    if (fringe_cmd->count("--patterns") > 0) config.patterns = patterns;
    if (fringe_cmd->count("--out-csv") > 0) config.out_csv = out_csv;
    if (fringe_cmd->count("--out-json") > 0) config.out_json = out_json;
    return run_fringe(config);
  }
  return run_state(config, state_as_json);
}
