// Copyright 2026 The hardyafd Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

// Test signals, experiment drivers and report files.

#ifndef HARDY_EXPERIMENTS_HPP
#define HARDY_EXPERIMENTS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hardy/dictionary.hpp"
#include "hardy/nbest.hpp"
#include "hardy/pursuit.hpp"
#include "hardy/scan.hpp"

namespace hardy {

enum class SignalKind { BlaschkeForm, Rational, Chirp };

struct NoiseSpec {
  double sigma = 0.0;  // per real and imaginary component
  std::uint64_t seed = 42;
};

struct ToySignalSpec {
  SignalKind kind = SignalKind::BlaschkeForm;
  // BlaschkeForm: sum_k c_k B_{b_1..b_k} with terms (b_k, c_k).
  std::vector<std::pair<cplx, cplx>> terms;
  // Rational: (z^4 - d1)(d2 - z)^5 / ((d3 - z)^3 (d4 - z)^2).
  std::array<cplx, 4> d{};
  std::optional<NoiseSpec> noise;

  // Throws InvalidSpec on |b_k| >= 1 or |d_k| <= 1.
  void validate() const;
};

// "f1", "f2", "f3", "f4" or "chirp".
ToySignalSpec named_signal(std::string_view name);

BoundarySignal generate(const ToySignalSpec& spec, std::size_t n);
BoundarySignal add_noise(const BoundarySignal& f, double sigma,
                         std::uint64_t seed);
double rms(const BoundarySignal& f);

enum class ExperimentId { EX1, EX3, EX4, EX5, EX6 };

const char* experiment_name(ExperimentId id);
ExperimentId parse_experiment(std::string_view name);

struct ExperimentConfig {
  ParamGrid grid;  // n_max applies to the complete dictionary
  std::size_t samples = 100;
  std::uint64_t seed = 42;
  double noise_factor = 0.2;    // sigma = noise_factor * RMS(clean)
  std::optional<double> sigma;  // overrides noise_factor
  int denoise_iters = 16;
  int max_cycles = 50;
  double tol = 1e-6;
  ScanOptions scan;
};

struct ReportRow {
  std::string table;  // empty for single-table reports
  std::string method;
  std::string dict;
  int iters = 0;
  int cycles = 0;
  double relative_error = 0.0;
};

struct PlotSeries {
  std::string name;  // file suffix
  BoundarySignal f;
  BoundarySignal s;
};

struct ExperimentReport {
  std::string id;
  std::map<std::string, double> parameters;
  std::map<std::string, double> metrics;
  std::vector<ReportRow> rows;
  std::vector<PlotSeries> plots;
};

ExperimentReport run_experiment(ExperimentId id, const ExperimentConfig& config);

// Adds seeded Gaussian noise to `clean` and denoises with complete-dictionary
// POAFD. Rows report errors against `clean`.
ExperimentReport denoise(const BoundarySignal& clean, double sigma,
                         std::uint64_t seed, int iters,
                         const ExperimentConfig& config);

// Writes <id>_table[_<table>].csv, <id>_plot_<name>.csv and <id>_report.json
// into `dir` (created if missing). Returns the written paths in order.
std::vector<std::string> emit_report(const ExperimentReport& report,
                                     const std::string& dir);

std::string report_json(const ExperimentReport& report,
                        const std::vector<std::string>& files = {});
std::string decomposition_json(const Decomposition& d);
std::string nbest_json(const RefineResult& r, const Projection& p,
                       const ParamGrid& grid);

}  // namespace hardy

#endif  // HARDY_EXPERIMENTS_HPP
