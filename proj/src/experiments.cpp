// Copyright 2026 The hardyafd Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "hardy/experiments.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

using Pairs = std::vector<std::pair<cplx, cplx>>;

const Pairs kF1 = {
    {{-0.4750, 0.3050}, {-0.5861, -0.04445}},
    {{-0.1800, 0.7150}, {0.2428, -0.6878}},
    {{0.2600, -0.7300}, {0.4423, -0.3309}},
    {{0.5400, 0.3600}, {-0.2703, -0.8217}},
    {{-0.4850, -0.2150}, {-0.8085, 0.3774}},
};

const Pairs kF2 = {
    {{-0.5850, 0.2930}, {-0.3861, -0.0515}},
    {{0.4806, 0.2513}, {-0.2802, -0.7235}},
    {{0.2505, -0.6823}, {0.4505, -0.4325}},
    {{-0.2005, 0.6950}, {0.2539, -0.7136}},
    {{-0.4512, -0.1825}, {-0.7562, 0.4265}},
};

const Pairs kF3 = {
    {{-0.4750, 0.3050}, {-0.5861, -0.4444}},
    {{0.3600, -0.6300}, {0.4423, -0.3308}},
    {{0.5400, 0.4600}, {-0.2702, -0.8217}},
    {{-0.4850, -0.2150}, {-0.7085, 0.3773}},
};

const std::array<cplx, 4> kF4 = {cplx{3.1017, -2.5305}, cplx{-6.1205, 2.3674},
                                 cplx{-5.4678, -2.2502},
                                 cplx{-4.4217, 7.6913}};

ParamGrid szego_grid(const ParamGrid& g) { return {g.radial, g.angular, 0}; }

ParamGrid complete_grid(const ParamGrid& g) {
  if (g.n_max < 1) {
    fail(ErrorCode::InvalidArgument, "complete dictionary needs n_max >= 1");
  }
  return g;
}

const char* dict_label(const Dictionary& d) {
  return d.complete() ? "complete" : "szego";
}

ReportRow row_of(const std::string& table, const Decomposition& d) {
  return {table, method_name(d.method), dict_kind_name(d.dict),
          static_cast<int>(d.steps.size()), 0, d.final_relative_error()};
}

struct NBestRun {
  RefineResult refined;
  Projection projection;
};

NBestRun run_nbest(const BoundarySignal& f, const Dictionary& dict, int n,
                   int cycles, const ExperimentConfig& cfg) {
  const NTuple init = initial_tuple_poafd(f, dict, n, cfg.scan);
  RefineOptions opt;
  opt.max_cycles = cycles;
  opt.tol = cfg.tol;
  opt.scan = cfg.scan;
  RefineResult refined = refine(f, init, dict, opt);
  Projection p = project(f, refined.tuple.params);
  return {std::move(refined), std::move(p)};
}

void common_parameters(ExperimentReport& rep, const ExperimentConfig& cfg) {
  rep.parameters["grid_radial"] = cfg.grid.radial;
  rep.parameters["grid_angular"] = cfg.grid.angular;
  rep.parameters["n_max"] = cfg.grid.n_max;
  rep.parameters["samples"] = static_cast<double>(cfg.samples);
}

ExperimentReport ex1(const ExperimentConfig& cfg) {
  ExperimentReport rep{"ex1", {}, {}, {}, {}};
  common_parameters(rep, cfg);
  rep.parameters["iters"] = 3;
  rep.parameters["max_cycles"] = cfg.max_cycles;
  rep.parameters["tol"] = cfg.tol;
  const BoundarySignal f = generate(named_signal("f1"), cfg.samples);
  for (const ParamGrid& g : {szego_grid(cfg.grid), complete_grid(cfg.grid)}) {
    const Dictionary dict(g, cfg.samples);
    const std::string table = dict_label(dict);
    for (Method m : {Method::GA, Method::OGA, Method::POAFD}) {
      const Decomposition d = run_pursuit(m, f, dict, 3, cfg.scan);
      rep.rows.push_back(row_of(table, d));
      rep.plots.push_back({std::string(method_name(m)) + "_" + table, f,
                           d.approximation});
    }
    const NBestRun nb = run_nbest(f, dict, 3, cfg.max_cycles, cfg);
    rep.rows.push_back({table, "nbest", table, 3, nb.refined.cycles_run,
                        nb.projection.relative_error});
    rep.plots.push_back({"nbest_" + table, f, nb.projection.approximation});
  }
  return rep;
}

ExperimentReport ex3(const ExperimentConfig& cfg) {
  constexpr int kIters = 18;
  ExperimentReport rep{"ex3", {}, {}, {}, {}};
  common_parameters(rep, cfg);
  rep.parameters["iters"] = kIters;
  const BoundarySignal f = generate(named_signal("f2"), cfg.samples);
  for (const ParamGrid& g : {szego_grid(cfg.grid), complete_grid(cfg.grid)}) {
    const Dictionary dict(g, cfg.samples);
    const Decomposition d = poafd_run(f, dict, kIters, cfg.scan);
    for (std::size_t k = 0; k < d.steps.size(); ++k) {
      rep.rows.push_back({"", "poafd", dict_label(dict), static_cast<int>(k + 1),
                          0, d.steps[k].relative_error});
    }
    rep.plots.push_back({std::string("poafd_") + dict_label(dict), f,
                         d.approximation});
  }
  return rep;
}

ExperimentReport ex4(const ExperimentConfig& cfg) {
  ExperimentReport rep{"ex4", {}, {}, {}, {}};
  common_parameters(rep, cfg);
  rep.parameters["tol"] = cfg.tol;
  const BoundarySignal f = generate(named_signal("f3"), cfg.samples);
  struct Case {
    ParamGrid grid;
    int n;
    int cycles;
  };
  for (const Case& c : {Case{szego_grid(cfg.grid), 8, 5},
                        Case{complete_grid(cfg.grid), 4, 3}}) {
    const Dictionary dict(c.grid, cfg.samples);
    const std::string label = dict_label(dict);
    const Decomposition d = poafd_run(f, dict, c.n, cfg.scan);
    rep.rows.push_back(row_of("", d));
    const NBestRun nb = run_nbest(f, dict, c.n, c.cycles, cfg);
    rep.rows.push_back({"", "nbest", label, c.n, nb.refined.cycles_run,
                        nb.projection.relative_error});
    rep.plots.push_back({"nbest_" + label, f, nb.projection.approximation});
  }
  return rep;
}

ExperimentReport ex5(const ExperimentConfig& cfg) {
  constexpr int kIters = 2;
  ExperimentReport rep{"ex5", {}, {}, {}, {}};
  common_parameters(rep, cfg);
  rep.parameters["iters"] = kIters;
  rep.parameters["tol"] = cfg.tol;
  const BoundarySignal f = generate(named_signal("f4"), cfg.samples);

  UnwindConfig uc;
  uc.scan = cfg.scan;
  const Decomposition uw = unwind_run(f, kIters, uc);
  rep.rows.push_back(row_of("", uw));
  rep.plots.push_back({"unwinding", f, uw.approximation});

  const Dictionary szego(szego_grid(cfg.grid), cfg.samples);
  uc.selection = UnwindSelection::Maximal;
  const Decomposition uwm = unwind_run(f, kIters, uc, &szego);
  ReportRow r = row_of("", uwm);
  r.method = "unwinding_maximal";
  rep.rows.push_back(r);
  rep.plots.push_back({"unwinding_maximal", f, uwm.approximation});

  const Dictionary complete(complete_grid(cfg.grid), cfg.samples);
  const Decomposition pa = poafd_run(f, complete, kIters, cfg.scan);
  rep.rows.push_back(row_of("", pa));
  rep.plots.push_back({"poafd_complete", f, pa.approximation});

  const NBestRun nb = run_nbest(f, complete, kIters, cfg.max_cycles, cfg);
  rep.rows.push_back({"", "nbest", "complete", kIters, nb.refined.cycles_run,
                      nb.projection.relative_error});
  rep.plots.push_back({"nbest_complete", f, nb.projection.approximation});
  return rep;
}

ExperimentReport ex6(const ExperimentConfig& cfg) {
  const BoundarySignal clean = generate(named_signal("chirp"), cfg.samples);
  const double sigma = cfg.sigma ? *cfg.sigma : cfg.noise_factor * rms(clean);
  ExperimentReport rep =
      denoise(clean, sigma, cfg.seed, cfg.denoise_iters, cfg);
  rep.id = "ex6";
  const Dictionary complete(complete_grid(cfg.grid), cfg.samples);
  const Decomposition d = poafd_run(clean, complete, cfg.denoise_iters,
                                    cfg.scan);
  ReportRow r = row_of("", d);
  r.method = "poafd_clean";
  rep.rows.insert(rep.rows.begin(), r);
  rep.metrics["clean_error"] = d.final_relative_error();
  rep.plots.insert(rep.plots.begin(),
                   PlotSeries{"poafd_clean", clean, d.approximation});
  rep.parameters["noise_factor"] = cfg.noise_factor;
  return rep;
}

}  // namespace

void ToySignalSpec::validate() const {
  switch (kind) {
    case SignalKind::BlaschkeForm:
      if (terms.empty()) fail(ErrorCode::InvalidSpec, "no Blaschke terms");
      for (const auto& [b, c] : terms) {
        if (!(std::abs(b) < 1.0)) {
          fail(ErrorCode::InvalidSpec, "Blaschke parameter outside the disc");
        }
      }
      break;
    case SignalKind::Rational:
      for (const cplx& v : d) {
        if (!(std::abs(v) > 1.0)) {
          fail(ErrorCode::InvalidSpec,
               "rational parameters must lie outside the closed disc");
        }
      }
      break;
    case SignalKind::Chirp:
      break;
  }
  if (noise && !(noise->sigma >= 0.0)) {
    fail(ErrorCode::InvalidSpec, "noise sigma must be >= 0");
  }
}

ToySignalSpec named_signal(std::string_view name) {
  ToySignalSpec s;
  if (name == "f1") {
    s.terms = kF1;
  } else if (name == "f2") {
    s.terms = kF2;
  } else if (name == "f3") {
    s.terms = kF3;
  } else if (name == "f4") {
    s.kind = SignalKind::Rational;
    s.d = kF4;
  } else if (name == "chirp") {
    s.kind = SignalKind::Chirp;
  } else {
    fail(ErrorCode::InvalidArgument, "unknown signal '" + std::string(name) +
                                         "' (f1, f2, f3, f4, chirp)");
  }
  return s;
}

BoundarySignal generate(const ToySignalSpec& spec, std::size_t n) {
  spec.validate();
  if (n < 2) fail(ErrorCode::Dimension, "need at least 2 samples");
  BoundarySignal out = BoundarySignal::zeros(n);
  switch (spec.kind) {
    case SignalKind::BlaschkeForm: {
      BlaschkeSpec b;
      for (std::size_t k = 0; k < spec.terms.size(); ++k) {
        b.zeros.push_back(spec.terms[k].first);
        out.add_scaled(spec.terms[k].second,
                       sample_tm_element(b, static_cast<int>(k + 1), n)
                           .samples());
      }
      break;
    }
    case SignalKind::Rational: {
      const auto& d = spec.d;
      out = BoundarySignal::from_function(n, [&](cplx z) {
        const cplx z2 = z * z;
        return (z2 * z2 - d[0]) * std::pow(d[1] - z, 5) /
               (std::pow(d[2] - z, 3) * std::pow(d[3] - z, 2));
      });
      break;
    }
    case SignalKind::Chirp: {
      std::vector<cplx> s(n);
      for (std::size_t j = 0; j < n; ++j) {
        const double t = BoundarySignal::grid_angle(j, n);
        s[j] = std::polar(1.0, t * t / std::numbers::pi);
      }
      out = BoundarySignal(std::move(s));
      break;
    }
  }
  if (spec.noise) out = add_noise(out, spec.noise->sigma, spec.noise->seed);
  return out;
}

BoundarySignal add_noise(const BoundarySignal& f, double sigma,
                         std::uint64_t seed) {
  if (!(sigma >= 0.0)) fail(ErrorCode::InvalidArgument, "sigma must be >= 0");
  if (sigma == 0.0) return f;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, sigma);
  std::vector<cplx> s(f.samples().begin(), f.samples().end());
  for (auto& v : s) {
    const double re = g(rng);
    const double im = g(rng);
    v += cplx(re, im);
  }
  return BoundarySignal(std::move(s));
}

double rms(const BoundarySignal& f) { return f.norm(); }

const char* experiment_name(ExperimentId id) {
  switch (id) {
    case ExperimentId::EX1: return "ex1";
    case ExperimentId::EX3: return "ex3";
    case ExperimentId::EX4: return "ex4";
    case ExperimentId::EX5: return "ex5";
    case ExperimentId::EX6: return "ex6";
  }
  return "?";
}

ExperimentId parse_experiment(std::string_view name) {
  if (name == "ex1") return ExperimentId::EX1;
  if (name == "ex3") return ExperimentId::EX3;
  if (name == "ex4") return ExperimentId::EX4;
  if (name == "ex5") return ExperimentId::EX5;
  if (name == "ex6") return ExperimentId::EX6;
  fail(ErrorCode::InvalidArgument,
       "unknown experiment '" + std::string(name) + "'");
}

ExperimentReport run_experiment(ExperimentId id,
                                const ExperimentConfig& config) {
  config.grid.validate();
  switch (id) {
    case ExperimentId::EX1: return ex1(config);
    case ExperimentId::EX3: return ex3(config);
    case ExperimentId::EX4: return ex4(config);
    case ExperimentId::EX5: return ex5(config);
    case ExperimentId::EX6: return ex6(config);
  }
  fail(ErrorCode::InvalidArgument, "unknown experiment");
}

ExperimentReport denoise(const BoundarySignal& clean, double sigma,
                         std::uint64_t seed, int iters,
                         const ExperimentConfig& config) {
  if (iters < 1) fail(ErrorCode::InvalidArgument, "iterations must be >= 1");
  const BoundarySignal noisy = add_noise(clean, sigma, seed);
  const Dictionary complete(complete_grid(config.grid), clean.size());
  const Decomposition d = poafd_run(noisy, complete, iters, config.scan);

  ExperimentReport rep{"denoise", {}, {}, {}, {}};
  common_parameters(rep, config);
  rep.parameters["samples"] = static_cast<double>(clean.size());
  rep.parameters["sigma"] = sigma;
  rep.parameters["seed"] = static_cast<double>(seed);
  rep.parameters["iters"] = iters;
  const double noisy_err = relative_error(clean, noisy);
  const double denoised_err = relative_error(clean, d.approximation);
  rep.metrics["noisy_error"] = noisy_err;
  rep.metrics["denoised_error"] = denoised_err;
  rep.metrics["fit_error"] = d.final_relative_error();
  rep.rows.push_back({"", "noisy_input", "none", 0, 0, noisy_err});
  rep.rows.push_back({"", "poafd_denoised", "complete", iters, 0,
                      denoised_err});
  rep.plots.push_back({"noisy", clean, noisy});
  rep.plots.push_back({"poafd_denoised", clean, d.approximation});
  return rep;
}

}  // namespace hardy
