// Copyright 2026 The hardyafd Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

// afdtool: command-line front end over the C interface.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <string>

#include "afd/afd.h"

namespace {

struct Failure {
  afd_status status;
  std::string message;
};

void check(afd_status st) {
  if (st != AFD_OK) throw Failure{st, afd_last_error_message()};
}

void usage_error(const std::string& msg) {
  throw Failure{AFD_ERR_INVALID_ARGUMENT, msg};
}

struct SignalDeleter {
  void operator()(afd_signal* s) const { afd_signal_free(s); }
};
struct DictDeleter {
  void operator()(afd_dictionary* d) const { afd_dictionary_free(d); }
};
struct ResultDeleter {
  void operator()(afd_result* r) const { afd_result_free(r); }
};
using SignalPtr = std::unique_ptr<afd_signal, SignalDeleter>;
using DictPtr = std::unique_ptr<afd_dictionary, DictDeleter>;
using ResultPtr = std::unique_ptr<afd_result, ResultDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  afd_string_free(s);
  return out;
}

void write_text(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{AFD_ERR_IO, "cannot open " + path};
  out << body << "\n";
  if (!out) throw Failure{AFD_ERR_IO, "write failed: " + path};
}

struct GridFlags {
  std::string grid = "100x100";
  int nmax = 8;
  std::size_t samples = 100;
  unsigned workers = 0;

  void add(CLI::App* app, bool with_samples) {
    app->add_option("--grid", grid, "Parameter grid XxY")->capture_default_str();
    app->add_option("--nmax", nmax, "Highest kernel order (0: Szegő)")
        ->capture_default_str();
    if (with_samples) {
      app->add_option("--samples", samples, "Boundary samples N")
          ->capture_default_str();
    }
    app->add_option("--workers", workers, "Scan threads (0: all cores)")
        ->capture_default_str();
  }

  afd_grid_options options(std::optional<bool> complete = std::nullopt) const {
    afd_grid_options g = afd_grid_options_default();
    int x = 0, y = 0;
    char tail = 0;
    if (std::sscanf(grid.c_str(), "%dx%d%c", &x, &y, &tail) != 2) {
      usage_error("--grid expects XxY, got '" + grid + "'");
    }
    g.radial = x;
    g.angular = y;
    g.n_max = nmax;
    if (complete && !*complete) g.n_max = 0;
    g.workers = workers;
    return g;
  }
};

void parse_complex(const std::string& text, double& re, double& im) {
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf%c", &re, &im, &tail) != 2) {
    usage_error("expected RE,IM, got '" + text + "'");
  }
}

bool dict_is_complete(const std::string& dict) {
  if (dict == "complete") return true;
  if (dict == "szego") return false;
  usage_error("--dict must be szego or complete");
  return false;
}

SignalPtr read_input(const std::string& path) {
  afd_signal* s = nullptr;
  check(afd_signal_read_csv(path.c_str(), &s));
  return SignalPtr(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive Fourier decomposition toolkit"};
  app.require_subcommand(1);

  // decompose
  GridFlags dg;
  std::string d_method = "poafd", d_dict = "szego", d_input, d_out = "-";
  int d_iters = 3;
  bool d_maximal = false;
  auto* decompose = app.add_subcommand("decompose", "Run a pursuit method");
  decompose->add_option("--method", d_method, "ga|oga|afd|poafd|unwinding")
      ->capture_default_str();
  decompose->add_option("--dict", d_dict, "szego|complete")
      ->capture_default_str();
  decompose->add_option("--iters", d_iters, "Iterations")->capture_default_str();
  decompose->add_option("--input", d_input, "Signal CSV")->required();
  decompose->add_option("--out", d_out, "Result JSON ('-' for stdout)");
  decompose->add_flag("--maximal", d_maximal,
                      "Unwinding: maximal Szegő selection instead of a = 0");
  dg.add(decompose, false);

  // nbest
  GridFlags ng;
  std::string n_dict = "szego", n_init = "poafd", n_input, n_out = "-";
  afd_nbest_options nopt = afd_nbest_options_default();
  auto* nbest = app.add_subcommand("nbest", "Cyclic n-Best refinement");
  nbest->add_option("--n", nopt.n, "Tuple size")->capture_default_str();
  nbest->add_option("--dict", n_dict, "szego|complete")->capture_default_str();
  nbest->add_option("--cycles", nopt.max_cycles, "Maximum cycles")
      ->capture_default_str();
  nbest->add_option("--tol", nopt.tol, "Stop when a cycle gains less")
      ->capture_default_str();
  nbest->add_option("--init", n_init, "poafd|random")->capture_default_str();
  nbest->add_option("--seed", nopt.seed, "Seed for random init")
      ->capture_default_str();
  nbest->add_option("--input", n_input, "Signal CSV")->required();
  nbest->add_option("--out", n_out, "Result JSON ('-' for stdout)");
  ng.add(nbest, false);

  // experiment
  GridFlags eg;
  std::string e_id, e_out;
  afd_experiment_options eopt = afd_experiment_options_default();
  auto* experiment = app.add_subcommand("experiment", "Run a reference experiment");
  experiment->add_option("id", e_id, "ex1|ex3|ex4|ex5|ex6")->required();
  experiment->add_option("--seed", eopt.seed, "Noise seed")
      ->capture_default_str();
  experiment->add_option("--noise-factor", eopt.noise_factor,
                         "Noise sigma as a multiple of RMS")
      ->capture_default_str();
  experiment->add_option("--denoise-iters", eopt.denoise_iters,
                         "POAFD iterations for ex6")
      ->capture_default_str();
  experiment->add_option("--cycles", eopt.max_cycles, "n-Best cycle cap")
      ->capture_default_str();
  experiment->add_option("--out", e_out, "Output directory")->required();
  eg.add(experiment, true);

  // denoise
  GridFlags ug;
  std::string u_input, u_out;
  double u_sigma = 0.0;
  std::uint64_t u_seed = 42;
  int u_iters = 16;
  auto* denoise = app.add_subcommand("denoise", "Add noise and denoise a signal");
  denoise->add_option("--input", u_input, "Clean signal CSV")->required();
  denoise->add_option("--sigma", u_sigma, "Noise sigma per component")
      ->required();
  denoise->add_option("--seed", u_seed, "Noise seed")->capture_default_str();
  denoise->add_option("--iters", u_iters, "POAFD iterations")
      ->capture_default_str();
  denoise->add_option("--out", u_out, "Output directory")->required();
  ug.add(denoise, false);

  // laguerre-rate
  double l_sigma = 1.0;
  std::string l_a = "0.5,0", l_out;
  int l_nmax = 64;
  auto* lrate = app.add_subcommand("laguerre-rate",
                                   "Sobolev decay and Laguerre tail tables");
  lrate->add_option("--sigma", l_sigma, "Smoothness order")
      ->capture_default_str();
  lrate->add_option("--a", l_a, "Parameter RE,IM")->capture_default_str();
  lrate->add_option("--nmax", l_nmax, "Largest n")->capture_default_str();
  lrate->add_option("--out", l_out, "Table CSV")->required();

  // transform
  int t_n = 4;
  std::string t_a = "0.5,0", t_out = "-";
  auto* transform = app.add_subcommand("transform",
                                       "Kernel/Laguerre transformation matrices");
  transform->add_option("--n", t_n, "Matrix size")->capture_default_str();
  transform->add_option("--a", t_a, "Parameter RE,IM")->capture_default_str();
  transform->add_option("--out", t_out, "Matrices JSON ('-' for stdout)");

  // generate
  std::string g_name, g_out;
  std::size_t g_samples = 100;
  double g_sigma = 0.0;
  std::uint64_t g_seed = 42;
  auto* generate = app.add_subcommand("generate", "Write a test signal");
  generate->add_option("name", g_name, "f1|f2|f3|f4|chirp")->required();
  generate->add_option("--samples", g_samples, "Boundary samples")
      ->capture_default_str();
  generate->add_option("--sigma", g_sigma, "Optional noise sigma")
      ->capture_default_str();
  generate->add_option("--seed", g_seed, "Noise seed")->capture_default_str();
  generate->add_option("--out", g_out, "Signal CSV")->required();

  // bvc
  GridFlags bg;
  std::string b_input, b_out;
  auto* bvc = app.add_subcommand("bvc", "Ring maxima of |<f, e_{n,a}>|");
  bvc->add_option("--input", b_input, "Signal CSV")->required();
  bvc->add_option("--out", b_out, "Table CSV")->required();
  bg.add(bvc, false);

  // mean-frequency
  std::string m_input;
  auto* mfreq = app.add_subcommand("mean-frequency",
                                   "Boundary phase winding number");
  mfreq->add_option("--input", m_input, "Signal CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*decompose) {
      const bool complete = dict_is_complete(d_dict);
      const SignalPtr f = read_input(d_input);
      const afd_grid_options g = dg.options(complete);
      afd_result* r = nullptr;
      if (d_method == "unwinding") {
        DictPtr dict;
        if (d_maximal) {
          afd_dictionary* d = nullptr;
          afd_grid_options sg = g;
          sg.n_max = 0;
          check(afd_dictionary_create(&sg, afd_signal_size(f.get()), &d));
          dict.reset(d);
        }
        check(afd_decompose_unwinding(f.get(), dict.get(), d_maximal ? 1 : 0,
                                      d_iters, &r));
      } else {
        afd_method m;
        if (d_method == "ga") m = AFD_METHOD_GA;
        else if (d_method == "oga") m = AFD_METHOD_OGA;
        else if (d_method == "afd") m = AFD_METHOD_AFD;
        else if (d_method == "poafd") m = AFD_METHOD_POAFD;
        else usage_error("unknown method '" + d_method + "'");
        afd_dictionary* d = nullptr;
        check(afd_dictionary_create(&g, afd_signal_size(f.get()), &d));
        const DictPtr dict(d);
        check(afd_decompose(f.get(), dict.get(), m, d_iters, &r));
      }
      const ResultPtr res(r);
      char* json = nullptr;
      check(afd_result_json(res.get(), &json));
      write_text(d_out, take(json));
    } else if (*nbest) {
      const bool complete = dict_is_complete(n_dict);
      if (n_init != "poafd" && n_init != "random") {
        usage_error("--init must be poafd or random");
      }
      nopt.random_init = n_init == "random";
      const SignalPtr f = read_input(n_input);
      const afd_grid_options g = ng.options(complete);
      afd_dictionary* d = nullptr;
      check(afd_dictionary_create(&g, afd_signal_size(f.get()), &d));
      const DictPtr dict(d);
      afd_result* r = nullptr;
      check(afd_nbest(f.get(), dict.get(), &nopt, &r));
      const ResultPtr res(r);
      char* json = nullptr;
      check(afd_result_json(res.get(), &json));
      write_text(n_out, take(json));
    } else if (*experiment) {
      eopt.grid = eg.options();
      eopt.samples = eg.samples;
      char* json = nullptr;
      check(afd_run_experiment(e_id.c_str(), &eopt, e_out.c_str(), &json));
      std::cout << take(json) << "\n";
    } else if (*denoise) {
      afd_experiment_options o = afd_experiment_options_default();
      o.grid = ug.options();
      const SignalPtr f = read_input(u_input);
      char* json = nullptr;
      check(afd_denoise(f.get(), u_sigma, u_seed, u_iters, &o, u_out.c_str(),
                        &json));
      std::cout << take(json) << "\n";
    } else if (*lrate) {
      double re = 0, im = 0;
      parse_complex(l_a, re, im);
      char* summary = nullptr;
      check(afd_laguerre_rate_csv(l_sigma, re, im, l_nmax, l_out.c_str(),
                                  &summary));
      std::cout << take(summary) << "\n";
    } else if (*transform) {
      double re = 0, im = 0;
      parse_complex(t_a, re, im);
      char* json = nullptr;
      check(afd_transform_json(t_n, re, im, &json));
      write_text(t_out, take(json));
    } else if (*generate) {
      afd_signal* s = nullptr;
      check(afd_signal_generate(g_name.c_str(), g_samples, &s));
      SignalPtr sig(s);
      if (g_sigma > 0.0) {
        afd_signal* noisy = nullptr;
        check(afd_signal_add_noise(sig.get(), g_sigma, g_seed, &noisy));
        sig.reset(noisy);
      }
      check(afd_signal_write_csv(sig.get(), g_out.c_str()));
    } else if (*bvc) {
      const SignalPtr f = read_input(b_input);
      const afd_grid_options g = bg.options();
      check(afd_bvc_probe_csv(f.get(), &g, b_out.c_str()));
    } else if (*mfreq) {
      const SignalPtr f = read_input(m_input);
      double mf = 0.0;
      check(afd_mean_frequency(f.get(), &mf));
      std::printf("%.17g\n", mf);
    }
  } catch (const Failure& e) {
    const nlohmann::json err = {
        {"error", {{"code", afd_status_name(e.status)},
                   {"status", static_cast<int>(e.status)},
                   {"message", e.message}}}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 0;
}
