// Copyright 2026 The hardyafd Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "afd/afd.h"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <memory>
#include <new>
#include <string>

#include "hardy/dictionary.hpp"
#include "hardy/errors.hpp"
#include "hardy/experiments.hpp"
#include "hardy/laguerre.hpp"
#include "hardy/nbest.hpp"
#include "hardy/pursuit.hpp"

struct afd_signal {
  hardy::BoundarySignal s;
};

struct afd_dictionary {
  hardy::Dictionary d;
  unsigned workers;
};

struct afd_result {
  std::string json;
  double relative_error;
  hardy::BoundarySignal approximation;
};

namespace {

thread_local std::string g_last_error;

afd_status set_error(afd_status st, const std::string& msg) {
  g_last_error = msg;
  return st;
}

template <class Fn>
afd_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return AFD_OK;
  } catch (const hardy::Error& e) {
    return set_error(static_cast<afd_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(AFD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(AFD_ERR_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) {
    hardy::fail(hardy::ErrorCode::InvalidArgument,
                std::string(what) + " is null");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hardy::ParamGrid to_grid(const afd_grid_options& g) {
  hardy::ParamGrid grid{g.radial, g.angular, g.n_max};
  grid.validate();
  return grid;
}

hardy::ExperimentConfig to_config(const afd_experiment_options* o) {
  const afd_experiment_options opt =
      o ? *o : afd_experiment_options_default();
  hardy::ExperimentConfig c;
  c.grid = to_grid(opt.grid);
  c.samples = opt.samples;
  c.seed = opt.seed;
  c.noise_factor = opt.noise_factor;
  if (opt.sigma >= 0.0) c.sigma = opt.sigma;
  c.denoise_iters = opt.denoise_iters;
  c.max_cycles = opt.max_cycles;
  c.tol = opt.tol;
  c.scan.workers = opt.grid.workers;
  return c;
}

std::string emit(const hardy::ExperimentReport& rep, const char* out_dir) {
  std::vector<std::string> files;
  if (out_dir) files = hardy::emit_report(rep, out_dir);
  return hardy::report_json(rep, files);
}

}  // namespace

extern "C" {

const char* afd_status_name(afd_status status) {
  if (status == AFD_OK) return "ok";
  if (status == AFD_ERR_INTERNAL) return "internal";
  if (status >= AFD_ERR_DIMENSION && status <= AFD_ERR_INVALID_ARGUMENT) {
    return hardy::error_code_name(static_cast<hardy::ErrorCode>(status));
  }
  return "unknown";
}

const char* afd_last_error_message(void) { return g_last_error.c_str(); }

void afd_string_free(char* s) { std::free(s); }

afd_status afd_signal_create(const double* re, const double* im, size_t n,
                             afd_signal** out) {
  return guarded([&] {
    require(re, "re");
    require(out, "out");
    std::vector<hardy::cplx> s(n);
    for (size_t j = 0; j < n; ++j) s[j] = {re[j], im ? im[j] : 0.0};
    *out = new afd_signal{hardy::BoundarySignal(std::move(s))};
  });
}

afd_status afd_signal_read_csv(const char* path, afd_signal** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new afd_signal{hardy::read_signal_csv(path)};
  });
}

afd_status afd_signal_write_csv(const afd_signal* s, const char* path) {
  return guarded([&] {
    require(s, "signal");
    require(path, "path");
    hardy::write_signal_csv(s->s, path);
  });
}

afd_status afd_signal_generate(const char* name, size_t n, afd_signal** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = new afd_signal{hardy::generate(hardy::named_signal(name), n)};
  });
}

afd_status afd_signal_add_noise(const afd_signal* s, double sigma,
                                uint64_t seed, afd_signal** out) {
  return guarded([&] {
    require(s, "signal");
    require(out, "out");
    *out = new afd_signal{hardy::add_noise(s->s, sigma, seed)};
  });
}

size_t afd_signal_size(const afd_signal* s) { return s ? s->s.size() : 0; }

afd_status afd_signal_get(const afd_signal* s, double* re, double* im) {
  return guarded([&] {
    require(s, "signal");
    for (size_t j = 0; j < s->s.size(); ++j) {
      if (re) re[j] = s->s[j].real();
      if (im) im[j] = s->s[j].imag();
    }
  });
}

void afd_signal_free(afd_signal* s) { delete s; }

afd_status afd_relative_error(const afd_signal* f, const afd_signal* approx,
                              double* out) {
  return guarded([&] {
    require(f, "f");
    require(approx, "approx");
    require(out, "out");
    *out = hardy::relative_error(f->s, approx->s);
  });
}

afd_status afd_mean_frequency(const afd_signal* f, double* out) {
  return guarded([&] {
    require(f, "f");
    require(out, "out");
    *out = hardy::mean_frequency(f->s);
  });
}

afd_grid_options afd_grid_options_default(void) {
  return {100, 100, 8, 0};
}

afd_status afd_dictionary_create(const afd_grid_options* grid, size_t samples,
                                 afd_dictionary** out) {
  return guarded([&] {
    require(out, "out");
    const afd_grid_options g = grid ? *grid : afd_grid_options_default();
    *out = new afd_dictionary{hardy::Dictionary(to_grid(g), samples),
                              g.workers};
  });
}

size_t afd_dictionary_size(const afd_dictionary* d) {
  return d ? d->d.size() : 0;
}

void afd_dictionary_free(afd_dictionary* d) { delete d; }

afd_status afd_decompose(const afd_signal* f, const afd_dictionary* d,
                         afd_method method, int iters, afd_result** out) {
  return guarded([&] {
    require(f, "signal");
    require(d, "dictionary");
    require(out, "out");
    if (method < AFD_METHOD_GA || method > AFD_METHOD_UNWINDING) {
      hardy::fail(hardy::ErrorCode::InvalidArgument, "unknown method");
    }
    const hardy::Decomposition r =
        hardy::run_pursuit(static_cast<hardy::Method>(method), f->s, d->d,
                           iters, {d->workers});
    *out = new afd_result{hardy::decomposition_json(r),
                          r.final_relative_error(), r.approximation};
  });
}

afd_status afd_decompose_unwinding(const afd_signal* f,
                                   const afd_dictionary* d, int maximal,
                                   int iters, afd_result** out) {
  return guarded([&] {
    require(f, "signal");
    require(out, "out");
    hardy::UnwindConfig cfg;
    if (maximal) cfg.selection = hardy::UnwindSelection::Maximal;
    if (d) cfg.scan.workers = d->workers;
    const hardy::Decomposition r =
        hardy::unwind_run(f->s, iters, cfg, d ? &d->d : nullptr);
    *out = new afd_result{hardy::decomposition_json(r),
                          r.final_relative_error(), r.approximation};
  });
}

afd_nbest_options afd_nbest_options_default(void) {
  return {3, 50, 1e-6, 0, 42};
}

afd_status afd_nbest(const afd_signal* f, const afd_dictionary* d,
                     const afd_nbest_options* options, afd_result** out) {
  return guarded([&] {
    require(f, "signal");
    require(d, "dictionary");
    require(out, "out");
    const afd_nbest_options o = options ? *options : afd_nbest_options_default();
    const hardy::ScanOptions scan{d->workers};
    const hardy::NTuple init =
        o.random_init ? hardy::initial_tuple_random(f->s, d->d, o.n, o.seed)
                      : hardy::initial_tuple_poafd(f->s, d->d, o.n, scan);
    hardy::RefineOptions ro;
    ro.max_cycles = o.max_cycles;
    ro.tol = o.tol;
    ro.scan = scan;
    const hardy::RefineResult r = hardy::refine(f->s, init, d->d, ro);
    const hardy::Projection p = hardy::project(f->s, r.tuple.params);
    *out = new afd_result{hardy::nbest_json(r, p, d->d.grid()),
                          p.relative_error, p.approximation};
  });
}

afd_status afd_result_json(const afd_result* r, char** out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    *out = dup_string(r->json);
  });
}

double afd_result_relative_error(const afd_result* r) {
  return r ? r->relative_error : -1.0;
}

afd_status afd_result_approximation(const afd_result* r, afd_signal** out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    *out = new afd_signal{r->approximation};
  });
}

void afd_result_free(afd_result* r) { delete r; }

afd_status afd_laguerre_rate_csv(double sigma, double a_re, double a_im,
                                 int n_max, const char* path, char** summary) {
  return guarded([&] {
    require(path, "path");
    const hardy::RateTable t = hardy::rate_table(sigma, {a_re, a_im}, n_max);
    std::FILE* fp = std::fopen(path, "wb");
    if (!fp) {
      hardy::fail(hardy::ErrorCode::Io,
                  std::string("cannot open ") + path + ": " +
                      std::strerror(errno));
    }
    std::fputs("n,coefficient_decay,laguerre_tail\n", fp);
    for (std::size_t i = 0; i < t.n.size(); ++i) {
      std::fprintf(fp, "%d,%.17g,%.17g\n", t.n[i], t.coefficient_decay[i],
                   t.laguerre_tail[i]);
    }
    const bool bad = std::ferror(fp) != 0;
    if (std::fclose(fp) != 0 || bad) {
      hardy::fail(hardy::ErrorCode::Io, std::string("write failed: ") + path);
    }
    if (summary) {
      const nlohmann::json j = {{"sigma", sigma},
                                {"a_re", a_re},
                                {"a_im", a_im},
                                {"n_max", n_max},
                                {"decay_slope", t.decay_slope},
                                {"tail_slope", t.tail_slope}};
      *summary = dup_string(j.dump(2));
    }
  });
}

afd_status afd_transform_json(int n, double a_re, double a_im, char** out) {
  return guarded([&] {
    require(out, "out");
    const hardy::TransformPair tp = hardy::transform_matrices(n, {a_re, a_im});
    auto mat = [](const Eigen::MatrixXcd& m) {
      nlohmann::json rows = nlohmann::json::array();
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
          row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(std::move(row));
      }
      return rows;
    };
    const nlohmann::json j = {{"n", n},
                              {"a_re", a_re},
                              {"a_im", a_im},
                              {"T", mat(tp.T)},
                              {"T_inv", mat(tp.T_inv)}};
    *out = dup_string(j.dump(2));
  });
}

afd_status afd_bvc_probe_csv(const afd_signal* f, const afd_grid_options* grid,
                             const char* path) {
  return guarded([&] {
    require(f, "signal");
    require(path, "path");
    const afd_grid_options g = grid ? *grid : afd_grid_options_default();
    const hardy::BvcTable t = hardy::bvc_probe(f->s, to_grid(g));
    std::FILE* fp = std::fopen(path, "wb");
    if (!fp) {
      hardy::fail(hardy::ErrorCode::Io,
                  std::string("cannot open ") + path + ": " +
                      std::strerror(errno));
    }
    std::fputs("n,x,ring_max\n", fp);
    for (int n = 0; n <= g.n_max; ++n) {
      for (int x = 1; x <= g.radial; ++x) {
        std::fprintf(fp, "%d,%d,%.17g\n", n, x, t.ring_max(n, x));
      }
    }
    const bool bad = std::ferror(fp) != 0;
    if (std::fclose(fp) != 0 || bad) {
      hardy::fail(hardy::ErrorCode::Io, std::string("write failed: ") + path);
    }
  });
}

afd_experiment_options afd_experiment_options_default(void) {
  return {afd_grid_options_default(), 100, 42, 0.2, -1.0, 16, 50, 1e-6};
}

afd_status afd_run_experiment(const char* id,
                              const afd_experiment_options* options,
                              const char* out_dir, char** report_json) {
  return guarded([&] {
    require(id, "id");
    const hardy::ExperimentReport rep = hardy::run_experiment(
        hardy::parse_experiment(id), to_config(options));
    const std::string j = emit(rep, out_dir);
    if (report_json) *report_json = dup_string(j);
  });
}

afd_status afd_denoise(const afd_signal* clean, double sigma, uint64_t seed,
                       int iters, const afd_experiment_options* options,
                       const char* out_dir, char** report_json) {
  return guarded([&] {
    require(clean, "signal");
    const hardy::ExperimentReport rep =
        hardy::denoise(clean->s, sigma, seed, iters, to_config(options));
    const std::string j = emit(rep, out_dir);
    if (report_json) *report_json = dup_string(j);
  });
}

}  // extern "C"
