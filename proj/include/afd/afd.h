/* Copyright 2026 The hardyafd Authors.
 * Licensed under the Apache License, Version 2.0 (the "License"); you may not
 * use this file except in compliance with the License. You may obtain a copy
 * of the License at http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
 * WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 */

/* C interface to libhardyafd. Every call returns an afd_status; on failure
 * afd_last_error_message() describes the error for the calling thread.
 * Strings returned through char** are owned by the caller and released with
 * afd_string_free. */

#ifndef AFD_AFD_H
#define AFD_AFD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum afd_status {
  AFD_OK = 0,
  AFD_ERR_DIMENSION = 1,
  AFD_ERR_DOMAIN = 2,
  AFD_ERR_DEGENERATE_INPUT = 3,
  AFD_ERR_LINEAR_DEPENDENCE = 4,
  AFD_ERR_DICTIONARY_EXHAUSTED = 5,
  AFD_ERR_NEAR_ZERO_BOUNDARY = 6,
  AFD_ERR_INDEX_OUT_OF_RANGE = 7,
  AFD_ERR_INVALID_SPEC = 8,
  AFD_ERR_ILL_CONDITIONED = 9,
  AFD_ERR_IO = 10,
  AFD_ERR_PARSE = 11,
  AFD_ERR_INVALID_ARGUMENT = 12,
  AFD_ERR_INTERNAL = 99
} afd_status;

typedef enum afd_method {
  AFD_METHOD_GA = 0,
  AFD_METHOD_OGA = 1,
  AFD_METHOD_AFD = 2,
  AFD_METHOD_POAFD = 3,
  AFD_METHOD_UNWINDING = 4
} afd_method;

typedef struct afd_signal afd_signal;
typedef struct afd_dictionary afd_dictionary;
typedef struct afd_result afd_result;

typedef struct afd_grid_options {
  int radial;          /* X, default 100 */
  int angular;         /* Y, default 100 */
  int n_max;           /* 0 selects the Szegő dictionary, default 8 */
  unsigned workers;    /* 0: hardware concurrency */
} afd_grid_options;

typedef struct afd_nbest_options {
  int n;
  int max_cycles;      /* default 50 */
  double tol;          /* default 1e-6 */
  int random_init;     /* 0: POAFD initialization */
  uint64_t seed;
} afd_nbest_options;

typedef struct afd_experiment_options {
  afd_grid_options grid;
  size_t samples;      /* default 100 */
  uint64_t seed;       /* default 42 */
  double noise_factor; /* default 0.2 */
  double sigma;        /* < 0: use noise_factor * RMS */
  int denoise_iters;   /* default 16 */
  int max_cycles;      /* default 50 */
  double tol;          /* default 1e-6 */
} afd_experiment_options;

const char* afd_status_name(afd_status status);
const char* afd_last_error_message(void);
void afd_string_free(char* s);

/* Signals */
afd_status afd_signal_create(const double* re, const double* im, size_t n,
                             afd_signal** out);
afd_status afd_signal_read_csv(const char* path, afd_signal** out);
afd_status afd_signal_write_csv(const afd_signal* s, const char* path);
/* name: f1, f2, f3, f4 or chirp */
afd_status afd_signal_generate(const char* name, size_t n, afd_signal** out);
afd_status afd_signal_add_noise(const afd_signal* s, double sigma,
                                uint64_t seed, afd_signal** out);
size_t afd_signal_size(const afd_signal* s);
afd_status afd_signal_get(const afd_signal* s, double* re, double* im);
void afd_signal_free(afd_signal* s);

afd_status afd_relative_error(const afd_signal* f, const afd_signal* approx,
                              double* out);
afd_status afd_mean_frequency(const afd_signal* f, double* out);

/* Dictionaries */
afd_grid_options afd_grid_options_default(void);
afd_status afd_dictionary_create(const afd_grid_options* grid, size_t samples,
                                 afd_dictionary** out);
size_t afd_dictionary_size(const afd_dictionary* d);
void afd_dictionary_free(afd_dictionary* d);

/* Decompositions */
afd_status afd_decompose(const afd_signal* f, const afd_dictionary* d,
                         afd_method method, int iters, afd_result** out);
/* maximal != 0 selects a_k by maximal Szegő selection (needs d). */
afd_status afd_decompose_unwinding(const afd_signal* f,
                                   const afd_dictionary* d, int maximal,
                                   int iters, afd_result** out);
afd_nbest_options afd_nbest_options_default(void);
afd_status afd_nbest(const afd_signal* f, const afd_dictionary* d,
                     const afd_nbest_options* options, afd_result** out);
afd_status afd_result_json(const afd_result* r, char** out);
double afd_result_relative_error(const afd_result* r);
afd_status afd_result_approximation(const afd_result* r, afd_signal** out);
void afd_result_free(afd_result* r);

/* Files */
afd_status afd_laguerre_rate_csv(double sigma, double a_re, double a_im,
                                 int n_max, const char* path, char** summary);
afd_status afd_transform_json(int n, double a_re, double a_im, char** out);
afd_status afd_bvc_probe_csv(const afd_signal* f, const afd_grid_options* grid,
                             const char* path);

/* Experiments */
afd_experiment_options afd_experiment_options_default(void);
afd_status afd_run_experiment(const char* id,
                              const afd_experiment_options* options,
                              const char* out_dir, char** report_json);
afd_status afd_denoise(const afd_signal* clean, double sigma, uint64_t seed,
                       int iters, const afd_experiment_options* options,
                       const char* out_dir, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* AFD_AFD_H */
