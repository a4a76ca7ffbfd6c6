// Copyright 2026 The hardyafd Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

// Cyclic coordinate refinement of n-tuples of (multiple) kernels.

#ifndef HARDY_NBEST_HPP
#define HARDY_NBEST_HPP

#include <cstdint>
#include <vector>

#include "hardy/dictionary.hpp"
#include "hardy/scan.hpp"

namespace hardy {

struct NTuple {
  std::vector<ParamPoint> params;
  double projection_error = 1.0;
};

struct Projection {
  std::vector<cplx> coefficients;  // f ~ sum_k coefficients[k] k_{n_k, a_k}
  double relative_error = 1.0;
  BoundarySignal approximation;
};

// Least-squares projection by orthogonal factorization of the sampled raw
// kernels. Throws IllConditioned when some GS defect is below 1e-10.
Projection project(const BoundarySignal& f,
                   const std::vector<ParamPoint>& params);

struct RefineOptions {
  int max_cycles = 50;
  double tol = 1e-6;
  ScanOptions scan;
};

struct RefineResult {
  NTuple tuple;
  // Relative projection error of the initial tuple, then after each cycle.
  std::vector<double> cycle_errors;
  int cycles_run = 0;
};

RefineResult refine(const BoundarySignal& f, const NTuple& initial,
                    const Dictionary& dict, const RefineOptions& options = {});

// Parameters selected by n steps of POAFD on `dict`.
NTuple initial_tuple_poafd(const BoundarySignal& f, const Dictionary& dict,
                           int n, const ScanOptions& scan = {});
// n distinct dictionary entries drawn with a seeded mt19937_64.
NTuple initial_tuple_random(const BoundarySignal& f, const Dictionary& dict,
                            int n, std::uint64_t seed);

}  // namespace hardy

#endif  // HARDY_NBEST_HPP
