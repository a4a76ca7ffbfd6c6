// Copyright 2026 The hardyafd Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

// Szegő kernels, multiple kernels and the rational orthonormal systems built
// from them (Takenaka-Malmquist, Laguerre).
//
// Conventions:
//   k_a(z)     = 1 / (1 - conj(a) z)
//   k_{n,a}(z) = (d/d conj(a))^n k_a(z) = n! z^n / (1 - conj(a) z)^{n+1}
//   e_{n,a}    = k_{n,a} / ||k_{n,a}||      (continuous H^2 norm)
//   tau_a(z)   = (z - a) / (1 - conj(a) z)
//   B_k        = e_{a_k} * prod_{l<k} tau_{a_l}          (TM system, k >= 1)
//   B_{l,a}    = e_a * tau_a^{l-1}                        (Laguerre, l >= 1)

#ifndef HARDY_KERNELS_HPP
#define HARDY_KERNELS_HPP

#include <vector>

#include "hardy/signal.hpp"

namespace hardy {

struct ParamPoint {
  int n = 0;  // derivative order
  cplx a{};   // |a| < 1

  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

struct BlaschkeSpec {
  std::vector<cplx> zeros;  // repeats allowed
};

cplx szego_eval(cplx a, cplx z);
cplx normalized_szego_eval(cplx a, cplx z);

cplx mobius(cplx a, cplx z);

cplx multi_kernel_eval(const ParamPoint& p, cplx z);

// ||k_{n,a}||^2 by the closed-form sum, accumulated in log space.
double multi_kernel_norm_sq(const ParamPoint& p);
double multi_kernel_log_norm_sq(int n, double abs_a);

// e_{n,a}(z) without forming k_{n,a} (stable for large n and |a| near 1).
cplx normalized_multi_kernel_eval(const ParamPoint& p, cplx z);

cplx tm_element(const BlaschkeSpec& spec, int k, cplx z);
cplx laguerre_element(int l, cplx a, cplx z);

// Grid samples of the objects above.
BoundarySignal sample_multi_kernel(const ParamPoint& p, std::size_t n);
BoundarySignal sample_normalized_multi_kernel(const ParamPoint& p,
                                              std::size_t n);
BoundarySignal sample_tm_element(const BlaschkeSpec& spec, int k,
                                 std::size_t n);
BoundarySignal sample_laguerre_element(int l, cplx a, std::size_t n);
// prod_l tau_{a_l} on the grid.
BoundarySignal sample_blaschke_product(const BlaschkeSpec& spec, std::size_t n);

// Winding number of the boundary phase: (1/2pi) sum_j Arg(f_{j+1}/f_j),
// cyclic. NearZeroBoundary when some |f_j| < 1e-12.
double mean_frequency(const BoundarySignal& f);

void require_in_disc(cplx a);

}  // namespace hardy

#endif  // HARDY_KERNELS_HPP
