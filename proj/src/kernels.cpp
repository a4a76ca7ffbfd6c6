// Copyright 2026 The hardyafd Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "hardy/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hardy/errors.hpp"

namespace hardy {

void require_in_disc(cplx a) {
  if (!(std::abs(a) < 1.0)) {
    fail(ErrorCode::Domain, "parameter outside the open unit disc: |a| = " +
                                std::to_string(std::abs(a)));
  }
}

cplx szego_eval(cplx a, cplx z) {
  require_in_disc(a);
  return 1.0 / (1.0 - std::conj(a) * z);
}

cplx normalized_szego_eval(cplx a, cplx z) {
  require_in_disc(a);
  return std::sqrt(1.0 - std::norm(a)) / (1.0 - std::conj(a) * z);
}

cplx mobius(cplx a, cplx z) {
  require_in_disc(a);
  return (z - a) / (1.0 - std::conj(a) * z);
}

cplx multi_kernel_eval(const ParamPoint& p, cplx z) {
  require_in_disc(p.a);
  if (p.n < 0) fail(ErrorCode::Domain, "negative kernel order");
  const cplx w = 1.0 / (1.0 - std::conj(p.a) * z);
  cplx v = std::exp(std::lgamma(p.n + 1.0)) * w;
  for (int i = 0; i < p.n; ++i) v *= z * w;
  return v;
}

double multi_kernel_log_norm_sq(int n, double abs_a) {
  if (n < 0) fail(ErrorCode::Domain, "negative kernel order");
  if (!(abs_a < 1.0) || abs_a < 0.0) {
    fail(ErrorCode::Domain, "parameter outside the open unit disc");
  }
  // sum_m C(n,m) n! (2n-m)!/(n-m)! r^{n-m} (1-r)^{m-2n-1},  r = |a|^2.
  const double r = abs_a * abs_a;
  const double log_r = std::log(r);
  const double log_1mr = std::log1p(-r);
  const double log_nfact = std::lgamma(n + 1.0);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    const int power = n - m;
    if (r == 0.0 && power > 0) continue;
    double t = std::lgamma(n + 1.0) - std::lgamma(m + 1.0) -
               std::lgamma(n - m + 1.0) + log_nfact +
               std::lgamma(2.0 * n - m + 1.0) - std::lgamma(n - m + 1.0) +
               (m - 2.0 * n - 1.0) * log_1mr;
    if (power > 0) t += power * log_r;
    terms.push_back(t);
  }
  const double top = *std::max_element(terms.begin(), terms.end());
  // Neumaier summation of exp(t - top); every term is positive.
  double sum = 0.0, comp = 0.0;
  for (double t : terms) {
    const double x = std::exp(t - top);
    const double s = sum + x;
    comp += (std::abs(sum) >= std::abs(x)) ? (sum - s) + x : (x - s) + sum;
    sum = s;
  }
  return top + std::log(sum + comp);
}

double multi_kernel_norm_sq(const ParamPoint& p) {
  require_in_disc(p.a);
  return std::exp(multi_kernel_log_norm_sq(p.n, std::abs(p.a)));
}

cplx normalized_multi_kernel_eval(const ParamPoint& p, cplx z) {
  require_in_disc(p.a);
  const double scale =
      std::exp(std::lgamma(p.n + 1.0) -
               0.5 * multi_kernel_log_norm_sq(p.n, std::abs(p.a)));
  const cplx w = 1.0 / (1.0 - std::conj(p.a) * z);
  cplx v = scale * w;
  for (int i = 0; i < p.n; ++i) v *= z * w;
  return v;
}

cplx tm_element(const BlaschkeSpec& spec, int k, cplx z) {
  if (k < 1 || static_cast<std::size_t>(k) > spec.zeros.size()) {
    fail(ErrorCode::IndexOutOfRange,
         "TM index " + std::to_string(k) + " outside 1.." +
             std::to_string(spec.zeros.size()));
  }
  cplx v = normalized_szego_eval(spec.zeros[k - 1], z);
  for (int l = 0; l < k - 1; ++l) v *= mobius(spec.zeros[l], z);
  return v;
}

cplx laguerre_element(int l, cplx a, cplx z) {
  if (l < 1) fail(ErrorCode::IndexOutOfRange, "Laguerre index must be >= 1");
  const cplx tau = mobius(a, z);
  cplx v = normalized_szego_eval(a, z);
  for (int i = 1; i < l; ++i) v *= tau;
  return v;
}

BoundarySignal sample_multi_kernel(const ParamPoint& p, std::size_t n) {
  require_in_disc(p.a);
  return BoundarySignal::from_function(
      n, [&](cplx z) { return multi_kernel_eval(p, z); });
}

BoundarySignal sample_normalized_multi_kernel(const ParamPoint& p,
                                              std::size_t n) {
  require_in_disc(p.a);
  const double scale =
      std::exp(std::lgamma(p.n + 1.0) -
               0.5 * multi_kernel_log_norm_sq(p.n, std::abs(p.a)));
  const cplx abar = std::conj(p.a);
  return BoundarySignal::from_function(n, [&](cplx z) {
    const cplx w = 1.0 / (1.0 - abar * z);
    cplx v = scale * w;
    for (int i = 0; i < p.n; ++i) v *= z * w;
    return v;
  });
}

BoundarySignal sample_tm_element(const BlaschkeSpec& spec, int k,
                                 std::size_t n) {
  if (k < 1 || static_cast<std::size_t>(k) > spec.zeros.size()) {
    fail(ErrorCode::IndexOutOfRange, "TM index out of range");
  }
  return BoundarySignal::from_function(
      n, [&](cplx z) { return tm_element(spec, k, z); });
}

BoundarySignal sample_laguerre_element(int l, cplx a, std::size_t n) {
  return BoundarySignal::from_function(
      n, [&](cplx z) { return laguerre_element(l, a, z); });
}

BoundarySignal sample_blaschke_product(const BlaschkeSpec& spec,
                                       std::size_t n) {
  for (cplx a : spec.zeros) require_in_disc(a);
  return BoundarySignal::from_function(n, [&](cplx z) {
    cplx v = 1.0;
    for (cplx a : spec.zeros) v *= (z - a) / (1.0 - std::conj(a) * z);
    return v;
  });
}

double mean_frequency(const BoundarySignal& f) {
  const std::size_t n = f.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(f[j]) < 1e-12) {
      fail(ErrorCode::NearZeroBoundary,
           "signal (nearly) vanishes at boundary sample " + std::to_string(j) +
               "; mean frequency undefined on this grid");
    }
  }
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const cplx next = f[(j + 1) % n];
    total += std::arg(next * std::conj(f[j]));
  }
  // The cyclic ratios multiply to 1, so the sum is an exact multiple of 2 pi.
  return std::round(total / (2.0 * std::numbers::pi));
}

}  // namespace hardy
