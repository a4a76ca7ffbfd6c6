// Copyright 2026 The hardyafd Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

// Laguerre systems B_{l,a} = e_a tau_a^{l-1}, the change of basis between
// multiple kernels and Laguerre elements, and Hardy-Sobolev decay probes.

#ifndef HARDY_LAGUERRE_HPP
#define HARDY_LAGUERRE_HPP

#include <Eigen/Dense>
#include <vector>

#include "hardy/signal.hpp"

namespace hardy {

struct SobolevProfile {
  double sigma = 1.0;
  FourierCoeffs coeffs;  // c_0, c_1, ... (nonnegative frequencies only)

  // c_k = (1 + k)^{-(sigma + excess)}, k < terms.
  static SobolevProfile power_law(double sigma, std::size_t terms,
                                  double excess = 0.55);
  // sum_k |(1 + k^sigma) c_k|^2 over the stored coefficients.
  double sobolev_norm_sq() const;
  // Boundary samples of sum_k c_k z^k on an n-point grid (k < n/2).
  BoundarySignal sample(std::size_t n) const;
};

// Rows: the k-th multiple kernel k_{k-1,a} = sum_j T(k,j) B_{j,a}.
// Rows of T_inv: B_{k,a} = sum_j T_inv(k,j) k_{j-1,a}. Both lower triangular.
struct TransformPair {
  int n = 0;
  cplx a;
  Eigen::MatrixXcd T;
  Eigen::MatrixXcd T_inv;
};

TransformPair transform_matrices(int n, cplx a);

// |<f, e_{n,a}>| for n in [n_lo, n_hi], evaluated from the coefficients.
std::vector<double> sobolev_coefficient_decay(const SobolevProfile& profile,
                                              cplx a, int n_lo, int n_hi);

// ||f - sum_{l<=n} <f, B_{l,a}> B_{l,a}|| under the discrete norm, for
// n = 0..n_max (entry 0 is ||f||).
std::vector<double> laguerre_tail_errors(const BoundarySignal& f, cplx a,
                                         int n_max);
// Same, with f sampled from the profile on an n_samples grid.
std::vector<double> laguerre_tail_errors(const SobolevProfile& profile, cplx a,
                                         int n_max,
                                         std::size_t n_samples = 8192);
double laguerre_tail_error(const SobolevProfile& profile, cplx a, int n,
                           std::size_t n_samples = 8192);

// OLS slope of log(value) against log(n) over n in [n_lo, n_hi]; values
// below 1e-13 are ignored. NaN when fewer than two points remain.
double loglog_slope(const std::vector<int>& ns,
                    const std::vector<double>& values, int n_lo, int n_hi);

struct RateTable {
  double sigma = 1.0;
  cplx a;
  std::vector<int> n;
  std::vector<double> coefficient_decay;
  std::vector<double> laguerre_tail;
  double decay_slope = 0.0;
  double tail_slope = 0.0;
};

// Decay and tail tables for the power-law profile over n = 1..n_max with
// slopes fitted on [8, min(64, n_max)].
RateTable rate_table(double sigma, cplx a, int n_max);

}  // namespace hardy

#endif  // HARDY_LAGUERRE_HPP
