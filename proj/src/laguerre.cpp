// Copyright 2026 The hardyafd Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "hardy/laguerre.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardy/errors.hpp"
#include "hardy/kernels.hpp"

namespace hardy {

namespace {

constexpr double kNoiseFloor = 1e-13;

double log_choose(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
         std::lgamma(n - k + 1.0);
}

// a^p with 0^0 = 1.
cplx ipow(cplx a, int p) {
  cplx v = 1.0;
  for (int i = 0; i < p; ++i) v *= a;
  return v;
}

}  // namespace

SobolevProfile SobolevProfile::power_law(double sigma, std::size_t terms,
                                         double excess) {
  if (!(sigma > 0.0)) fail(ErrorCode::InvalidArgument, "sigma must be > 0");
  SobolevProfile p;
  p.sigma = sigma;
  p.coeffs.coeffs.resize(terms);
  for (std::size_t k = 0; k < terms; ++k) {
    p.coeffs.coeffs[k] = std::pow(1.0 + static_cast<double>(k),
                                  -(sigma + excess));
  }
  return p;
}

double SobolevProfile::sobolev_norm_sq() const {
  double s = 0.0;
  for (std::size_t k = 0; k < coeffs.coeffs.size(); ++k) {
    s += std::norm((1.0 + std::pow(static_cast<double>(k), sigma)) *
                   coeffs.coeffs[k]);
  }
  return s;
}

BoundarySignal SobolevProfile::sample(std::size_t n) const {
  FourierCoeffs fc{std::vector<cplx>(n)};
  const std::size_t keep = std::min(coeffs.coeffs.size(), n / 2);
  std::copy_n(coeffs.coeffs.begin(), keep, fc.coeffs.begin());
  return synthesize(fc);
}

TransformPair transform_matrices(int n, cplx a) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "matrix size must be >= 1");
  require_in_disc(a);
  const double log_1mr = std::log1p(-std::norm(a));
  TransformPair out{n, a, Eigen::MatrixXcd::Zero(n, n),
                    Eigen::MatrixXcd::Zero(n, n)};
  for (int k = 1; k <= n; ++k) {
    for (int j = 1; j <= k; ++j) {
      const double lc = log_choose(k - 1, j - 1);
      const double t_mag = std::exp(std::lgamma(static_cast<double>(k)) + lc -
                                    (k - 0.5) * log_1mr);
      out.T(k - 1, j - 1) = t_mag * ipow(a, k - j);
      const double d_mag = std::exp(lc + (j - 0.5) * log_1mr -
                                    std::lgamma(static_cast<double>(j)));
      out.T_inv(k - 1, j - 1) = d_mag * ipow(-a, k - j);
    }
  }
  return out;
}

std::vector<double> sobolev_coefficient_decay(const SobolevProfile& profile,
                                              cplx a, int n_lo, int n_hi) {
  require_in_disc(a);
  if (n_lo < 0 || n_hi < n_lo) {
    fail(ErrorCode::InvalidArgument, "invalid n range");
  }
  const auto& c = profile.coeffs.coeffs;
  const int kmax = static_cast<int>(c.size());
  const double r = std::abs(a);
  const double log_r = r > 0.0 ? std::log(r) : 0.0;
  const double phase = std::arg(a);
  std::vector<double> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    if (r == 0.0) {
      out.push_back(n < kmax ? std::abs(c[n]) : 0.0);
      continue;
    }
    // <f, k_{n,a}> = sum_{k>=n} c_k n! C(k,n) a^{k-n}, summed in log scale.
    const double log_norm = 0.5 * multi_kernel_log_norm_sq(n, r);
    std::vector<std::pair<double, cplx>> terms;
    double top = -std::numeric_limits<double>::infinity();
    for (int k = n; k < kmax; ++k) {
      if (c[k] == 0.0) continue;
      const double lt = std::log(std::abs(c[k])) + std::lgamma(k + 1.0) -
                        std::lgamma(k - n + 1.0) + (k - n) * log_r - log_norm;
      const cplx dir = std::polar(1.0, std::arg(c[k]) + (k - n) * phase);
      terms.emplace_back(lt, dir);
      top = std::max(top, lt);
    }
    if (terms.empty()) {
      out.push_back(0.0);
      continue;
    }
    cplx sum = 0.0;
    for (const auto& [lt, dir] : terms) sum += std::exp(lt - top) * dir;
    out.push_back(std::exp(top) * std::abs(sum));
  }
  return out;
}

std::vector<double> laguerre_tail_errors(const BoundarySignal& f, cplx a,
                                         int n_max) {
  require_in_disc(a);
  if (n_max < 0) fail(ErrorCode::InvalidArgument, "n_max must be >= 0");
  const std::size_t n = f.size();
  BoundarySignal r = f;
  BoundarySignal b = sample_normalized_multi_kernel({0, a}, n);
  std::vector<cplx> tau(n);
  for (std::size_t j = 0; j < n; ++j) {
    tau[j] = mobius(a, BoundarySignal::grid_point(j, n));
  }
  std::vector<double> out{r.norm()};
  for (int l = 1; l <= n_max; ++l) {
    r.add_scaled(-inner(f, b), b.samples());
    out.push_back(r.norm());
    std::vector<cplx> next(b.samples().begin(), b.samples().end());
    for (std::size_t j = 0; j < n; ++j) next[j] *= tau[j];
    b = BoundarySignal(std::move(next));
  }
  return out;
}

std::vector<double> laguerre_tail_errors(const SobolevProfile& profile,
                                         cplx a, int n_max,
                                         std::size_t n_samples) {
  return laguerre_tail_errors(profile.sample(n_samples), a, n_max);
}

double laguerre_tail_error(const SobolevProfile& profile, cplx a, int n,
                           std::size_t n_samples) {
  return laguerre_tail_errors(profile, a, n, n_samples).back();
}

double loglog_slope(const std::vector<int>& ns,
                    const std::vector<double>& values, int n_lo, int n_hi) {
  if (ns.size() != values.size()) {
    fail(ErrorCode::Dimension, "slope inputs differ in length");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < n_lo || ns[i] > n_hi || ns[i] <= 0) continue;
    if (!(values[i] >= kNoiseFloor)) continue;
    const double x = std::log(static_cast<double>(ns[i]));
    const double y = std::log(values[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) return std::numeric_limits<double>::quiet_NaN();
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

RateTable rate_table(double sigma, cplx a, int n_max) {
  if (n_max < 1) fail(ErrorCode::InvalidArgument, "n_max must be >= 1");
  constexpr std::size_t kSamples = 8192;
  const SobolevProfile prof = SobolevProfile::power_law(sigma, kSamples / 2);
  RateTable t;
  t.sigma = sigma;
  t.a = a;
  for (int n = 1; n <= n_max; ++n) t.n.push_back(n);
  t.coefficient_decay = sobolev_coefficient_decay(prof, a, 1, n_max);
  const std::vector<double> tails = laguerre_tail_errors(prof, a, n_max,
                                                         kSamples);
  t.laguerre_tail.assign(tails.begin() + 1, tails.end());
  const int hi = std::min(64, n_max);
  t.decay_slope = loglog_slope(t.n, t.coefficient_decay, 8, hi);
  t.tail_slope = loglog_slope(t.n, t.laguerre_tail, 8, hi);
  return t;
}

}  // namespace hardy
