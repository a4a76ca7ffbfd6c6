// Copyright 2026 The hardyafd Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "hardy/nbest.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "hardy/errors.hpp"
#include "hardy/gram_schmidt.hpp"
#include "hardy/pursuit.hpp"

namespace hardy {

Projection project(const BoundarySignal& f,
                   const std::vector<ParamPoint>& params) {
  const std::size_t n = f.size();
  const auto cols = static_cast<Eigen::Index>(params.size());
  if (params.empty()) {
    return {{}, 1.0, BoundarySignal::zeros(n)};
  }
  if (params.size() >= n) {
    fail(ErrorCode::IllConditioned, "more kernels than samples");
  }
  Eigen::MatrixXcd v(static_cast<Eigen::Index>(n), cols);
  for (Eigen::Index k = 0; k < cols; ++k) {
    require_in_disc(params[k].a);
    const BoundarySignal s = sample_multi_kernel(params[k], n);
    for (std::size_t j = 0; j < n; ++j) v(static_cast<Eigen::Index>(j), k) = s[j];
  }
  Eigen::VectorXcd rhs(static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) rhs(static_cast<Eigen::Index>(j)) = f[j];

  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(v);
  const Eigen::MatrixXcd r =
      qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < cols; ++k) {
    const double defect = std::norm(r(k, k)) / v.col(k).squaredNorm();
    if (!(defect >= GSState::kDependenceTolerance)) {
      fail(ErrorCode::IllConditioned,
           "kernel " + std::to_string(k + 1) +
               " is numerically dependent on the others (defect " +
               std::to_string(defect) + ")");
    }
  }
  Eigen::VectorXcd qtf = qr.householderQ().adjoint() * rhs;
  const Eigen::VectorXcd c = r.triangularView<Eigen::Upper>().solve(
      qtf.head(cols));
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
  y.head(cols) = qtf.head(cols);
  const Eigen::VectorXcd approx = qr.householderQ() * y;

  Projection out{std::vector<cplx>(c.data(), c.data() + cols), 1.0,
                 BoundarySignal::zeros(n)};
  std::vector<cplx> s(approx.data(), approx.data() + n);
  out.approximation = BoundarySignal(std::move(s));
  out.relative_error = relative_error(f, out.approximation);
  return out;
}

namespace {

// Best replacement for coordinate `skip`: returns (index, new error^2) or
// npos when no admissible candidate improves on `current_err2`.
struct Replacement {
  std::size_t index = ScanBest::npos;
  double err2 = 0.0;
};

Replacement best_replacement(const BoundarySignal& f,
                             const std::vector<ParamPoint>& params,
                             std::size_t skip, const Dictionary& dict,
                             const ScanOptions& scan, double& current_err2) {
  const std::size_t n = f.size();
  GSState state(n);
  for (std::size_t k = 0; k < params.size(); ++k) {
    if (k == skip) continue;
    const GSState::Extension ext =
        state.orthonormalize(make_atom(params[k], n).samples());
    state.push(params[k], ext.element);
  }
  const BoundarySignal h = f - state.project(f);
  const double h2 = h.energy();

  auto score2 = [&](std::span<const cplx> a) {
    double proj = 0.0;
    for (const auto& b : state.basis()) proj += std::norm(inner(a, b.samples()));
    const double defect = 1.0 - proj;
    if (defect < GSState::kDependenceTolerance) return -1.0;
    return std::norm(inner(h.samples(), a)) / defect;
  };

  const double cur = score2(make_atom(params[skip], n).samples());
  current_err2 = h2 - std::max(cur, 0.0);

  const ScanBest best = parallel_argmax(
      dict.size(), scan.workers,
      [&](std::size_t i, std::vector<cplx>& scratch) {
        const ParamPoint p = dict.param(i);
        for (std::size_t k = 0; k < params.size(); ++k) {
          if (k != skip && params[k] == p) return -1.0;
        }
        return score2(dict.atom(i, scratch));
      });
  if (!best.found()) return {};
  const double err2 = h2 - best.score;
  if (!(err2 < current_err2) || dict.param(best.index) == params[skip]) {
    return {};
  }
  return {best.index, err2};
}

}  // namespace

RefineResult refine(const BoundarySignal& f, const NTuple& initial,
                    const Dictionary& dict, const RefineOptions& options) {
  if (f.size() != dict.samples()) {
    fail(ErrorCode::Dimension, "signal and dictionary sample counts differ");
  }
  if (initial.params.empty()) {
    fail(ErrorCode::InvalidArgument, "empty tuple");
  }
  if (options.max_cycles < 0) {
    fail(ErrorCode::InvalidArgument, "max_cycles must be >= 0");
  }
  RefineResult out;
  out.tuple.params = initial.params;
  double err = project(f, out.tuple.params).relative_error;
  out.cycle_errors.push_back(err);
  for (int cycle = 0; cycle < options.max_cycles; ++cycle) {
    for (std::size_t j = 0; j < out.tuple.params.size(); ++j) {
      double current_err2 = 0.0;
      const Replacement r = best_replacement(f, out.tuple.params, j, dict,
                                             options.scan, current_err2);
      if (r.index == ScanBest::npos) continue;
      std::vector<ParamPoint> trial = out.tuple.params;
      trial[j] = dict.param(r.index);
      // Recheck from scratch so the error never increases.
      const double trial_err = project(f, trial).relative_error;
      if (trial_err < err) {
        out.tuple.params = std::move(trial);
        err = trial_err;
      }
    }
    ++out.cycles_run;
    const double gain = out.cycle_errors.back() - err;
    out.cycle_errors.push_back(err);
    if (gain < options.tol) break;
  }
  out.tuple.projection_error = err;
  return out;
}

NTuple initial_tuple_poafd(const BoundarySignal& f, const Dictionary& dict,
                           int n, const ScanOptions& scan) {
  const Decomposition d = poafd_run(f, dict, n, scan);
  NTuple t;
  for (const Step& s : d.steps) t.params.push_back(s.param);
  t.projection_error = project(f, t.params).relative_error;
  return t;
}

NTuple initial_tuple_random(const BoundarySignal& f, const Dictionary& dict,
                            int n, std::uint64_t seed) {
  if (n < 1 || static_cast<std::size_t>(n) > dict.size()) {
    fail(ErrorCode::InvalidArgument, "tuple size out of range");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, dict.size() - 1);
  NTuple t;
  while (t.params.size() < static_cast<std::size_t>(n)) {
    const ParamPoint p = dict.param(pick(rng));
    if (std::find(t.params.begin(), t.params.end(), p) == t.params.end()) {
      t.params.push_back(p);
    }
  }
  t.projection_error = project(f, t.params).relative_error;
  return t;
}

}  // namespace hardy
