// Copyright 2026 The hardyafd Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "hardy/errors.hpp"
#include "hardy/pursuit.hpp"

namespace hardy {

namespace {

constexpr double kTrimRelative = 1e-14;

}  // namespace

InnerOuter inner_outer_split(const BoundarySignal& r,
                             const UnwindConfig& config) {
  const std::size_t n = r.size();
  InnerOuter out{{}, r, true};
  const FourierCoeffs fc = fourier_coeffs(r);
  const std::size_t top = n / 2 >= 1 ? n / 2 - 1 : 0;
  std::vector<cplx> c(fc.coeffs.begin(), fc.coeffs.begin() + top + 1);
  double cmax = 0.0;
  for (const cplx& v : c) cmax = std::max(cmax, std::abs(v));
  if (!(cmax > 0.0)) return out;
  std::size_t deg = c.size() - 1;
  while (deg > 0 && std::abs(c[deg]) < kTrimRelative * cmax) --deg;
  if (deg == 0) return out;

  // Companion matrix of the monic polynomial sum_k (c_k / c_deg) z^k.
  const auto d = static_cast<Eigen::Index>(deg);
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < d; ++i) comp(i, d - 1) = -c[i] / c[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
  if (solver.info() != Eigen::Success) {
    out.converged = false;
    return out;
  }
  for (Eigen::Index i = 0; i < d; ++i) {
    const cplx w = solver.eigenvalues()(i);
    if (!(std::abs(w) <= 1.0 - config.delta)) continue;
    cplx p = 0.0;
    double scale = 0.0;
    for (std::size_t k = deg + 1; k-- > 0;) {
      p = p * w + c[k];
      scale = scale * std::abs(w) + std::abs(c[k]);
    }
    if (std::abs(p) <= config.backward_tol * scale) {
      out.inner.zeros.push_back(w);
    }
  }
  // Deterministic order of the recovered zeros.
  std::sort(out.inner.zeros.begin(), out.inner.zeros.end(),
            [](cplx a, cplx b) {
              if (a.real() != b.real()) return a.real() < b.real();
              return a.imag() < b.imag();
            });
  if (!out.inner.zeros.empty()) {
    out.outer = r.pointwise_quotient(sample_blaschke_product(out.inner, n));
  }
  return out;
}

Decomposition unwind_run(const BoundarySignal& f, int iters,
                         const UnwindConfig& config, const Dictionary* szego) {
  if (iters < 1) fail(ErrorCode::InvalidArgument, "iterations must be >= 1");
  if (!(f.energy() > 0.0)) fail(ErrorCode::DegenerateInput, "zero signal");
  const bool maximal = config.selection == UnwindSelection::Maximal;
  if (maximal) {
    if (szego == nullptr || szego->complete()) {
      fail(ErrorCode::InvalidArgument,
           "maximal unwinding needs a Szegő dictionary");
    }
    if (szego->samples() != f.size()) {
      fail(ErrorCode::Dimension, "dictionary sample count differs");
    }
  }
  const std::size_t n = f.size();
  Decomposition d{Method::Unwinding, DictKind::Szego,
                  szego ? szego->grid() : ParamGrid{1, 1, 0}, f,
                  BoundarySignal::zeros(n), {}};
  BoundarySignal r = f;
  std::vector<cplx> prefix(n, 1.0);
  for (int k = 0; k < iters; ++k) {
    const InnerOuter io = inner_outer_split(r, config);
    const BoundarySignal& o = io.outer;
    cplx a = 0.0;
    if (maximal) {
      const ScanBest best = parallel_argmax(
          szego->size(), config.scan.workers,
          [&](std::size_t i, std::vector<cplx>& scratch) {
            return std::abs(inner(o.samples(), szego->atom(i, scratch)));
          });
      if (!best.found()) fail(ErrorCode::DictionaryExhausted, "empty grid");
      a = szego->param(best.index).a;
    }
    const BoundarySignal e = sample_normalized_multi_kernel({0, a}, n);
    const cplx coeff = inner(o, e);
    const BoundarySignal inner_fn = sample_blaschke_product(io.inner, n);
    std::vector<cplx> next(n);
    std::vector<cplx> term(n);
    for (std::size_t j = 0; j < n; ++j) {
      const cplx z = BoundarySignal::grid_point(j, n);
      const cplx tau = mobius(a, z);
      term[j] = prefix[j] * inner_fn[j] * coeff * e[j];
      next[j] = (o[j] - coeff * e[j]) / tau;
      prefix[j] *= inner_fn[j] * tau;
    }
    d.approximation.add_scaled(1.0, term);
    r = BoundarySignal(std::move(next));
    const BoundarySignal res = f - d.approximation;
    Step s{{0, a}, coeff, res.energy(), std::sqrt(res.energy() / f.energy())};
    s.zeros_removed = static_cast<int>(io.inner.zeros.size());
    s.flagged = !io.converged;
    d.steps.push_back(s);
  }
  return d;
}

}  // namespace hardy
