// Copyright 2026 The hardyafd Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "hardy/gram_schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hardy/errors.hpp"

namespace hardy {

GSState::Extension GSState::orthonormalize(
    std::span<const cplx> candidate) const {
  if (candidate.size() != samples_) {
    fail(ErrorCode::Dimension, "candidate length does not match the basis");
  }
  std::vector<cplx> v(candidate.begin(), candidate.end());
  const double c_energy = inner(v, v).real();
  if (!(c_energy > 0.0)) {
    fail(ErrorCode::LinearDependence, "zero candidate");
  }
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis_) {
      const cplx c = inner(v, b.samples());
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * b[j];
    }
  }
  const double q_energy = inner(v, v).real();
  const double defect = q_energy / c_energy;
  if (!(defect >= kDependenceTolerance)) {
    fail(ErrorCode::LinearDependence,
         "candidate lies in the span of the current system (defect " +
             std::to_string(defect) + ")");
  }
  const double inv = 1.0 / std::sqrt(q_energy);
  for (auto& s : v) s *= inv;
  return {BoundarySignal(std::move(v)), defect};
}

void GSState::push(const ParamPoint& p, BoundarySignal element) {
  if (element.size() != samples_) {
    fail(ErrorCode::Dimension, "basis element length mismatch");
  }
  basis_.push_back(std::move(element));
  selections_.push_back(p);
  ++multiplicity_[{p.a.real(), p.a.imag()}];
}

int GSState::multiplicity(cplx a) const {
  auto it = multiplicity_.find({a.real(), a.imag()});
  return it == multiplicity_.end() ? 0 : it->second;
}

BoundarySignal GSState::project(const BoundarySignal& f) const {
  BoundarySignal out = BoundarySignal::zeros(f.size());
  for (const auto& b : basis_) out.add_scaled(inner(f, b), b.samples());
  return out;
}

double GSState::gram_deviation() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      const cplx g = inner(basis_[i], basis_[j]);
      worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

GSState::Extension gs_extend(const GSState& state,
                             const BoundarySignal& candidate) {
  return state.orthonormalize(candidate.samples());
}

}  // namespace hardy
