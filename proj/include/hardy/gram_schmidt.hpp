// Copyright 2026 The hardyafd Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#ifndef HARDY_GRAM_SCHMIDT_HPP
#define HARDY_GRAM_SCHMIDT_HPP

#include <map>
#include <utility>
#include <vector>

#include "hardy/kernels.hpp"
#include "hardy/signal.hpp"

namespace hardy {

// Running orthonormal system (B_1, ..., B_k) with the parameters that produced
// it. Orthogonalization is classical Gram-Schmidt applied twice.
class GSState {
 public:
  static constexpr double kDependenceTolerance = 1e-10;

  explicit GSState(std::size_t samples) : samples_(samples) {}

  struct Extension {
    BoundarySignal element;  // Q(c) / ||Q(c)||
    double defect;           // ||Q(c)||^2 / ||c||^2
  };

  // Throws LinearDependence when the defect is below kDependenceTolerance.
  Extension orthonormalize(std::span<const cplx> candidate) const;

  void push(const ParamPoint& p, BoundarySignal element);

  std::size_t size() const noexcept { return basis_.size(); }
  std::size_t samples() const noexcept { return samples_; }
  const std::vector<BoundarySignal>& basis() const noexcept { return basis_; }
  const std::vector<ParamPoint>& selections() const noexcept {
    return selections_;
  }
  // Number of earlier selections sharing the parameter a.
  int multiplicity(cplx a) const;

  // sum_l <f, B_l> B_l
  BoundarySignal project(const BoundarySignal& f) const;
  // max |G - I| over the Gram matrix of the basis.
  double gram_deviation() const;

 private:
  std::size_t samples_;
  std::vector<BoundarySignal> basis_;
  std::vector<ParamPoint> selections_;
  std::map<std::pair<double, double>, int> multiplicity_;
};

GSState::Extension gs_extend(const GSState& state,
                             const BoundarySignal& candidate);

}  // namespace hardy

#endif  // HARDY_GRAM_SCHMIDT_HPP
