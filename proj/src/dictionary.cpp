// Copyright 2026 The hardyafd Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "hardy/dictionary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hardy/errors.hpp"
#include "hardy/scan.hpp"

namespace hardy {

unsigned resolve_workers(unsigned requested, std::size_t count) {
  unsigned w = requested;
  if (w == 0) w = std::max(1u, std::thread::hardware_concurrency());
  // Small scans are not worth a thread.
  const std::size_t max_useful = std::max<std::size_t>(1, count / 2048);
  return static_cast<unsigned>(std::min<std::size_t>(w, max_useful));
}

void ParamGrid::validate() const {
  if (radial < 1 || angular < 1) {
    fail(ErrorCode::InvalidArgument, "grid needs X >= 1 and Y >= 1");
  }
  if (n_max < 0) fail(ErrorCode::InvalidArgument, "n_max must be >= 0");
}

std::size_t ParamGrid::disc_count() const {
  return static_cast<std::size_t>(radial - 1) *
             static_cast<std::size_t>(angular) +
         1;
}

std::size_t ParamGrid::size() const {
  return disc_count() * static_cast<std::size_t>(n_max + 1);
}

cplx ParamGrid::disc_point(std::size_t a_index) const {
  if (a_index >= disc_count()) {
    fail(ErrorCode::IndexOutOfRange, "disc index out of range");
  }
  if (a_index == 0) return {0.0, 0.0};
  const std::size_t i = a_index - 1;
  const int x = 2 + static_cast<int>(i / static_cast<std::size_t>(angular));
  const int y = 1 + static_cast<int>(i % static_cast<std::size_t>(angular));
  const double r = static_cast<double>(x - 1) / radial;
  const double phi = 2.0 * std::numbers::pi * (y - 1) / angular;
  return std::polar(r, phi);
}

ParamPoint ParamGrid::point(std::size_t index) const {
  const std::size_t dc = disc_count();
  if (index >= size()) fail(ErrorCode::IndexOutOfRange, "grid index");
  return {static_cast<int>(index / dc), disc_point(index % dc)};
}

ParamGrid::Coordinates ParamGrid::coordinates(std::size_t index) const {
  const std::size_t dc = disc_count();
  const int n = static_cast<int>(index / dc);
  const std::size_t a = index % dc;
  if (a == 0) return {n, 1, 1};
  const std::size_t i = a - 1;
  return {n, 2 + static_cast<int>(i / static_cast<std::size_t>(angular)),
          1 + static_cast<int>(i % static_cast<std::size_t>(angular))};
}

std::vector<ParamPoint> enumerate(const ParamGrid& grid) {
  grid.validate();
  std::vector<ParamPoint> out;
  out.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out.push_back(grid.point(i));
  return out;
}

DictElement element(const ParamPoint& p, std::size_t samples) {
  require_in_disc(p.a);
  return {p, sample_normalized_multi_kernel(p, samples),
          std::sqrt(multi_kernel_norm_sq(p))};
}

BoundarySignal make_atom(const ParamPoint& p, std::size_t samples) {
  BoundarySignal s = sample_normalized_multi_kernel(p, samples);
  const double nrm = s.norm();
  s *= cplx(1.0 / nrm, 0.0);
  return s;
}

Dictionary::Dictionary(ParamGrid grid, std::size_t samples, CacheMode mode)
    : grid_(grid), samples_(samples), mode_(mode) {
  grid_.validate();
  if (samples_ < 2) fail(ErrorCode::Dimension, "need at least 2 samples");
  size_ = grid_.size();
  if (mode_ == CacheMode::Cached) {
    cache_.resize(size_ * samples_);
    parallel_chunks(size_, 0,
                    [&](unsigned, std::size_t begin, std::size_t end,
                        std::vector<cplx>&) {
                      for (std::size_t i = begin; i < end; ++i) {
                        const BoundarySignal a = make_atom(grid_.point(i),
                                                           samples_);
                        std::copy(a.samples().begin(), a.samples().end(),
                                  cache_.begin() + i * samples_);
                      }
                    });
  }
}

std::span<const cplx> Dictionary::atom(std::size_t index,
                                       std::vector<cplx>& scratch) const {
  if (index >= size_) fail(ErrorCode::IndexOutOfRange, "dictionary index");
  if (mode_ == CacheMode::Cached) {
    return {cache_.data() + index * samples_, samples_};
  }
  const BoundarySignal a = make_atom(grid_.point(index), samples_);
  scratch.assign(a.samples().begin(), a.samples().end());
  return scratch;
}

double BvcTable::at(int n, std::size_t a_index) const {
  return scores.at(static_cast<std::size_t>(n) * grid.disc_count() + a_index);
}

double BvcTable::ring_max(int n, int x) const {
  if (x == 1) return at(n, 0);
  double best = 0.0;
  for (int y = 1; y <= grid.angular; ++y) {
    const std::size_t a_index = 1 +
                                static_cast<std::size_t>(x - 2) * grid.angular +
                                static_cast<std::size_t>(y - 1);
    best = std::max(best, at(n, a_index));
  }
  return best;
}

BvcTable bvc_probe(const BoundarySignal& f, const ParamGrid& grid) {
  grid.validate();
  BvcTable table{grid, f.size(), std::vector<double>(grid.size())};
  parallel_chunks(grid.size(), 0,
                  [&](unsigned, std::size_t begin, std::size_t end,
                      std::vector<cplx>&) {
                    for (std::size_t i = begin; i < end; ++i) {
                      const DictElement e = element(grid.point(i), f.size());
                      table.scores[i] = std::abs(inner(f, e.samples));
                    }
                  });
  return table;
}

}  // namespace hardy
