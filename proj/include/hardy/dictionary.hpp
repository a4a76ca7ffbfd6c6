// Copyright 2026 The hardyafd Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#ifndef HARDY_DICTIONARY_HPP
#define HARDY_DICTIONARY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hardy/kernels.hpp"
#include "hardy/signal.hpp"

namespace hardy {

// Polar discretization a = ((x-1)/X) e^{2 pi i (y-1)/Y} of the disc, x = 1..X,
// y = 1..Y, with the x = 1 ring collapsed to the single point a = 0.
// Candidates are ordered (n asc, x asc, y asc); the flat index is
// n * disc_count() + a_index, where a_index 0 is the origin and
// a_index = 1 + (x-2)*Y + (y-1) otherwise.
struct ParamGrid {
  int radial = 100;   // X
  int angular = 100;  // Y
  int n_max = 8;      // 0 selects the plain Szegő dictionary

  void validate() const;
  std::size_t disc_count() const;
  std::size_t size() const;
  cplx disc_point(std::size_t a_index) const;
  ParamPoint point(std::size_t index) const;
  // (n, x, y) as 1-based grid coordinates; the origin reports x = y = 1.
  struct Coordinates {
    int n, x, y;
  };
  Coordinates coordinates(std::size_t index) const;
};

std::vector<ParamPoint> enumerate(const ParamGrid& grid);

struct DictElement {
  ParamPoint param;
  BoundarySignal samples;  // k_{n,a} / ||k_{n,a}|| on the grid
  double raw_norm;         // ||k_{n,a}||
};

DictElement element(const ParamPoint& p, std::size_t samples);

// Element samples rescaled to unit discrete norm. The pursuit engines work on
// these so that every projection is an exact orthogonal projection in the
// sampled space.
BoundarySignal make_atom(const ParamPoint& p, std::size_t samples);

enum class CacheMode { Cached, Streamed };

// The enumerated grid together with its atoms, either precomputed or
// recomputed on demand (both give bit-identical samples).
class Dictionary {
 public:
  Dictionary(ParamGrid grid, std::size_t samples,
             CacheMode mode = CacheMode::Cached);

  const ParamGrid& grid() const noexcept { return grid_; }
  std::size_t samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return size_; }
  bool complete() const noexcept { return grid_.n_max > 0; }
  CacheMode mode() const noexcept { return mode_; }

  ParamPoint param(std::size_t index) const { return grid_.point(index); }

  // Atom of candidate `index`. In streamed mode the samples are written to
  // `scratch` and the returned span points into it.
  std::span<const cplx> atom(std::size_t index,
                             std::vector<cplx>& scratch) const;

 private:
  ParamGrid grid_;
  std::size_t samples_;
  std::size_t size_;
  CacheMode mode_;
  std::vector<cplx> cache_;
};

struct BvcTable {
  ParamGrid grid;
  std::size_t samples = 0;
  std::vector<double> scores;  // |<f, e_{n,a}>| in enumeration order

  double at(int n, std::size_t a_index) const;
  // max over the angular ring of radius (x-1)/X for fixed n.
  double ring_max(int n, int x) const;
};

BvcTable bvc_probe(const BoundarySignal& f, const ParamGrid& grid);

}  // namespace hardy

#endif  // HARDY_DICTIONARY_HPP
