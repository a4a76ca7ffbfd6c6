// Copyright 2026 The hardyafd Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

// Boundary-sampled signals of the Hardy space H^2 on the unit disc.
//
// A signal is stored by its values on the uniform circle grid
// t_j = 2*pi*j/N, j = 0..N-1 (the first sample sits at t = 0). Every
// inner product in the library is the Riemann sum
//
//     <f, g> = (1/N) * sum_j f_j * conj(g_j),
//
// which is exact for trigonometric polynomials of degree below N.

#ifndef HARDY_SIGNAL_HPP
#define HARDY_SIGNAL_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hardy {

using cplx = std::complex<double>;

class BoundarySignal {
 public:
  // Throws Dimension when fewer than two samples are given.
  explicit BoundarySignal(std::vector<cplx> samples);

  // Zero signal of length n.
  static BoundarySignal zeros(std::size_t n);

  // Samples fn(e^{i t_j}) on the n-point grid.
  template <class Fn>
  static BoundarySignal from_function(std::size_t n, Fn&& fn) {
    std::vector<cplx> s(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = fn(grid_point(j, n));
    return BoundarySignal(std::move(s));
  }

  static double grid_angle(std::size_t j, std::size_t n);
  static cplx grid_point(std::size_t j, std::size_t n);

  std::size_t size() const noexcept { return samples_.size(); }
  std::span<const cplx> samples() const noexcept { return samples_; }
  const cplx& operator[](std::size_t j) const { return samples_[j]; }

  // (1/N) sum |f_j|^2, identical to inner(f, f).real().
  double energy() const;
  double norm() const;

  BoundarySignal& operator+=(const BoundarySignal& other);
  BoundarySignal& operator-=(const BoundarySignal& other);
  BoundarySignal& operator*=(cplx factor);

  friend BoundarySignal operator+(BoundarySignal a, const BoundarySignal& b) {
    return a += b;
  }
  friend BoundarySignal operator-(BoundarySignal a, const BoundarySignal& b) {
    return a -= b;
  }
  friend BoundarySignal operator*(cplx c, BoundarySignal a) { return a *= c; }

  // Pointwise product and quotient (grids must match).
  BoundarySignal pointwise_product(const BoundarySignal& other) const;
  BoundarySignal pointwise_quotient(const BoundarySignal& other) const;

  // f + c * g without a temporary.
  void add_scaled(cplx c, std::span<const cplx> g);

 private:
  std::vector<cplx> samples_;
};

struct FourierCoeffs {
  // c_k for k = 0..N-1; bins above N/2 hold the negative frequencies k - N.
  std::vector<cplx> coeffs;
};

// Raw discrete inner product on equal-length spans.
cplx inner(std::span<const cplx> f, std::span<const cplx> g);
cplx inner(const BoundarySignal& f, const BoundarySignal& g);

FourierCoeffs fourier_coeffs(const BoundarySignal& f);
BoundarySignal synthesize(const FourierCoeffs& c);

// Keeps the mean and the positive frequencies, halves the Nyquist bin of an
// even-length grid and removes the negative frequencies.
BoundarySignal analytic_projection(const BoundarySignal& f);

// Analytic signal g+ of real samples g: its real part satisfies
// 2 Re(g+) - c0 = g, with c0 the mean of g.
BoundarySignal analytic_signal(std::span<const double> g);

// ||f - approx|| / ||f||; DegenerateInput when ||f|| = 0.
double relative_error(const BoundarySignal& f, const BoundarySignal& approx);

// CSV with a `t,re,im` or `re,im` header. For `t,re,im` the t column must be
// the uniform ascending grid 2*pi*j/N.
BoundarySignal read_signal_csv(const std::string& path);
void write_signal_csv(const BoundarySignal& f, const std::string& path);

}  // namespace hardy

#endif  // HARDY_SIGNAL_HPP
