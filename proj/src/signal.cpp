// Copyright 2026 The hardyafd Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "hardy/signal.hpp"

#include <fftw3.h>

#include <cmath>
#include <fstream>
#include <mutex>
#include <numbers>
#include <sstream>

#include "hardy/errors.hpp"

namespace hardy {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Dimension: return "dimension";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::DegenerateInput: return "degenerate_input";
    case ErrorCode::LinearDependence: return "linear_dependence";
    case ErrorCode::DictionaryExhausted: return "dictionary_exhausted";
    case ErrorCode::NearZeroBoundary: return "near_zero_boundary";
    case ErrorCode::IndexOutOfRange: return "index_out_of_range";
    case ErrorCode::InvalidSpec: return "invalid_spec";
    case ErrorCode::IllConditioned: return "ill_conditioned";
    case ErrorCode::Io: return "io";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::InvalidArgument: return "invalid_argument";
  }
  return "unknown";
}

namespace {

// FFTW planning is not thread-safe; execution on a private plan is.
std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

// Unnormalized DFT in the given direction.
std::vector<cplx> dft(std::span<const cplx> in, int sign) {
  const int n = static_cast<int>(in.size());
  std::vector<cplx> src(in.begin(), in.end());
  std::vector<cplx> out(in.size());
  auto* src_ptr = reinterpret_cast<fftw_complex*>(src.data());
  auto* out_ptr = reinterpret_cast<fftw_complex*>(out.data());
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_planner_mutex());
    plan = fftw_plan_dft_1d(n, src_ptr, out_ptr, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    fail(ErrorCode::Dimension, "signal length mismatch: " + std::to_string(a) +
                                   " vs " + std::to_string(b));
  }
}

}  // namespace

BoundarySignal::BoundarySignal(std::vector<cplx> samples)
    : samples_(std::move(samples)) {
  if (samples_.size() < 2) {
    fail(ErrorCode::Dimension, "a boundary signal needs at least 2 samples");
  }
}

BoundarySignal BoundarySignal::zeros(std::size_t n) {
  return BoundarySignal(std::vector<cplx>(n));
}

double BoundarySignal::grid_angle(std::size_t j, std::size_t n) {
  return 2.0 * std::numbers::pi * static_cast<double>(j) /
         static_cast<double>(n);
}

cplx BoundarySignal::grid_point(std::size_t j, std::size_t n) {
  const double t = grid_angle(j, n);
  return {std::cos(t), std::sin(t)};
}

double BoundarySignal::energy() const { return inner(*this, *this).real(); }

double BoundarySignal::norm() const { return std::sqrt(energy()); }

BoundarySignal& BoundarySignal::operator+=(const BoundarySignal& other) {
  require_same_size(size(), other.size());
  for (std::size_t j = 0; j < size(); ++j) samples_[j] += other.samples_[j];
  return *this;
}

BoundarySignal& BoundarySignal::operator-=(const BoundarySignal& other) {
  require_same_size(size(), other.size());
  for (std::size_t j = 0; j < size(); ++j) samples_[j] -= other.samples_[j];
  return *this;
}

BoundarySignal& BoundarySignal::operator*=(cplx factor) {
  for (auto& s : samples_) s *= factor;
  return *this;
}

BoundarySignal BoundarySignal::pointwise_product(
    const BoundarySignal& other) const {
  require_same_size(size(), other.size());
  std::vector<cplx> out(size());
  for (std::size_t j = 0; j < size(); ++j) out[j] = samples_[j] * other[j];
  return BoundarySignal(std::move(out));
}

BoundarySignal BoundarySignal::pointwise_quotient(
    const BoundarySignal& other) const {
  require_same_size(size(), other.size());
  std::vector<cplx> out(size());
  for (std::size_t j = 0; j < size(); ++j) out[j] = samples_[j] / other[j];
  return BoundarySignal(std::move(out));
}

void BoundarySignal::add_scaled(cplx c, std::span<const cplx> g) {
  require_same_size(size(), g.size());
  for (std::size_t j = 0; j < size(); ++j) samples_[j] += c * g[j];
}

cplx inner(std::span<const cplx> f, std::span<const cplx> g) {
  require_same_size(f.size(), g.size());
  // Written out in real arithmetic so that inner(f, g) == conj(inner(g, f))
  // holds bit for bit.
  double re = 0.0;
  double im = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double fr = f[j].real(), fi = f[j].imag();
    const double gr = g[j].real(), gi = g[j].imag();
    re += fr * gr + fi * gi;
    im += fi * gr - fr * gi;
  }
  const double n = static_cast<double>(f.size());
  return {re / n, im / n};
}

cplx inner(const BoundarySignal& f, const BoundarySignal& g) {
  return inner(f.samples(), g.samples());
}

FourierCoeffs fourier_coeffs(const BoundarySignal& f) {
  auto c = dft(f.samples(), FFTW_FORWARD);
  const double n = static_cast<double>(f.size());
  for (auto& v : c) v /= n;
  return {std::move(c)};
}

BoundarySignal synthesize(const FourierCoeffs& c) {
  return BoundarySignal(dft(c.coeffs, FFTW_BACKWARD));
}

BoundarySignal analytic_projection(const BoundarySignal& f) {
  auto c = fourier_coeffs(f);
  const std::size_t n = c.coeffs.size();
  const std::size_t half = n / 2;
  for (std::size_t k = half + 1; k < n; ++k) c.coeffs[k] = 0.0;
  if (n % 2 == 0) c.coeffs[half] *= 0.5;
  return synthesize(c);
}

BoundarySignal analytic_signal(std::span<const double> g) {
  std::vector<cplx> s(g.begin(), g.end());
  return analytic_projection(BoundarySignal(std::move(s)));
}

double relative_error(const BoundarySignal& f, const BoundarySignal& approx) {
  const double nf = f.norm();
  if (!(nf > 0.0)) {
    fail(ErrorCode::DegenerateInput, "relative error of a zero-norm signal");
  }
  return (f - approx).norm() / nf;
}

BoundarySignal read_signal_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open " + path);
  std::string header;
  if (!std::getline(in, header)) fail(ErrorCode::Parse, path + ": empty file");
  if (!header.empty() && header.back() == '\r') header.pop_back();
  bool with_t;
  if (header == "t,re,im") {
    with_t = true;
  } else if (header == "re,im") {
    with_t = false;
  } else {
    fail(ErrorCode::Parse, path + ": expected header `t,re,im` or `re,im`");
  }

  std::vector<double> ts;
  std::vector<cplx> samples;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> vals;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        vals.push_back(std::stod(cell, &used));
        if (used != cell.size() && cell.find_first_not_of(" \t", used) !=
                                       std::string::npos) {
          throw std::invalid_argument(cell);
        }
      } catch (const std::exception&) {
        fail(ErrorCode::Parse, path + ":" + std::to_string(line_no) +
                                   ": not a number: '" + cell + "'");
      }
    }
    const std::size_t want = with_t ? 3 : 2;
    if (vals.size() != want) {
      fail(ErrorCode::Parse, path + ":" + std::to_string(line_no) +
                                 ": expected " + std::to_string(want) +
                                 " columns");
    }
    if (with_t) ts.push_back(vals[0]);
    samples.emplace_back(vals[want - 2], vals[want - 1]);
  }
  if (samples.size() < 2) {
    fail(ErrorCode::Dimension, path + ": need at least 2 samples");
  }
  if (with_t) {
    const std::size_t n = samples.size();
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(ts[j] - BoundarySignal::grid_angle(j, n)) > 1e-6 * step) {
        fail(ErrorCode::Parse,
             path + ": t column is not the uniform grid 2*pi*j/N at row " +
                 std::to_string(j + 1));
      }
    }
  }
  return BoundarySignal(std::move(samples));
}

void write_signal_csv(const BoundarySignal& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::Io, "cannot write " + path);
  out << "t,re,im\n";
  char buf[96];
  for (std::size_t j = 0; j < f.size(); ++j) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n",
                  BoundarySignal::grid_angle(j, f.size()), f[j].real(),
                  f[j].imag());
    out << buf;
  }
  if (!out) fail(ErrorCode::Io, "write failed: " + path);
}

}  // namespace hardy
