// Copyright 2026 The hardyafd Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include <doctest.h>

#include <cmath>
#include <numeric>

#include "hardy/errors.hpp"
#include "hardy/experiments.hpp"
#include "hardy/gram_schmidt.hpp"
#include "hardy/pursuit.hpp"
#include "oracles.hpp"

using namespace hardy;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(0);
}

const Dictionary& small_szego() {
  static const Dictionary d({20, 16, 0}, 100);
  return d;
}

const Dictionary& small_complete() {
  static const Dictionary d({20, 16, 3}, 100);
  return d;
}

const Dictionary& full_szego() {
  static const Dictionary d({100, 100, 0}, 100);
  return d;
}

const Dictionary& full_complete() {
  static const Dictionary d({100, 100, 8}, 100);
  return d;
}

BoundarySignal f1() { return generate(named_signal("f1"), 100); }

BoundarySignal atom_of(const Dictionary& d, std::size_t i) {
  std::vector<cplx> s;
  const auto a = d.atom(i, s);
  return BoundarySignal(std::vector<cplx>(a.begin(), a.end()));
}

double coeff_energy(const Decomposition& d, std::size_t steps) {
  double s = 0.0;
  for (std::size_t k = 0; k < steps; ++k) s += std::norm(d.steps[k].coefficient);
  return s;
}

}  // namespace

TEST_CASE("GS extension examples") {
  GSState st(256);
  const auto c = make_atom({0, 0.7}, 256);
  const auto ext = st.orthonormalize(c.samples());
  CHECK(ext.defect == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(relative_error(c, ext.element) < 1e-14);

  GSState s0(4096);
  s0.push({0, 0.0}, element({0, 0.0}, 4096).samples);
  const auto e5 = element({0, 0.5}, 4096).samples;
  const auto x = s0.orthonormalize(e5.samples());
  CHECK(std::abs(x.defect - 0.25) < 1e-10);
  CHECK(std::abs(inner(x.element, s0.basis()[0])) < 1e-10);

  s0.push({0, 0.5}, x.element);
  const auto combo = 2.0 * s0.basis()[0] + cplx(0, 1) * s0.basis()[1];
  CHECK(code_of([&] { s0.orthonormalize(combo.samples()); }) ==
        ErrorCode::LinearDependence);
  CHECK(s0.multiplicity(0.5) == 1);
  CHECK(s0.gram_deviation() < 1e-12);
}

TEST_CASE("GA recovers an exact dictionary member in one step") {
  const auto& d = small_szego();
  const std::size_t q = 137;
  const auto f = cplx(0.3, -1.2) * atom_of(d, q);
  const auto r = ga_run(f, d, 1);
  CHECK(r.steps[0].param == d.param(q));
  CHECK(r.final_relative_error() < 1e-12);
}

TEST_CASE("OGA recovers a two-element span") {
  const auto& d = small_szego();
  // Nearly orthogonal pair with a dominant first term, so the first greedy
  // pick is one of the two.
  std::size_t i = 0, j = 0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (std::abs(d.param(k).a - cplx(0.9)) < 1e-12) i = k;
    if (std::abs(d.param(k).a - cplx(-0.9)) < 1e-12) j = k;
  }
  REQUIRE(i != j);
  const auto f = atom_of(d, i) + cplx(0.1, 0.2) * atom_of(d, j);
  const auto r = oga_run(f, d, 2);
  CHECK(r.steps[0].param == d.param(i));
  CHECK(r.final_relative_error() < 1e-8);
}

TEST_CASE("AFD and POAFD recover c * e_b in one step") {
  const auto& d = small_szego();
  const ParamPoint b = d.param(250);
  const auto f = cplx(-0.4, 0.8) * element(b, 100).samples;
  for (const auto& r : {afd_run(f, d, 1), poafd_run(f, d, 1)}) {
    CHECK(r.steps[0].param == b);
    CHECK(r.final_relative_error() < 1e-12);
  }
}

TEST_CASE("monotone residuals and energy conservation") {
  const auto f = f1();
  for (const Dictionary* d : {&small_szego(), &small_complete()}) {
    for (Method m : {Method::GA, Method::OGA, Method::POAFD, Method::AFD}) {
      if (m == Method::AFD && d->complete()) continue;
      const auto r = run_pursuit(m, f, *d, 8);
      for (std::size_t k = 1; k < r.steps.size(); ++k) {
        CHECK(r.steps[k].residual_energy <= r.steps[k - 1].residual_energy + 1e-15);
      }
      if (m == Method::GA) continue;
      for (std::size_t k = 0; k < r.steps.size(); ++k) {
        const double lhs = f.energy();
        const double rhs = coeff_energy(r, k + 1) + r.steps[k].residual_energy;
        CHECK(std::abs(lhs - rhs) <= 1e-8 * lhs);
      }
    }
  }
}

TEST_CASE("GA remainder is orthogonal to the last selection") {
  const auto f = f1();
  const auto& d = small_complete();
  const auto r = ga_run(f, d, 4);
  // Rebuild the remainder from the reported steps.
  BoundarySignal g = f;
  for (const Step& s : r.steps) {
    const auto a = make_atom(s.param, 100);
    g.add_scaled(-s.coefficient, a.samples());
    CHECK(std::abs(inner(g, a)) < 1e-10);
  }
}

TEST_CASE("step-two superiority chain from a shared first selection") {
  const auto f = f1();
  for (const Dictionary* d : {&small_szego(), &small_complete()}) {
    const auto ga = ga_run(f, *d, 2);
    const auto oga = oga_run(f, *d, 2);
    const auto po = poafd_run(f, *d, 2);
    REQUIRE(ga.steps[0].param == oga.steps[0].param);
    REQUIRE(ga.steps[0].param == po.steps[0].param);
    CHECK(po.steps[1].relative_error <= oga.steps[1].relative_error + 1e-10);
    CHECK(oga.steps[1].relative_error <= ga.steps[1].relative_error + 1e-10);
  }
}

TEST_CASE("POAFD scores dominate OGA scores candidate by candidate") {
  const auto f = f1();
  const auto& d = small_complete();
  const auto r = poafd_run(f, d, 3);
  GSState st(100);
  for (const Step& s : r.steps) {
    const auto ext = st.orthonormalize(make_atom(s.param, 100).samples());
    st.push(s.param, ext.element);
    const auto sc = candidate_scores(f, st, d);
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (sc.oga[i] < 0) continue;
      REQUIRE(sc.poafd[i] >= sc.oga[i]);
    }
  }
}

TEST_CASE("POAFD selection equals the argmax of the candidate scores") {
  const auto f = f1();
  const auto& d = small_complete();
  const auto r = poafd_run(f, d, 4);
  GSState st(100);
  for (std::size_t k = 0; k < r.steps.size(); ++k) {
    const auto sc = candidate_scores(f, st, d);
    const std::size_t best = static_cast<std::size_t>(
        std::max_element(sc.poafd.begin(), sc.poafd.end()) - sc.poafd.begin());
    CHECK(d.param(best) == r.steps[k].param);
    const auto ext = st.orthonormalize(make_atom(r.steps[k].param, 100).samples());
    st.push(r.steps[k].param, ext.element);
  }
}

TEST_CASE("Szegő POAFD turns a repeated parameter into the next multiple kernel") {
  // One disc point only: every step must re-select a = 0 with rising order.
  const Dictionary d({1, 1, 0}, 64);
  const auto f = BoundarySignal::from_function(
      64, [](cplx z) { return 1.0 + 0.5 * z + 0.25 * z * z; });
  const auto r = poafd_run(f, d, 3);
  for (int k = 0; k < 3; ++k) CHECK(r.steps[k].param.n == k);
  CHECK(r.final_relative_error() < 1e-12);
}

TEST_CASE("exhausted dictionaries and invalid calls") {
  const auto f = BoundarySignal::from_function(32, [](cplx z) { return 1.0 + z; });
  const Dictionary tiny({1, 1, 2}, 32);
  CHECK(code_of([&] { poafd_run(f, tiny, 4); }) == ErrorCode::DictionaryExhausted);
  CHECK(code_of([&] { oga_run(f, Dictionary({1, 1, 0}, 32), 2); }) ==
        ErrorCode::DictionaryExhausted);
  CHECK(code_of([&] { afd_run(f, tiny, 1); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { ga_run(f, small_szego(), 1); }) == ErrorCode::Dimension);
  CHECK(code_of([&] { ga_run(f, tiny, 0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { ga_run(BoundarySignal::zeros(32), tiny, 1); }) ==
        ErrorCode::DegenerateInput);
}

TEST_CASE("AFD coefficients equal <f, B_k> for the TM system") {
  const auto f = f1();
  const auto r = afd_run(f, full_szego(), 3);
  std::vector<cplx> zeros;
  const std::vector<cplx> fs(f.samples().begin(), f.samples().end());
  for (const Step& s : r.steps) {
    zeros.push_back(s.param.a);
    const auto bk = oracle::samples(
        [&](cplx z) { return oracle::tm(zeros, static_cast<int>(zeros.size()), z); }, 100);
    CHECK(std::abs(s.coefficient - oracle::dot(fs, bk)) < 1e-6);
  }
  CHECK(std::abs(r.final_relative_error() - 0.4246) <= 0.02);
  CHECK(std::abs(r.final_relative_error() -
                 poafd_run(f, full_szego(), 3).final_relative_error()) < 5e-3);
}

TEST_CASE("backward shift keeps the remainder analytic") {
  const std::size_t n = 256;
  const auto f = generate(named_signal("f1"), n);
  const cplx a(0.43, -0.2);
  const auto e = element({0, a}, n).samples;
  const cplx c = inner(f, e);
  std::vector<cplx> q(n);
  for (std::size_t j = 0; j < n; ++j) {
    const cplx z = BoundarySignal::grid_point(j, n);
    q[j] = (f[j] - c * e[j]) * (1.0 - std::conj(a) * z) / (z - a);
  }
  const auto coeffs = oracle::dft(q);
  double neg = 0.0, total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    total += std::norm(coeffs[k]);
    if (k > n / 2) neg += std::norm(coeffs[k]);
  }
  CHECK(std::sqrt(neg / total) < 1e-6);
}

TEST_CASE("residual bound for finite combinations of atoms") {
  const auto& d = small_complete();
  const std::vector<std::pair<std::size_t, cplx>> terms = {
      {17, {0.8, 0.1}}, {402, {-0.3, 0.5}}, {801, {0.2, -0.2}}, {1100, {0.1, 0.0}}};
  BoundarySignal f = BoundarySignal::zeros(100);
  double m = 0.0;
  for (const auto& [i, c] : terms) {
    f.add_scaled(c, atom_of(d, i).samples());
    m += std::abs(c);
  }
  for (Method meth : {Method::GA, Method::OGA, Method::POAFD}) {
    const auto r = run_pursuit(meth, f, d, 10);
    for (std::size_t k = 0; k < r.steps.size(); ++k) {
      CHECK(std::sqrt(r.steps[k].residual_energy) <=
            m / std::sqrt(static_cast<double>(k + 1)) + 1e-8);
    }
  }
}

TEST_CASE("unwinding a pure inner function") {
  const auto f = BoundarySignal::from_function(100, [](cplx z) { return z * z * z; });
  const auto io = inner_outer_split(f);
  CHECK(io.inner.zeros.size() == 3);
  const auto r = unwind_run(f, 1);
  CHECK(r.steps[0].zeros_removed == 3);
  CHECK_FALSE(r.steps[0].flagged);
  CHECK(r.final_relative_error() < 1e-10);
}

TEST_CASE("unwinding recovers interior zeros") {
  const std::vector<cplx> zs = {{0.3, 0.2}, {-0.5, 0.1}};
  const auto f = BoundarySignal::from_function(128, [&](cplx z) {
    return (z - zs[0]) * (z - zs[1]) * (2.0 + 0.4 * z);
  });
  const auto io = inner_outer_split(f);
  REQUIRE(io.inner.zeros.size() == 2);
  for (const cplx& w : zs) {
    double best = 1.0;
    for (const cplx& v : io.inner.zeros) best = std::min(best, std::abs(v - w));
    CHECK(best < 1e-8);
  }
}

TEST_CASE("maximal unwinding of an outer function is an AFD step") {
  const auto f = BoundarySignal::from_function(
      100, [](cplx z) { return 2.0 + 0.5 * z + 0.3 * z * z; });
  UnwindConfig cfg;
  cfg.selection = UnwindSelection::Maximal;
  const auto& d = small_szego();
  const auto uw = unwind_run(f, 1, cfg, &d);
  const auto afd = afd_run(f, d, 1);
  CHECK(uw.steps[0].zeros_removed == 0);
  CHECK(uw.steps[0].param == afd.steps[0].param);
  CHECK(std::abs(uw.steps[0].coefficient - afd.steps[0].coefficient) < 1e-14);
  CHECK(std::abs(uw.final_relative_error() - afd.final_relative_error()) < 1e-14);
  CHECK(code_of([&] { unwind_run(f, 1, cfg, nullptr); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("greedy errors on the first test signal") {
  const auto f = f1();
  CHECK(std::abs(ga_run(f, full_szego(), 3).final_relative_error() - 0.4581) <= 0.02);
  CHECK(std::abs(oga_run(f, full_szego(), 3).final_relative_error() - 0.4314) <= 0.02);
  CHECK(std::abs(poafd_run(f, full_szego(), 3).final_relative_error() - 0.4246) <= 0.02);
  CHECK(std::abs(ga_run(f, full_complete(), 3).final_relative_error() - 0.2941) <= 0.02);
  CHECK(std::abs(oga_run(f, full_complete(), 3).final_relative_error() - 0.2733) <= 0.02);
  CHECK(std::abs(poafd_run(f, full_complete(), 3).final_relative_error() - 0.2590) <= 0.02);
}

TEST_CASE("complete POAFD drives the first test signal to zero") {
  const auto r = poafd_run(f1(), full_complete(), 30);
  CHECK(r.final_relative_error() < 1e-2);
}

TEST_CASE("POAFD trajectory on the second test signal") {
  const auto f = generate(named_signal("f2"), 100);
  const auto c = poafd_run(f, full_complete(), 9);
  CHECK(std::abs(c.steps[0].relative_error - 0.7306) <= 0.02);
  CHECK(std::abs(c.steps[3].relative_error - 0.1334) <= 0.03);
  CHECK(std::abs(c.steps[8].relative_error - 0.0173) <= 0.01);
  const auto s = poafd_run(f, full_szego(), 18);
  CHECK(std::abs(s.steps[17].relative_error - 0.0173) <= 0.01);
}

TEST_CASE("results do not depend on the worker count") {
  const auto f = f1();
  const auto a = poafd_run(f, full_complete(), 4, {1});
  const auto b = poafd_run(f, full_complete(), 4, {3});
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(a.steps[k].param == b.steps[k].param);
    CHECK(a.steps[k].coefficient == b.steps[k].coefficient);
  }
}
