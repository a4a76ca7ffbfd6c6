// Copyright 2026 The hardyafd Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "hardy/pursuit.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

#include "hardy/errors.hpp"

namespace hardy {

const char* method_name(Method m) {
  switch (m) {
    case Method::GA: return "ga";
    case Method::OGA: return "oga";
    case Method::AFD: return "afd";
    case Method::POAFD: return "poafd";
    case Method::Unwinding: return "unwinding";
  }
  return "?";
}

const char* dict_kind_name(DictKind d) {
  return d == DictKind::Szego ? "szego" : "complete";
}

Method parse_method(std::string_view name) {
  if (name == "ga") return Method::GA;
  if (name == "oga") return Method::OGA;
  if (name == "afd") return Method::AFD;
  if (name == "poafd") return Method::POAFD;
  if (name == "unwinding") return Method::Unwinding;
  fail(ErrorCode::InvalidArgument, "unknown method '" + std::string(name) + "'");
}

DictKind parse_dict_kind(std::string_view name) {
  if (name == "szego") return DictKind::Szego;
  if (name == "complete") return DictKind::Complete;
  fail(ErrorCode::InvalidArgument,
       "unknown dictionary '" + std::string(name) + "'");
}

double Decomposition::final_relative_error() const {
  return steps.empty() ? 1.0 : steps.back().relative_error;
}

namespace {

void check_inputs(const BoundarySignal& f, const Dictionary& dict, int iters) {
  if (f.size() != dict.samples()) {
    fail(ErrorCode::Dimension, "signal has " + std::to_string(f.size()) +
                                   " samples, dictionary expects " +
                                   std::to_string(dict.samples()));
  }
  if (iters < 1) fail(ErrorCode::InvalidArgument, "iterations must be >= 1");
  if (!(f.energy() > 0.0)) fail(ErrorCode::DegenerateInput, "zero signal");
}

Decomposition start(Method m, const BoundarySignal& f, const Dictionary& dict) {
  return {m,
          dict.complete() ? DictKind::Complete : DictKind::Szego,
          dict.grid(),
          f,
          BoundarySignal::zeros(f.size()),
          {}};
}

Step make_step(const ParamPoint& p, cplx coeff, const BoundarySignal& f,
               const BoundarySignal& approx) {
  const BoundarySignal r = f - approx;
  const double e = r.energy();
  return {p, coeff, e, std::sqrt(e / f.energy())};
}

// Shared driver for OGA and POAFD. With `multiples` set, a selected Szegő
// parameter is replaced by its next multiple kernel.
class OrthoPursuit {
 public:
  OrthoPursuit(const BoundarySignal& f, const Dictionary& dict,
               const ScanOptions& scan, bool poafd)
      : f_(f),
        dict_(dict),
        scan_(scan),
        poafd_(poafd),
        multiples_(poafd && !dict.complete()),
        state_(f.size()),
        residual_(f),
        proj_(dict.size(), 0.0),
        order_(dict.size(), 0) {}

  Decomposition run(int iters) {
    Decomposition d = start(poafd_ ? Method::POAFD : Method::OGA, f_, dict_);
    for (int k = 0; k < iters; ++k) {
      const ScanBest best = parallel_argmax(
          dict_.size(), scan_.workers,
          [&](std::size_t i, std::vector<cplx>& scratch) {
            const double defect = 1.0 - proj_[i];
            if (defect < GSState::kDependenceTolerance) return -1.0;
            const double s = std::abs(inner(residual_.samples(),
                                            atom(i, scratch)));
            return poafd_ ? s / std::sqrt(defect) : s;
          },
          [&](std::size_t i) {
            return static_cast<std::uint64_t>(order_[i]) * dict_.size() + i;
          });
      if (!best.found()) {
        fail(ErrorCode::DictionaryExhausted,
             "no linearly independent candidate left at step " +
                 std::to_string(k + 1));
      }
      const std::size_t q = best.index;
      ParamPoint p = dict_.param(q);
      if (multiples_) p.n = order_[q];

      std::vector<cplx> scratch;
      GSState::Extension ext = state_.orthonormalize(atom(q, scratch));
      const cplx coeff = inner(f_, ext.element);
      residual_.add_scaled(-coeff, ext.element.samples());
      d.approximation.add_scaled(coeff, ext.element.samples());
      state_.push(p, ext.element);
      update_projections(state_.basis().back());
      if (multiples_) advance_order(q);
      d.steps.push_back(make_step(p, coeff, f_, d.approximation));
    }
    return d;
  }

 private:
  std::span<const cplx> atom(std::size_t i, std::vector<cplx>& scratch) const {
    if (order_[i] > 0) return higher_.at(i).samples();
    return dict_.atom(i, scratch);
  }

  void update_projections(const BoundarySignal& b) {
    parallel_chunks(dict_.size(), scan_.workers,
                    [&](unsigned, std::size_t begin, std::size_t end,
                        std::vector<cplx>& scratch) {
                      for (std::size_t i = begin; i < end; ++i) {
                        proj_[i] += std::norm(inner(atom(i, scratch),
                                                    b.samples()));
                      }
                    });
  }

  void advance_order(std::size_t q) {
    ++order_[q];
    ParamPoint p = dict_.param(q);
    p.n = order_[q];
    BoundarySignal a = make_atom(p, f_.size());
    double s = 0.0;
    for (const auto& b : state_.basis()) s += std::norm(inner(a, b));
    proj_[q] = s;
    higher_.insert_or_assign(q, std::move(a));
  }

  const BoundarySignal& f_;
  const Dictionary& dict_;
  ScanOptions scan_;
  bool poafd_;
  bool multiples_;
  GSState state_;
  BoundarySignal residual_;
  std::vector<double> proj_;  // sum_l |<E_i, B_l>|^2
  std::vector<int> order_;    // current multiple-kernel order per candidate
  std::unordered_map<std::size_t, BoundarySignal> higher_;
};

}  // namespace

Decomposition ga_run(const BoundarySignal& f, const Dictionary& dict,
                     int iters, const ScanOptions& scan) {
  check_inputs(f, dict, iters);
  Decomposition d = start(Method::GA, f, dict);
  BoundarySignal g = f;
  for (int k = 0; k < iters; ++k) {
    const ScanBest best = parallel_argmax(
        dict.size(), scan.workers,
        [&](std::size_t i, std::vector<cplx>& scratch) {
          return std::abs(inner(g.samples(), dict.atom(i, scratch)));
        });
    if (!best.found()) fail(ErrorCode::DictionaryExhausted, "empty dictionary");
    std::vector<cplx> scratch;
    const auto a = dict.atom(best.index, scratch);
    const cplx coeff = inner(g.samples(), a);
    g.add_scaled(-coeff, a);
    d.approximation.add_scaled(coeff, a);
    d.steps.push_back(
        make_step(dict.param(best.index), coeff, f, d.approximation));
  }
  return d;
}

Decomposition oga_run(const BoundarySignal& f, const Dictionary& dict,
                      int iters, const ScanOptions& scan) {
  check_inputs(f, dict, iters);
  return OrthoPursuit(f, dict, scan, false).run(iters);
}

Decomposition poafd_run(const BoundarySignal& f, const Dictionary& dict,
                        int iters, const ScanOptions& scan) {
  check_inputs(f, dict, iters);
  return OrthoPursuit(f, dict, scan, true).run(iters);
}

Decomposition afd_run(const BoundarySignal& f, const Dictionary& dict,
                      int iters, const ScanOptions& scan) {
  check_inputs(f, dict, iters);
  if (dict.complete()) {
    fail(ErrorCode::InvalidArgument, "AFD runs on the Szegő dictionary only");
  }
  const std::size_t n = f.size();
  Decomposition d = start(Method::AFD, f, dict);
  BlaschkeSpec spec;
  BoundarySignal g = f;  // reduced remainder f_k
  for (int k = 1; k <= iters; ++k) {
    const ScanBest best = parallel_argmax(
        dict.size(), scan.workers,
        [&](std::size_t i, std::vector<cplx>& scratch) {
          return std::abs(inner(g.samples(), dict.atom(i, scratch)));
        });
    if (!best.found()) fail(ErrorCode::DictionaryExhausted, "empty dictionary");
    const cplx a = dict.param(best.index).a;
    int repeats = 0;
    for (const cplx& z : spec.zeros) repeats += (z == a);
    const BoundarySignal e = sample_normalized_multi_kernel({0, a}, n);
    const cplx coeff = inner(g, e);
    spec.zeros.push_back(a);
    d.approximation.add_scaled(coeff, sample_tm_element(spec, k, n).samples());
    d.steps.push_back(make_step({repeats, a}, coeff, f, d.approximation));

    std::vector<cplx> next(n);
    for (std::size_t j = 0; j < n; ++j) {
      const cplx z = BoundarySignal::grid_point(j, n);
      next[j] = (g[j] - coeff * e[j]) / mobius(a, z);
    }
    g = BoundarySignal(std::move(next));
  }
  return d;
}

Decomposition run_pursuit(Method method, const BoundarySignal& f,
                          const Dictionary& dict, int iters,
                          const ScanOptions& scan) {
  switch (method) {
    case Method::GA: return ga_run(f, dict, iters, scan);
    case Method::OGA: return oga_run(f, dict, iters, scan);
    case Method::AFD: return afd_run(f, dict, iters, scan);
    case Method::POAFD: return poafd_run(f, dict, iters, scan);
    case Method::Unwinding: {
      UnwindConfig cfg;
      cfg.scan = scan;
      return unwind_run(f, iters, cfg, &dict);
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown method");
}

CandidateScores candidate_scores(const BoundarySignal& f, const GSState& state,
                                 const Dictionary& dict,
                                 const ScanOptions& scan) {
  if (f.size() != dict.samples() || state.samples() != dict.samples()) {
    fail(ErrorCode::Dimension, "sample counts differ");
  }
  const BoundarySignal h = f - state.project(f);
  CandidateScores out{std::vector<double>(dict.size()),
                      std::vector<double>(dict.size())};
  parallel_chunks(dict.size(), scan.workers,
                  [&](unsigned, std::size_t begin, std::size_t end,
                      std::vector<cplx>& scratch) {
                    for (std::size_t i = begin; i < end; ++i) {
                      const auto a = dict.atom(i, scratch);
                      double proj = 0.0;
                      for (const auto& b : state.basis()) {
                        proj += std::norm(inner(a, b.samples()));
                      }
                      const double defect = 1.0 - proj;
                      if (defect < GSState::kDependenceTolerance) {
                        out.oga[i] = out.poafd[i] = -1.0;
                        continue;
                      }
                      const double s = std::abs(inner(h.samples(), a));
                      out.oga[i] = s;
                      out.poafd[i] = s / std::sqrt(defect);
                    }
                  });
  return out;
}

}  // namespace hardy
