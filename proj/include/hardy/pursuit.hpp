// Copyright 2026 The hardyafd Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

// Matching-pursuit engines over a Dictionary.
//
//   GA        g_{l+1} = g_l - <g_l, E_q> E_q,  q = argmax |<g_l, E_p>|
//   OGA       same selection on the orthogonal remainder, full re-projection
//   POAFD     q = argmax |<h_k, E_p>| / sqrt(1 - sum_l |<E_p, B_l>|^2)
//   AFD       generalized backward shifts of the reduced remainder
//   Unwinding inner/outer split of the remainder before each step
//
// All selections break ties by (score desc, n asc, x asc, y asc).

#ifndef HARDY_PURSUIT_HPP
#define HARDY_PURSUIT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hardy/dictionary.hpp"
#include "hardy/gram_schmidt.hpp"
#include "hardy/scan.hpp"

namespace hardy {

enum class Method { GA, OGA, AFD, POAFD, Unwinding };
enum class DictKind { Szego, Complete };

const char* method_name(Method m);
const char* dict_kind_name(DictKind d);
Method parse_method(std::string_view name);
DictKind parse_dict_kind(std::string_view name);

struct Step {
  ParamPoint param;
  cplx coefficient;
  double residual_energy = 0.0;
  double relative_error = 0.0;
  int zeros_removed = 0;  // unwinding only
  bool flagged = false;   // unwinding: zero finding failed, I_k = 1 used
};

struct Decomposition {
  Method method;
  DictKind dict;
  ParamGrid grid;
  BoundarySignal signal;
  BoundarySignal approximation;
  std::vector<Step> steps;

  double final_relative_error() const;
};

Decomposition ga_run(const BoundarySignal& f, const Dictionary& dict,
                     int iters, const ScanOptions& scan = {});
Decomposition oga_run(const BoundarySignal& f, const Dictionary& dict,
                      int iters, const ScanOptions& scan = {});
// With a plain Szegő dictionary a re-selected parameter a enters as the next
// consecutive multiple kernel k_{l(a)-1, a}.
Decomposition poafd_run(const BoundarySignal& f, const Dictionary& dict,
                        int iters, const ScanOptions& scan = {});
// Szegő dictionaries only.
Decomposition afd_run(const BoundarySignal& f, const Dictionary& dict,
                      int iters, const ScanOptions& scan = {});

enum class UnwindSelection {
  Origin,   // a_k = 0: the classical unwinding Blaschke expansion
  Maximal,  // a_k = argmax |<O_k, e_a>| over the Szegő grid
};

struct UnwindConfig {
  UnwindSelection selection = UnwindSelection::Origin;
  double delta = 1e-3;         // keep roots with |w| <= 1 - delta
  double backward_tol = 1e-6;  // relative residual of a kept root
  ScanOptions scan;
};

// Maximal selection needs a Szegő dictionary; Origin ignores `szego`.
Decomposition unwind_run(const BoundarySignal& f, int iters,
                         const UnwindConfig& config = {},
                         const Dictionary* szego = nullptr);

struct InnerOuter {
  BlaschkeSpec inner;
  BoundarySignal outer;  // r / prod tau_{w} on the grid
  bool converged = true;
};

// Recovers the zeros of r inside the disc from its DFT truncated to degree
// N/2 - 1 and divides them out on the boundary.
InnerOuter inner_outer_split(const BoundarySignal& r,
                             const UnwindConfig& config = {});

Decomposition run_pursuit(Method method, const BoundarySignal& f,
                          const Dictionary& dict, int iters,
                          const ScanOptions& scan = {});

// Per-candidate selection scores against the orthogonal remainder h of the
// current system: oga[i] = |<h, E_i>|, poafd[i] = oga[i] / sqrt(defect_i).
// Candidates with defect below GSState::kDependenceTolerance get -1.
struct CandidateScores {
  std::vector<double> oga;
  std::vector<double> poafd;
};
CandidateScores candidate_scores(const BoundarySignal& f, const GSState& state,
                                 const Dictionary& dict,
                                 const ScanOptions& scan = {});

}  // namespace hardy

#endif  // HARDY_PURSUIT_HPP
