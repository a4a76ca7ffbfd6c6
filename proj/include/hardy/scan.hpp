// Copyright 2026 The hardyafd Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

// Deterministic parallel scans over dictionary candidates.

#ifndef HARDY_SCAN_HPP
#define HARDY_SCAN_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <limits>
#include <thread>
#include <vector>

#include "hardy/signal.hpp"

namespace hardy {

struct ScanOptions {
  unsigned workers = 0;  // 0: one per hardware thread
};

unsigned resolve_workers(unsigned requested, std::size_t count);

struct ScanBest {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
  std::size_t index = npos;
  double score = -1.0;
  std::uint64_t key = std::numeric_limits<std::uint64_t>::max();

  bool found() const { return index != npos; }
  // Higher score wins; equal scores fall back to the smaller key.
  bool beats(const ScanBest& other) const {
    if (score != other.score) return score > other.score;
    return key < other.key;
  }
};

// Runs fn(chunk, begin, end, scratch) on contiguous chunks of [0, count).
template <class Fn>
void parallel_chunks(std::size_t count, unsigned workers, Fn&& fn) {
  const unsigned w = resolve_workers(workers, count);
  if (w <= 1) {
    std::vector<cplx> scratch;
    fn(0u, std::size_t{0}, count, scratch);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(w);
  const std::size_t chunk = (count + w - 1) / w;
  for (unsigned t = 0; t < w; ++t) {
    const std::size_t begin = std::min(count, t * chunk);
    const std::size_t end = std::min(count, begin + chunk);
    threads.emplace_back([&, t, begin, end] {
      try {
        std::vector<cplx> scratch;
        fn(t, begin, end, scratch);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// argmax of score(index, scratch) over [0, count); negative scores mark
// excluded candidates. The comparison is a total order on (score, key), so
// the result does not depend on the number of workers.
template <class ScoreFn, class KeyFn>
ScanBest parallel_argmax(std::size_t count, unsigned workers, ScoreFn&& score,
                         KeyFn&& key) {
  const unsigned w = resolve_workers(workers, count);
  std::vector<ScanBest> partial(std::max(1u, w));
  parallel_chunks(count, workers,
                  [&](unsigned chunk, std::size_t begin, std::size_t end,
                      std::vector<cplx>& scratch) {
                    ScanBest best;
                    for (std::size_t i = begin; i < end; ++i) {
                      const double s = score(i, scratch);
                      if (!(s >= 0.0)) continue;
                      ScanBest cand{i, s, key(i)};
                      if (!best.found() || cand.beats(best)) best = cand;
                    }
                    partial[chunk] = best;
                  });
  ScanBest best;
  for (const auto& p : partial) {
    if (p.found() && (!best.found() || p.beats(best))) best = p;
  }
  return best;
}

template <class ScoreFn>
ScanBest parallel_argmax(std::size_t count, unsigned workers, ScoreFn&& score) {
  return parallel_argmax(count, workers, std::forward<ScoreFn>(score),
                         [](std::size_t i) { return std::uint64_t{i}; });
}

}  // namespace hardy

#endif  // HARDY_SCAN_HPP
