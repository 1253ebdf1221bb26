// Copyright 2026 The pmasched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "pma/error.hpp"
#include "pma/model.hpp"

namespace pma {

// mt19937_64 with an unbiased bounded draw. The engine's output sequence is
// fixed by the standard, and so is every value drawn here, on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return engine_();
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= limit);
    return lo + draw % span;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[uniform(0, i - 1)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

struct RandomParams {
  std::size_t n = 6;
  Time max_p = 20;
  Level max_delta = 20;
};

// ml_max is drawn in [max delta_i, max_delta] and ml0 in [0, ml_max], so every
// generated instance is feasible.
inline Instance random_instance(const RandomParams& params, Rng& rng) {
  Instance instance;
  Level largest = 0;
  for (std::size_t i = 0; i < params.n; ++i) {
    Job job{rng.uniform(0, params.max_p), rng.uniform(0, params.max_delta)};
    largest = std::max(largest, job.delta);
    instance.jobs.push_back(job);
  }
  instance.ml_max = rng.uniform(largest, params.max_delta);
  instance.ml0 = rng.uniform(0, instance.ml_max);
  return instance;
}

inline Instance random_instance(const RandomParams& params, std::uint64_t seed) {
  Rng rng(seed);
  return random_instance(params, rng);
}

// Draws p and delta independently, sorts both ascending and pairs them, so
// a smaller p never carries a larger p + delta. Job order is then shuffled.
inline Instance random_agreeable_instance(const RandomParams& params, Rng& rng) {
  std::vector<Time> ps(params.n);
  std::vector<Level> deltas(params.n);
  for (auto& p : ps) p = rng.uniform(0, params.max_p);
  for (auto& d : deltas) d = rng.uniform(0, params.max_delta);
  std::sort(ps.begin(), ps.end());
  std::sort(deltas.begin(), deltas.end());
  Instance instance;
  for (std::size_t i = 0; i < params.n; ++i) instance.jobs.push_back({ps[i], deltas[i]});
  rng.shuffle(instance.jobs);
  const Level largest = deltas.empty() ? 0 : deltas.back();
  instance.ml_max = rng.uniform(largest, std::max(largest, params.max_delta));
  instance.ml0 = rng.uniform(0, instance.ml_max);
  return instance;
}

// Two jobs (1, lambda) and (lambda - 1, 1) with ml0 = ml_max = lambda. The
// split heuristic pays 2*lambda against an optimum of lambda + 2.
inline Instance tight_instance(std::uint64_t lambda) {
  if (lambda < 2) {
    throw Error(ErrorCode::invalid_argument, "lambda must be >= 2, got " + std::to_string(lambda));
  }
  return Instance{{{1, lambda}, {lambda - 1, 1}}, lambda, lambda};
}

}  // namespace pma
