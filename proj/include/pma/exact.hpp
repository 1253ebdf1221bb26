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

// Desk-scale exact optimizers for total completion time. Both rely on the
// canonical normal form: the completion time of the i-th job depends only on
// the set S of the first i jobs, C = P(S) + max{0, D(S) - ml0}.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pma/checked.hpp"
#include "pma/error.hpp"
#include "pma/model.hpp"

namespace pma {

struct ExactResult {
  std::vector<JobId> best_order;
  Time best_total = 0;
  std::uint64_t explored = 0;  // search nodes (brute force) or subsets (DP)
};

inline constexpr std::size_t kBruteForceDefaultLimit = 10;
inline constexpr std::size_t kSubsetDpLimit = 24;

namespace detail {

class PermutationSearch {
 public:
  explicit PermutationSearch(const Instance& instance)
      : instance_(instance),
        n_(instance.size()),
        used_(n_, false),
        prev_twin_(n_),
        by_p_(identity_order(n_)) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t i = j; i-- > 0;) {
        if (instance[i] == instance[j]) {
          prev_twin_[j] = i;
          break;
        }
      }
    }
    std::stable_sort(by_p_.begin(), by_p_.end(),
                     [&](JobId a, JobId b) { return instance[a].p < instance[b].p; });
  }

  ExactResult run() {
    ExactResult result;
    result.best_order = identity_order(n_);
    result.best_total = canonical_total(instance_, result.best_order);
    best_ = &result;
    prefix_.reserve(n_);
    descend(0, 0, 0);
    return result;
  }

 private:
  // Every unscheduled job completes no earlier than now + its SPT offset.
  Time lower_bound(Time partial, Time now, std::size_t remaining) const {
    Time bound = checked::add(partial, checked::mul<Time>(now, remaining));
    Time acc = 0;
    for (JobId j : by_p_) {
      if (used_[j]) continue;
      acc = checked::add(acc, instance_[j].p);
      bound = checked::add(bound, acc);
    }
    return bound;
  }

  void descend(Time partial, Time processed, Level deterioration) {
    ++best_->explored;
    const std::size_t depth = prefix_.size();
    if (depth == n_) {
      if (partial < best_->best_total) {
        best_->best_total = partial;
        best_->best_order = prefix_;
      }
      return;
    }
    const Time now = checked::add(processed, maintenance(deterioration));
    if (lower_bound(partial, now, n_ - depth) >= best_->best_total) return;

    for (JobId j = 0; j < n_; ++j) {
      if (used_[j]) continue;
      // Identical jobs are interchangeable; only the lowest unused index is tried.
      if (prev_twin_[j] && !used_[*prev_twin_[j]]) continue;
      const Level d = checked::add(deterioration, instance_[j].delta);
      const Time p = checked::add(processed, instance_[j].p);
      const Time completion = checked::add(p, maintenance(d));
      used_[j] = true;
      prefix_.push_back(j);
      descend(checked::add(partial, completion), p, d);
      prefix_.pop_back();
      used_[j] = false;
    }
  }

  Time maintenance(Level deterioration) const {
    return deterioration > instance_.ml0 ? deterioration - instance_.ml0 : 0;
  }

  const Instance& instance_;
  std::size_t n_;
  std::vector<bool> used_;
  std::vector<std::optional<JobId>> prev_twin_;
  std::vector<JobId> by_p_;
  std::vector<JobId> prefix_;
  ExactResult* best_ = nullptr;
};

}  // namespace detail

// Enumerates permutations depth-first in lexicographic order with prefix-cost
// pruning. Among optimal orders the lexicographically smallest is returned.
inline ExactResult solve_brute_force(const Instance& instance,
                                     std::size_t limit_n = kBruteForceDefaultLimit) {
  if (instance.size() > limit_n) {
    throw Error(ErrorCode::too_large, "brute force limited to " + std::to_string(limit_n) +
                                          " jobs, got " + std::to_string(instance.size()));
  }
  validate(instance);
  return detail::PermutationSearch(instance).run();
}

// Dynamic program over subsets. cost_to_go[S] is the minimum total completion
// time of the jobs outside S when S has already been processed; the order is
// rebuilt forward, always taking the smallest job index that stays optimal,
// so the result matches solve_brute_force exactly.
inline ExactResult solve_subset_dp(const Instance& instance) {
  const std::size_t n = instance.size();
  if (n > kSubsetDpLimit) {
    throw Error(ErrorCode::too_large, "subset DP limited to " +
                                          std::to_string(kSubsetDpLimit) + " jobs, got " +
                                          std::to_string(n));
  }
  validate(instance);

  using Mask = std::uint32_t;
  const Mask full = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
  const std::size_t states = std::size_t{1} << n;
  std::vector<Time> cost_to_go(states, 0);

  auto sums = [&](Mask s) {
    Time processed = 0;
    Level deterioration = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (s & (Mask{1} << j)) {
        processed = checked::add(processed, instance[j].p);
        deterioration = checked::add(deterioration, instance[j].delta);
      }
    }
    return std::pair{processed, deterioration};
  };
  auto step_cost = [&](Time processed, Level deterioration, JobId j) {
    const Level d = checked::add(deterioration, instance[j].delta);
    const Time maintained = d > instance.ml0 ? d - instance.ml0 : 0;
    return checked::add(checked::add(processed, instance[j].p), maintained);
  };

  for (Mask s = full; s-- > 0;) {
    const auto [processed, deterioration] = sums(s);
    Time best = std::numeric_limits<Time>::max();
    for (JobId j = 0; j < n; ++j) {
      const Mask bit = Mask{1} << j;
      if (s & bit) continue;
      best = std::min(best, checked::add(step_cost(processed, deterioration, j),
                                         cost_to_go[s | bit]));
    }
    cost_to_go[s] = best;
  }

  ExactResult result;
  result.best_total = cost_to_go[0];
  result.explored = states;
  result.best_order.reserve(n);
  Mask s = 0;
  while (s != full) {
    const auto [processed, deterioration] = sums(s);
    for (JobId j = 0; j < n; ++j) {
      const Mask bit = Mask{1} << j;
      if (s & bit) continue;
      if (step_cost(processed, deterioration, j) + cost_to_go[s | bit] == cost_to_go[s]) {
        result.best_order.push_back(j);
        s |= bit;
        break;
      }
    }
  }
  return result;
}

}  // namespace pma
