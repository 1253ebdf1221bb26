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

// Single-machine scheduling with job-dependent machine deterioration under
// partial maintenance. A job (p, delta) runs for p time units and lowers the
// machine's maintenance level by delta. A maintenance activity (MA) of
// duration D raises the level by D (unit maintenance speed) and may never
// lift it above ml_max. The level must stay non-negative.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pma/checked.hpp"
#include "pma/error.hpp"

namespace pma {

using Time = std::uint64_t;   // processing and maintenance durations
using Level = std::uint64_t;  // maintenance-level units
using JobId = std::size_t;

struct Job {
  Time p = 0;
  Level delta = 0;

  friend bool operator==(const Job&, const Job&) = default;
};

struct Instance {
  std::vector<Job> jobs;
  Level ml0 = 0;
  Level ml_max = 0;

  std::size_t size() const noexcept { return jobs.size(); }
  const Job& operator[](JobId i) const { return jobs[i]; }

  friend bool operator==(const Instance&, const Instance&) = default;
};

struct MaintenanceActivity {
  std::size_t before_position = 0;  // runs immediately before order[before_position]
  Time duration = 0;

  friend bool operator==(const MaintenanceActivity&, const MaintenanceActivity&) = default;
};

struct Schedule {
  std::vector<JobId> order;
  std::vector<MaintenanceActivity> mas;  // sorted by before_position, at most one each

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

struct Evaluation {
  std::vector<Time> completion;  // aligned with order positions
  Time total = 0;
  Time makespan = 0;
  bool feasible = true;
  // Position of the separation job: the first job preceded by an MA.
  std::optional<std::size_t> first_ma_position;
  // ml0 minus the deterioration processed before the first MA (before the
  // whole order when no MA exists). Negative only for infeasible prefixes.
  std::int64_t residual_before_first_ma = 0;

  friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

// How evaluate() treats a negative maintenance level.
enum class Breakdown {
  strict,
  // A negative level is tolerated until the first MA, which must restore it.
  tolerated_before_first_ma,
};

// Throws invalid_instance when ml0 > ml_max (or ml_max does not fit a signed
// level), infeasible_job when some delta exceeds ml_max.
inline void validate(const Instance& instance) {
  if (instance.ml0 > instance.ml_max) {
    throw Error(ErrorCode::invalid_instance,
                "ml0 (" + std::to_string(instance.ml0) + ") exceeds ml_max (" +
                    std::to_string(instance.ml_max) + ")");
  }
  checked::to_signed(instance.ml_max);
  for (std::size_t i = 0; i < instance.size(); ++i) {
    if (instance[i].delta > instance.ml_max) {
      throw Error(ErrorCode::infeasible_job,
                  "job " + std::to_string(i) + " has delta " +
                      std::to_string(instance[i].delta) + " > ml_max " +
                      std::to_string(instance.ml_max));
    }
  }
}

inline void check_permutation(std::span<const JobId> order, std::size_t n) {
  if (order.size() != n) {
    throw Error(ErrorCode::invalid_permutation,
                "order has " + std::to_string(order.size()) + " entries, expected " +
                    std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (JobId j : order) {
    if (j >= n || seen[j]) {
      throw Error(ErrorCode::invalid_permutation,
                  "job index " + std::to_string(j) + " is out of range or repeated");
    }
    seen[j] = true;
  }
}

inline void check_schedule(const Schedule& schedule, std::size_t n) {
  check_permutation(schedule.order, n);
  for (std::size_t i = 0; i < schedule.mas.size(); ++i) {
    const auto& ma = schedule.mas[i];
    if (ma.duration == 0) {
      throw Error(ErrorCode::invalid_schedule, "zero-duration maintenance activity");
    }
    if (ma.before_position >= n) {
      throw Error(ErrorCode::invalid_schedule,
                  "maintenance activity before position " +
                      std::to_string(ma.before_position) + " has no job to precede");
    }
    if (i > 0 && schedule.mas[i - 1].before_position >= ma.before_position) {
      throw Error(ErrorCode::invalid_schedule,
                  "maintenance activities must be sorted by distinct before_position");
    }
  }
}

inline std::vector<JobId> identity_order(std::size_t n) {
  std::vector<JobId> order(n);
  std::iota(order.begin(), order.end(), JobId{0});
  return order;
}

// The normal form on a fixed order: before the i-th job the accumulated MA
// duration is max{0, (deterioration of the first i jobs) - ml0}. Each MA sits
// right before the job that needs it and lifts the level exactly to that
// job's delta.
inline Schedule canonical_schedule(const Instance& instance, std::span<const JobId> order) {
  validate(instance);
  check_permutation(order, instance.size());

  Schedule schedule;
  schedule.order.assign(order.begin(), order.end());
  Level deterioration = 0;
  Time maintained = 0;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    deterioration = checked::add(deterioration, instance[order[pos]].delta);
    const Time needed = deterioration > instance.ml0 ? deterioration - instance.ml0 : 0;
    if (needed > maintained) {
      schedule.mas.push_back({pos, needed - maintained});
      maintained = needed;
    }
  }
  return schedule;
}

// Total completion time of the canonical schedule on `order`, without
// materializing it. Assumes a validated instance and a valid permutation.
inline Time canonical_total(const Instance& instance, std::span<const JobId> order) {
  Time now = 0;
  Time total = 0;
  Level deterioration = 0;
  for (JobId j : order) {
    deterioration = checked::add(deterioration, instance[j].delta);
    const Time needed = deterioration > instance.ml0 ? deterioration - instance.ml0 : 0;
    now = checked::add(now, instance[j].p);
    total = checked::add(total, checked::add(now, needed));
  }
  return total;
}

// Simulates the level through the schedule. Completion of position i is the
// sum of every processing time and MA duration up to and including that job.
inline Evaluation evaluate(const Instance& instance, const Schedule& schedule,
                           Breakdown mode = Breakdown::strict) {
  validate(instance);
  check_schedule(schedule, instance.size());

  const std::int64_t ml_max = checked::to_signed(instance.ml_max);
  Evaluation eval;
  eval.completion.reserve(schedule.order.size());
  std::int64_t level = checked::to_signed(instance.ml0);
  Time now = 0;
  auto next_ma = schedule.mas.begin();

  for (std::size_t pos = 0; pos < schedule.order.size(); ++pos) {
    const Job& job = instance[schedule.order[pos]];
    if (next_ma != schedule.mas.end() && next_ma->before_position == pos) {
      if (!eval.first_ma_position) {
        eval.first_ma_position = pos;
        eval.residual_before_first_ma = level;
      }
      now = checked::add(now, next_ma->duration);
      level = checked::add(level, checked::to_signed(next_ma->duration));
      if (level > ml_max) eval.feasible = false;
      ++next_ma;
    }
    level = checked::sub(level, checked::to_signed(job.delta));
    if (level < 0) {
      const bool tolerated =
          mode == Breakdown::tolerated_before_first_ma && !eval.first_ma_position;
      if (!tolerated) eval.feasible = false;
    }
    now = checked::add(now, job.p);
    eval.completion.push_back(now);
    eval.total = checked::add(eval.total, now);
  }
  // A tolerated deficit must be repaired by the first MA.
  if (mode == Breakdown::tolerated_before_first_ma && !eval.first_ma_position && level < 0) {
    eval.feasible = false;
  }
  if (!eval.first_ma_position) eval.residual_before_first_ma = level;
  eval.makespan = now;
  return eval;
}

// Makespan shared by every canonical schedule of the instance:
// sum(p + delta) - ml0 when maintenance is needed, sum(p) otherwise.
inline Time makespan_closed_form(const Instance& instance) {
  validate(instance);
  Time processing = 0;
  Level deterioration = 0;
  for (const Job& job : instance.jobs) {
    processing = checked::add(processing, job.p);
    deterioration = checked::add(deterioration, job.delta);
  }
  if (deterioration <= instance.ml0) return processing;
  return checked::add(processing, deterioration - instance.ml0);
}

}  // namespace pma
