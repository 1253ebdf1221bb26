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

// Polynomial-time algorithms: the SSF/SPT split heuristic with ratio 2, the
// SPT rule (optimal on agreeable instances), the structural audit of the
// prefix/separation/suffix shape of optimal schedules, and pairwise-swap
// local search.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pma/checked.hpp"
#include "pma/error.hpp"
#include "pma/model.hpp"

namespace pma {

// Non-decreasing p, ties by index.
inline void sort_spt(const Instance& instance, std::vector<JobId>& ids) {
  std::sort(ids.begin(), ids.end(), [&](JobId a, JobId b) {
    return instance[a].p != instance[b].p ? instance[a].p < instance[b].p : a < b;
  });
}

// Non-decreasing p + delta, ties by index.
inline void sort_ssf(const Instance& instance, std::vector<JobId>& ids) {
  auto key = [&](JobId j) { return checked::add(instance[j].p, instance[j].delta); };
  std::sort(ids.begin(), ids.end(), [&](JobId a, JobId b) {
    const Time ka = key(a), kb = key(b);
    return ka != kb ? ka < kb : a < b;
  });
}

inline std::vector<JobId> spt_order(const Instance& instance) {
  auto ids = identity_order(instance.size());
  sort_spt(instance, ids);
  return ids;
}

inline std::vector<JobId> ssf_order(const Instance& instance) {
  auto ids = identity_order(instance.size());
  sort_ssf(instance, ids);
  return ids;
}

struct SplitSchedule {
  std::vector<JobId> prefix;       // SPT order, processed before any maintenance
  std::optional<JobId> separation;  // first job needing an MA
  std::vector<JobId> suffix;       // SSF order
  Schedule schedule;
};

// Sort all jobs SSF, take the longest SSF prefix whose deterioration fits in
// ml0, re-sort that prefix SPT and keep the rest SSF. The first job past the
// prefix is the separation job. With no separation job the whole instance is
// processed SPT without maintenance.
inline SplitSchedule solve_a1(const Instance& instance) {
  validate(instance);
  const auto ssf = ssf_order(instance);

  std::size_t fits = 0;
  Level deterioration = 0;
  while (fits < ssf.size()) {
    const Level next = checked::add(deterioration, instance[ssf[fits]].delta);
    if (next > instance.ml0) break;
    deterioration = next;
    ++fits;
  }

  SplitSchedule split;
  split.prefix.assign(ssf.begin(), ssf.begin() + static_cast<std::ptrdiff_t>(fits));
  sort_spt(instance, split.prefix);
  if (fits < ssf.size()) {
    split.separation = ssf[fits];
    split.suffix.assign(ssf.begin() + static_cast<std::ptrdiff_t>(fits) + 1, ssf.end());
  }

  std::vector<JobId> order = split.prefix;
  if (split.separation) order.push_back(*split.separation);
  order.insert(order.end(), split.suffix.begin(), split.suffix.end());
  split.schedule = canonical_schedule(instance, order);
  return split;
}

// SPT with equal processing times ordered by deterioration: among equal p,
// the smaller delta first never raises any prefix's maintenance need.
inline Schedule solve_spt(const Instance& instance) {
  validate(instance);
  auto ids = identity_order(instance.size());
  std::sort(ids.begin(), ids.end(), [&](JobId a, JobId b) {
    if (instance[a].p != instance[b].p) return instance[a].p < instance[b].p;
    if (instance[a].delta != instance[b].delta) return instance[a].delta < instance[b].delta;
    return a < b;
  });
  return canonical_schedule(instance, ids);
}

// True iff p_i < p_j implies p_i + delta_i <= p_j + delta_j for every pair.
inline bool is_agreeable(const Instance& instance) {
  const auto ids = spt_order(instance);
  // Largest p + delta among jobs with strictly smaller p than the current group.
  std::optional<Time> max_before;
  std::size_t i = 0;
  while (i < ids.size()) {
    std::size_t group_end = i;
    Time group_min = checked::add(instance[ids[i]].p, instance[ids[i]].delta);
    Time group_max = group_min;
    while (group_end < ids.size() && instance[ids[group_end]].p == instance[ids[i]].p) {
      const Time key = checked::add(instance[ids[group_end]].p, instance[ids[group_end]].delta);
      group_min = std::min(group_min, key);
      group_max = std::max(group_max, key);
      ++group_end;
    }
    if (max_before && *max_before > group_min) return false;
    max_before = std::max(max_before.value_or(0), group_max);
    i = group_end;
  }
  return true;
}

struct AuditViolation {
  std::size_t position = 0;
  std::string rule;  // "spt_prefix", "ssf_suffix", "boundary_left", "boundary_right"
  std::string detail;
};

struct AuditReport {
  bool spt_prefix_ok = true;
  bool ssf_suffix_ok = true;
  bool boundary_ok = true;
  std::vector<AuditViolation> violations;

  bool ok() const { return spt_prefix_ok && ssf_suffix_ok && boundary_ok; }
};

struct BoundaryCheck {
  bool left_ok = true;
  bool right_ok = true;
};

// The exchange inequalities around a separation job whose first MA has
// duration sep.delta - residual:
//   p_prev + min{delta_prev, sep.delta - residual}
//     <= sep.p + (sep.delta - residual)
//     <= p_next + max{0, delta_next - residual}.
// A missing neighbour makes its side vacuous. residual may be negative.
inline BoundaryCheck check_boundary(const std::optional<Job>& prev, const Job& sep,
                                    const std::optional<Job>& next, std::int64_t residual) {
  using checked::to_signed;
  const std::int64_t first_ma = checked::sub(to_signed(sep.delta), residual);
  const std::int64_t middle = checked::add(to_signed(sep.p), first_ma);
  BoundaryCheck result;
  if (prev) {
    const std::int64_t left =
        checked::add(to_signed(prev->p), std::min(to_signed(prev->delta), first_ma));
    result.left_ok = left <= middle;
  }
  if (next) {
    const std::int64_t right = checked::add(
        to_signed(next->p),
        std::max<std::int64_t>(0, checked::sub(to_signed(next->delta), residual)));
    result.right_ok = middle <= right;
  }
  return result;
}

// Checks a canonical schedule for the shape every swap-stable optimum has:
// SPT before the separation job, SSF after it, and the boundary exchange
// inequalities. Without a separation job the whole order must be SPT.
inline AuditReport audit_lemma2(const Instance& instance, const Schedule& schedule) {
  validate(instance);
  check_schedule(schedule, instance.size());
  if (canonical_schedule(instance, schedule.order).mas != schedule.mas) {
    throw Error(ErrorCode::not_canonical,
                "maintenance activities differ from the canonical schedule on this order");
  }

  const auto& order = schedule.order;
  const std::size_t n = order.size();
  const std::size_t sep = schedule.mas.empty() ? n : schedule.mas.front().before_position;
  AuditReport report;

  for (std::size_t pos = 0; pos + 1 < sep; ++pos) {
    const Job& a = instance[order[pos]];
    const Job& b = instance[order[pos + 1]];
    if (a.p > b.p) {
      report.spt_prefix_ok = false;
      report.violations.push_back({pos, "spt_prefix",
                                   "p=" + std::to_string(a.p) + " precedes p=" +
                                       std::to_string(b.p)});
    }
  }
  for (std::size_t pos = sep + 1; pos + 1 < n; ++pos) {
    const Job& a = instance[order[pos]];
    const Job& b = instance[order[pos + 1]];
    const Time ka = checked::add(a.p, a.delta), kb = checked::add(b.p, b.delta);
    if (ka > kb) {
      report.ssf_suffix_ok = false;
      report.violations.push_back({pos, "ssf_suffix",
                                   "p+delta=" + std::to_string(ka) + " precedes p+delta=" +
                                       std::to_string(kb)});
    }
  }
  if (sep < n) {
    std::int64_t residual = checked::to_signed(instance.ml0);
    for (std::size_t pos = 0; pos < sep; ++pos) {
      residual = checked::sub(residual, checked::to_signed(instance[order[pos]].delta));
    }
    std::optional<Job> prev, next;
    if (sep > 0) prev = instance[order[sep - 1]];
    if (sep + 1 < n) next = instance[order[sep + 1]];
    const auto boundary = check_boundary(prev, instance[order[sep]], next, residual);
    if (!boundary.left_ok) {
      report.violations.push_back(
          {sep - 1, "boundary_left",
           "swapping with the separation job lowers the total (residual " +
               std::to_string(residual) + ")"});
    }
    if (!boundary.right_ok) {
      report.violations.push_back(
          {sep, "boundary_right",
           "swapping the separation job with its successor lowers the total (residual " +
               std::to_string(residual) + ")"});
    }
    report.boundary_ok = boundary.left_ok && boundary.right_ok;
  }
  return report;
}

// Applies improving pairwise swaps, scanning (i, j) lexicographically and
// restarting after each accepted swap, until no swap lowers the total.
inline Schedule local_improve(const Instance& instance, const Schedule& schedule) {
  validate(instance);
  check_schedule(schedule, instance.size());
  std::vector<JobId> order = schedule.order;
  Time current = canonical_total(instance, order);

  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i < order.size() && !improved; ++i) {
      for (std::size_t j = i + 1; j < order.size() && !improved; ++j) {
        std::swap(order[i], order[j]);
        const Time candidate = canonical_total(instance, order);
        if (candidate < current) {
          current = candidate;
          improved = true;
        } else {
          std::swap(order[i], order[j]);
        }
      }
    }
  }
  return canonical_schedule(instance, order);
}

}  // namespace pma
