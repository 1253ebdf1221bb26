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

// Partition -> scheduling reduction. For X = {x_1..x_n} with sum 2B the
// instance has 2n+3 jobs:
//   p_i = p_{n+1+i} = x_1 + ... + x_i,  delta_i = delta_{n+1+i} = M - 2 p_i,  i = 0..n
//   p_{2n+2} = M - 2B,  delta_{2n+2} = 0
//   ml0 = sum_{i<=n} delta_i - 2B,  ml_max = sum_{i<=n} delta_i,  M > (4n+8)B.
// X has an equal split iff some feasible schedule has total <= Q = Q0 + B,
// where Q0 is the total of the infeasible reference schedule pi0:
//   J_0..J_n, MA(2B), J_{2n+2}, MA, J_{2n+1}, MA, J_{2n}, ..., MA, J_{n+1}.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pma/checked.hpp"
#include "pma/error.hpp"
#include "pma/exact.hpp"
#include "pma/model.hpp"

namespace pma {

struct PartitionInstance {
  std::vector<std::uint64_t> x;  // x[0] holds x_1
  std::uint64_t b = 0;           // half of the sum

  std::size_t size() const noexcept { return x.size(); }
  // 1-based, matching the usual x_1..x_n naming.
  std::uint64_t element(std::size_t i) const { return x.at(i - 1); }
};

inline PartitionInstance make_partition(std::vector<std::uint64_t> x) {
  if (x.empty()) throw Error(ErrorCode::invalid_partition, "partition input is empty");
  std::uint64_t sum = 0;
  for (auto v : x) {
    if (v == 0) throw Error(ErrorCode::invalid_partition, "partition entries must be >= 1");
    sum = checked::add(sum, v);
  }
  if (sum % 2 != 0) {
    throw Error(ErrorCode::odd_sum, "sum " + std::to_string(sum) + " is odd");
  }
  return PartitionInstance{std::move(x), sum / 2};
}

struct ReductionArtifacts {
  PartitionInstance partition;
  Instance instance;
  std::uint64_t m_value = 0;
  Time q0 = 0;
  Time q = 0;
  Schedule pi0;

  std::size_t n() const noexcept { return partition.size(); }
  JobId center_job() const noexcept { return 2 * n() + 2; }
  JobId twin(JobId i) const noexcept { return i + n() + 1; }  // i in 0..n
};

// Smallest M with M > (4n+8)B.
inline std::uint64_t reduction_m(const PartitionInstance& part) {
  return checked::add<std::uint64_t>(
      checked::mul<std::uint64_t>(checked::add<std::uint64_t>(
                                      checked::mul<std::uint64_t>(4, part.size()), 8),
                                  part.b),
      1);
}

// Q0 as the sum of the completion times of pi0, term by term:
//   sum_j (n-j+1) p_j + (n+2)(sum_j p_j + 2B + p_{2n+2}) + sum_j (j+1)(p_{n+1+j} + delta_{n+1+j}).
inline Time reduction_q0(const Instance& instance, const PartitionInstance& part) {
  using checked::add;
  using checked::mul;
  const std::uint64_t n = part.size();
  Time prefix_part = 0, sum_p = 0, suffix_part = 0;
  for (std::uint64_t j = 0; j <= n; ++j) {
    const Job& job = instance[j];
    const Job& twin = instance[n + 1 + j];
    prefix_part = add(prefix_part, mul(n - j + 1, job.p));
    sum_p = add(sum_p, job.p);
    suffix_part = add(suffix_part, mul(j + 1, add(twin.p, twin.delta)));
  }
  const Time center_completion =
      add(add(sum_p, mul<Time>(2, part.b)), instance[2 * n + 2].p);
  return add(add(prefix_part, mul(n + 2, center_completion)), suffix_part);
}

// The same value simplified with p_j + delta_j = M - p_j:
//   (n+2)(n+3)/2 * M + 2 sum_j (n-j+1) p_j.
inline Time reduction_q0_closed_form(const ReductionArtifacts& art) {
  using checked::add;
  using checked::mul;
  const std::uint64_t n = art.n();
  Time weighted = 0;
  for (std::uint64_t j = 0; j <= n; ++j) {
    weighted = add(weighted, mul(n - j + 1, art.instance[j].p));
  }
  return add(mul((n + 2) * (n + 3) / 2, art.m_value), mul<Time>(2, weighted));
}

// Canonical-like schedule with the center job fixed at position n+1: no MA
// before the center except one right before it that lifts the level back to
// zero, then one MA of exactly delta before each later job. The level may be
// negative before the first MA, as in pi0.
inline Schedule centered_schedule(const ReductionArtifacts& art, std::vector<JobId> order) {
  const std::size_t center_pos = art.n() + 1;
  Level before = 0;
  for (std::size_t pos = 0; pos < center_pos; ++pos) {
    before = checked::add(before, art.instance[order[pos]].delta);
  }
  if (before < art.instance.ml0) {
    throw Error(ErrorCode::certificate_violated,
                "deterioration before the center (" + std::to_string(before) +
                    ") fell below ml0; the first MA would need negative duration");
  }
  Schedule schedule;
  if (before > art.instance.ml0) schedule.mas.push_back({center_pos, before - art.instance.ml0});
  for (std::size_t pos = center_pos + 1; pos < order.size(); ++pos) {
    const Level d = art.instance[order[pos]].delta;
    if (d > 0) schedule.mas.push_back({pos, d});
  }
  schedule.order = std::move(order);
  return schedule;
}

inline ReductionArtifacts build_reduction(const PartitionInstance& part) {
  using checked::add;
  using checked::mul;
  using checked::sub;
  if (part.x.empty()) throw Error(ErrorCode::invalid_partition, "partition input is empty");
  const std::size_t n = part.size();

  ReductionArtifacts art;
  art.partition = part;
  art.m_value = reduction_m(part);
  const std::uint64_t m = art.m_value;

  std::vector<Job> firsts(n + 1);
  Time prefix = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i > 0) prefix = add(prefix, part.element(i));
    firsts[i] = {prefix, sub(m, mul<std::uint64_t>(2, prefix))};
  }
  auto& jobs = art.instance.jobs;
  jobs = firsts;
  jobs.insert(jobs.end(), firsts.begin(), firsts.end());
  jobs.push_back({sub(m, mul<std::uint64_t>(2, part.b)), 0});

  Level total_delta = 0;
  for (const Job& job : firsts) total_delta = add(total_delta, job.delta);
  art.instance.ml_max = total_delta;
  art.instance.ml0 = sub(total_delta, mul<std::uint64_t>(2, part.b));
  validate(art.instance);

  art.q0 = reduction_q0(art.instance, part);
  art.q = add(art.q0, part.b);

  std::vector<JobId> order = identity_order(n + 1);
  order.push_back(art.center_job());
  for (std::size_t i = n + 1; i-- > 0;) order.push_back(art.twin(i));
  art.pi0 = centered_schedule(art, std::move(order));
  return art;
}

inline Evaluation evaluate_pi0(const ReductionArtifacts& art,
                               Breakdown mode = Breakdown::tolerated_before_first_ma) {
  return evaluate(art.instance, art.pi0, mode);
}

// Deterioration processed before the center job.
inline Level deterioration_before_center(const ReductionArtifacts& art, const Schedule& s) {
  Level sum = 0;
  for (JobId j : s.order) {
    if (j == art.center_job()) return sum;
    sum = checked::add(sum, art.instance[j].delta);
  }
  throw Error(ErrorCode::invalid_schedule, "center job missing from order");
}

struct SwapCertificate {
  std::vector<std::size_t> indices;  // 1-based indices into X, ascending
  std::vector<Schedule> schedules;   // pi0, pi1, ..., pim
  std::vector<Time> totals;
  std::vector<Level> deterioration_before_center;
  bool final_feasible = false;  // strict feasibility of the last schedule
};

// Starting from pi0, swaps J_{i-1} with J_{n+1+i} for each index i of the
// subset in ascending order. Each swap must raise the total by exactly x_i
// and lower the deterioration before the center by exactly 2 x_i.
inline SwapCertificate apply_swap_certificate(const ReductionArtifacts& art,
                                              const std::vector<std::size_t>& subset) {
  const std::size_t n = art.n();
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (subset[k] < 1 || subset[k] > n || (k > 0 && subset[k - 1] >= subset[k])) {
      throw Error(ErrorCode::invalid_argument,
                  "subset indices must be strictly ascending within 1.." + std::to_string(n));
    }
  }

  SwapCertificate cert;
  cert.indices = subset;
  cert.schedules.push_back(art.pi0);
  cert.totals.push_back(evaluate_pi0(art).total);
  cert.deterioration_before_center.push_back(deterioration_before_center(art, art.pi0));

  std::vector<JobId> order = art.pi0.order;
  for (std::size_t i : subset) {
    const JobId leaving = i - 1;
    const JobId entering = art.twin(i);
    const auto a = std::find(order.begin(), order.end(), leaving);
    const auto b = std::find(order.begin(), order.end(), entering);
    if (a - order.begin() > static_cast<std::ptrdiff_t>(n) ||
        b - order.begin() <= static_cast<std::ptrdiff_t>(n + 1)) {
      throw Error(ErrorCode::certificate_violated,
                  "swap pair for index " + std::to_string(i) + " is not straddling the center");
    }
    std::iter_swap(a, b);
    Schedule next = centered_schedule(art, order);
    const Time total = evaluate(art.instance, next, Breakdown::tolerated_before_first_ma).total;
    const Level det = deterioration_before_center(art, next);
    const std::uint64_t x = art.partition.element(i);
    if (total != checked::add(cert.totals.back(), x) ||
        det + checked::mul<std::uint64_t>(2, x) != cert.deterioration_before_center.back()) {
      throw Error(ErrorCode::certificate_violated,
                  "swap for index " + std::to_string(i) + " changed total by " +
                      std::to_string(static_cast<std::int64_t>(total - cert.totals.back())) +
                      " and deterioration by " +
                      std::to_string(static_cast<std::int64_t>(
                          det - cert.deterioration_before_center.back())));
    }
    cert.schedules.push_back(std::move(next));
    cert.totals.push_back(total);
    cert.deterioration_before_center.push_back(det);
  }
  cert.final_feasible = evaluate(art.instance, cert.schedules.back()).feasible;
  return cert;
}

enum class CenterLayout {
  invalid,
  // n+1 jobs before the first MA, center job last among them.
  center_before_separation,
  // n+1 jobs before the first MA, separation job, then the center job.
  center_after_separation,
  // n jobs before the first MA, separation job, then the center job.
  short_prefix,
};

struct PartitionExtraction {
  std::optional<std::vector<std::size_t>> subset;  // 1-based indices summing to B
  CenterLayout layout = CenterLayout::invalid;
  std::vector<JobId> normalized_order;
  std::vector<std::size_t> r;  // pairs with both copies among the first n+1 jobs
  std::vector<std::size_t> l;  // pairs with both copies among the last n+1 jobs
};

// Recovers an equal split from a feasible schedule with total <= Q. The
// schedule is first brought to normal form (canonical MAs, SPT prefix, SSF
// suffix with the center job first among ties), which never raises the
// total. The first n+1 non-center jobs then differ from pi0's prefix by the
// pairs R (both copies before) and L (both copies after); sorted R and L
// pair up as swaps (l_j, r_j) and X1 is the union of x_{l_j+1}..x_{r_j}.
inline PartitionExtraction extract_partition(const ReductionArtifacts& art,
                                             const Schedule& schedule) {
  const Evaluation eval = evaluate(art.instance, schedule);
  if (!eval.feasible) {
    throw Error(ErrorCode::infeasible_schedule, "schedule is not feasible");
  }
  if (eval.total > art.q) {
    throw Error(ErrorCode::not_within_threshold,
                "total " + std::to_string(eval.total) + " exceeds Q " + std::to_string(art.q));
  }

  const auto& inst = art.instance;
  const std::size_t n = art.n();
  const JobId center = art.center_job();
  std::vector<JobId> order = schedule.order;
  const Schedule canonical = canonical_schedule(inst, order);
  const std::size_t sep = canonical.mas.empty() ? order.size() : canonical.mas.front().before_position;

  auto spt_less = [&](JobId a, JobId b) {
    return inst[a].p != inst[b].p ? inst[a].p < inst[b].p : a < b;
  };
  auto ssf_less = [&](JobId a, JobId b) {
    const Time ka = inst[a].p + inst[a].delta, kb = inst[b].p + inst[b].delta;
    if (ka != kb) return ka < kb;
    if ((a == center) != (b == center)) return a == center;
    return a < b;
  };
  std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(sep), spt_less);
  if (sep + 1 < order.size()) {
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(sep) + 1, order.end(), ssf_less);
  }

  PartitionExtraction out;
  out.normalized_order = order;
  const auto center_pos =
      static_cast<std::size_t>(std::find(order.begin(), order.end(), center) - order.begin());
  if (center_pos == n + 1 && sep == n + 2) {
    out.layout = CenterLayout::center_before_separation;
  } else if (center_pos == n + 2 && sep == n + 1) {
    out.layout = CenterLayout::center_after_separation;
  } else if (center_pos == n + 1 && sep == n) {
    out.layout = CenterLayout::short_prefix;
  } else {
    return out;
  }

  std::vector<bool> in_first(2 * n + 2, false);
  for (std::size_t pos = 0; pos <= n; ++pos) in_first[order[pos]] = true;
  for (std::size_t i = 0; i <= n; ++i) {
    if (in_first[i] && in_first[art.twin(i)]) out.r.push_back(i);
    if (!in_first[i] && !in_first[art.twin(i)]) out.l.push_back(i);
  }
  if (out.r.size() != out.l.size()) return out;

  std::set<std::size_t> chosen;
  for (std::size_t j = 0; j < out.r.size(); ++j) {
    if (out.l[j] > out.r[j]) return out;
    for (std::size_t k = out.l[j] + 1; k <= out.r[j]; ++k) chosen.insert(k);
  }
  std::uint64_t sum = 0;
  for (std::size_t k : chosen) sum += art.partition.element(k);
  if (sum != art.partition.b) return out;
  out.subset = std::vector<std::size_t>(chosen.begin(), chosen.end());
  return out;
}

inline constexpr std::size_t kDecideByReductionLimit = 4;

// Builds the reduction and answers the Partition query through an exact
// optimum: true iff the optimal total is at most Q.
inline bool decide_partition_by_search(const PartitionInstance& part) {
  if (part.size() > kDecideByReductionLimit) {
    throw Error(ErrorCode::too_large, "reduction search limited to n <= " +
                                          std::to_string(kDecideByReductionLimit));
  }
  const auto art = build_reduction(part);
  return solve_subset_dp(art.instance).best_total <= art.q;
}

}  // namespace pma
