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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Every tolerance and runtime bound is fixed below.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "pma/pma.hpp"

namespace {

using namespace pma;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  const char* id;
  const char* title;
  double budget_s;
  std::function<Outcome()> body;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

RandomParams desk_params(Rng& rng) { return {rng.uniform(1, 8), 20, 20}; }

Outcome approximation_bound() {
  Rng rng(20260101);
  const int count = 2000;
  Ratio worst{1, 1};
  for (int i = 0; i < count; ++i) {
    const auto inst = random_instance(desk_params(rng), rng);
    const Time a1 = evaluate(inst, solve_a1(inst).schedule).total;
    const Time opt = solve_subset_dp(inst).best_total;
    if (a1 > 2 * opt) {
      return fail("instance " + std::to_string(i) + ": a1 " + std::to_string(a1) +
                  " > 2 * " + std::to_string(opt));
    }
    if (opt > 0 && worst < Ratio{a1, opt}) worst = {a1, opt};
  }
  return {true, std::to_string(count) + " instances, worst ratio " + format_ratio(worst)};
}

Outcome tightness_family() {
  Ratio last{};
  for (std::uint64_t lambda : {10ull, 100ull, 1000ull, 1000000ull}) {
    const auto inst = tight_instance(lambda);
    const Time a1 = evaluate(inst, solve_a1(inst).schedule).total;
    const Time bf = solve_brute_force(inst).best_total;
    const Time dp = solve_subset_dp(inst).best_total;
    if (a1 != 2 * lambda || bf != lambda + 2 || dp != lambda + 2) {
      return fail("lambda " + std::to_string(lambda) + ": a1 " + std::to_string(a1) + ", exact " +
                  std::to_string(bf) + "/" + std::to_string(dp));
    }
    last = {a1, dp};
  }
  if (!(Ratio{1999990, 1000000} < last)) {
    return fail("ratio at 1e6 is " + format_ratio(last) + ", not above 1.999990");
  }
  return {true, "a1 = 2*lambda, exact = lambda+2; ratio(1e6) = " + format_ratio(last)};
}

Outcome makespan_identity() {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto inst = random_instance({rng.uniform(0, 12), 50, 50}, rng);
    const Time expected = makespan_closed_form(inst);
    auto order = identity_order(inst.size());
    for (int k = 0; k < 50; ++k) {
      rng.shuffle(order);
      const auto eval = evaluate(inst, canonical_schedule(inst, order));
      if (!eval.feasible || eval.makespan != expected) {
        return fail("instance " + std::to_string(i) + " permutation " + std::to_string(k));
      }
    }
  }
  return {true, "200 instances x 50 permutations"};
}

Outcome agreeable_optimality() {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto inst = random_agreeable_instance(desk_params(rng), rng);
    if (!is_agreeable(inst)) return fail("generator produced a non-agreeable instance");
    const Time spt = evaluate(inst, solve_spt(inst)).total;
    const Time opt = solve_subset_dp(inst).best_total;
    if (spt != opt) {
      return fail("instance " + std::to_string(i) + ": spt " + std::to_string(spt) + " vs " +
                  std::to_string(opt));
    }
  }
  return {true, "500 agreeable instances"};
}

Outcome reduction_yes_instance() {
  const auto art = build_reduction(make_partition({1, 1, 2}));
  if (art.q != 639) return fail("Q = " + std::to_string(art.q));
  const auto bf = solve_brute_force(art.instance);
  if (bf.best_total > art.q) return fail("optimum " + std::to_string(bf.best_total) + " > Q");
  if (solve_subset_dp(art.instance).best_total != bf.best_total) return fail("dp disagrees");
  const auto cert = apply_swap_certificate(art, {3});
  if (cert.totals.size() != 2 || cert.totals[1] - cert.totals[0] != 2 ||
      cert.deterioration_before_center[0] - cert.deterioration_before_center[1] != 4) {
    return fail("swap accounting mismatch");
  }
  const auto eval = evaluate(art.instance, cert.schedules.back());
  if (!eval.feasible || eval.total != 639) return fail("certificate schedule total/feasibility");
  return {true, "optimum " + std::to_string(bf.best_total) + " <= Q = 639 (" +
                    std::to_string(bf.explored) + " nodes); certificate {3}: 637 -> 639, "
                    "deterioration 150 -> 146, feasible"};
}

Outcome reduction_no_instance() {
  const auto art = build_reduction(make_partition({1, 1, 4}));
  if (art.m_value != 61 || art.partition.b != 3) return fail("unexpected M or B");
  const Time bf = solve_brute_force(art.instance).best_total;
  const Time dp = solve_subset_dp(art.instance).best_total;
  if (bf != dp) return fail("brute force and DP disagree");
  if (bf <= art.q) return fail("optimum " + std::to_string(bf) + " <= Q " + std::to_string(art.q));
  return {true, "optimum " + std::to_string(bf) + " > Q0+B = " + std::to_string(art.q)};
}

Outcome reduction_equivalence() {
  int checked_count = 0, yes = 0;
  std::vector<std::uint64_t> x;
  std::function<Outcome(std::size_t, std::size_t, std::uint64_t)> sweep =
      [&](std::size_t n, std::size_t i, std::uint64_t lo) -> Outcome {
    if (i == n) {
      std::uint64_t sum = 0;
      for (auto v : x) sum += v;
      if (sum % 2 != 0) return {};
      const bool expected = oracle::has_equal_split(x);
      if (decide_partition_by_search(make_partition(x)) != expected) {
        std::string s;
        for (auto v : x) s += std::to_string(v) + " ";
        return fail("disagreement on X = { " + s + "}");
      }
      ++checked_count;
      yes += expected ? 1 : 0;
      return {};
    }
    for (std::uint64_t v = lo; v <= 6; ++v) {
      x[i] = v;
      if (auto r = sweep(n, i + 1, v); !r.pass) return r;
    }
    return {};
  };
  for (std::size_t n = 1; n <= 4; ++n) {
    x.assign(n, 1);
    if (auto r = sweep(n, 0, 1); !r.pass) return r;
  }
  return {true, std::to_string(checked_count) + " even-sum multisets (" + std::to_string(yes) +
                    " yes) agree with subset-sum enumeration"};
}

Outcome oracle_cross_check() {
  Rng rng(8);
  for (int i = 0; i < 1000; ++i) {
    const auto inst = random_instance(desk_params(rng), rng);
    const auto bf = solve_brute_force(inst);
    const auto dp = solve_subset_dp(inst);
    if (bf.best_total != dp.best_total) return fail("instance " + std::to_string(i));
  }
  return {true, "1000 instances"};
}

Outcome q0_double_computation() {
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    std::vector<std::uint64_t> x(rng.uniform(1, 10));
    for (auto& v : x) v = rng.uniform(1, 100);
    std::uint64_t sum = 0;
    for (auto v : x) sum += v;
    if (sum % 2 != 0) x.back() += 1;
    const auto art = build_reduction(make_partition(x));
    if (art.q0 != reduction_q0_closed_form(art) || evaluate_pi0(art).total != art.q0) {
      return fail("partition " + std::to_string(i));
    }
  }
  return {true, "100 random partitions"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "approximation bound a1 <= 2*OPT", 30, approximation_bound},
      {"AC2", "tight family", 1, tightness_family},
      {"AC3", "makespan identity", 5, makespan_identity},
      {"AC4", "SPT optimal on agreeable instances", 30, agreeable_optimality},
      {"AC5", "reduction yes-instance X={1,1,2}", 60, reduction_yes_instance},
      {"AC6", "reduction no-instance X={1,1,4}", 60, reduction_no_instance},
      {"AC7", "reduction decision equivalence n<=4, x<=6", 600, reduction_equivalence},
      {"AC8", "subset DP = brute force", 60, oracle_cross_check},
      {"AC9", "Q0 double computation", 1, q0_double_computation},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome = fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.pass && secs > c.budget_s) {
      outcome = fail("runtime " + std::to_string(secs) + " s exceeds budget");
    }
    failures += outcome.pass ? 0 : 1;
    std::printf("%s %s %s: %s (%.3f s, budget %.0f s)\n", outcome.pass ? "PASS" : "FAIL", c.id,
                c.title, outcome.detail.c_str(), secs, c.budget_s);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
