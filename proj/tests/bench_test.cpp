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

#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "pma/bench.hpp"
#include "pma/generate.hpp"

namespace pma {
namespace {

using testing::error_code_of;

TEST(FormatRatio, SixDecimalsRoundedHalfUp) {
  EXPECT_EQ(format_ratio({20, 12}), "1.666667");
  EXPECT_EQ(format_ratio({200, 102}), "1.960784");
  EXPECT_EQ(format_ratio({2000, 1002}), "1.996008");
  EXPECT_EQ(format_ratio({7, 7}), "1.000000");
  EXPECT_EQ(format_ratio({1, 8}, 2), "0.13");
  EXPECT_EQ(format_ratio({5, 2}, 0), "3");
}

TEST(RatioOrder, ExactComparison) {
  EXPECT_TRUE((Ratio{20, 12} < Ratio{200, 102}));
  EXPECT_FALSE((Ratio{2, 1} < Ratio{4, 2}));
  const Time big = ~Time{0};
  EXPECT_TRUE((Ratio{big - 1, big} < Ratio{1, 1}));
}

TEST(Generators, DeterministicAndFeasible) {
  const RandomParams params{6, 20, 20};
  EXPECT_EQ(random_instance(params, 7), random_instance(params, 7));
  EXPECT_NE(random_instance(params, 7), random_instance(params, 8));
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto inst = random_instance(params, rng);
    EXPECT_NO_THROW(validate(inst));
    EXPECT_LE(inst.ml0, inst.ml_max);
  }
}

TEST(Generators, TightFamily) {
  EXPECT_EQ(tight_instance(100), (Instance{{{1, 100}, {99, 1}}, 100, 100}));
  EXPECT_EQ(error_code_of([] { tight_instance(1); }), ErrorCode::invalid_argument);
}

TEST(RunAlgorithm, Dispatch) {
  const auto inst = tight_instance(10);
  EXPECT_EQ(canonical_total(inst, run_algorithm("a1", inst).order), 20u);
  EXPECT_EQ(canonical_total(inst, run_algorithm("exact-bf", inst).order), 12u);
  EXPECT_EQ(canonical_total(inst, run_algorithm("exact-dp", inst).order), 12u);
  EXPECT_EQ(canonical_total(inst, run_algorithm("spt", inst).order), 12u);
  EXPECT_EQ(error_code_of([&] { run_algorithm("greedy", inst); }), ErrorCode::invalid_argument);
}

// Everything but the trailing wall_ms column.
std::string strip_wall(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
  return out;
}

TEST(BenchCsv, TightFamilyReport) {
  std::vector<BenchRecord> records;
  for (std::uint64_t lambda : {1000, 10, 100}) {
    auto recs = bench_instance("tight" + std::to_string(lambda), tight_instance(lambda),
                               {"spt", "a1"}, true);
    records.insert(records.end(), recs.begin(), recs.end());
  }
  std::ostringstream out;
  write_bench_csv(records, out);
  EXPECT_EQ(strip_wall(out.str()),
            "instance_id,n,algorithm,total,optimum,ratio\n"
            "tight10,2,a1,20,12,1.666667\n"
            "tight10,2,spt,12,12,1.000000\n"
            "tight100,2,a1,200,102,1.960784\n"
            "tight100,2,spt,102,102,1.000000\n"
            "tight1000,2,a1,2000,1002,1.996008\n"
            "tight1000,2,spt,1002,1002,1.000000\n"
            "max_ratio,,a1,,,1.996008\n"
            "max_ratio,,spt,,,1.000000\n");
}

TEST(BenchCsv, NoOracleLeavesRatioEmpty) {
  std::ostringstream out;
  write_bench_csv(bench_instance("t", tight_instance(10), {"a1"}, false), out);
  EXPECT_EQ(strip_wall(out.str()), "instance_id,n,algorithm,total,optimum,ratio\nt,2,a1,20,,\n");
}

TEST(BenchCsv, EmptyInputIsHeaderOnly) {
  std::ostringstream out;
  write_bench_csv({}, out);
  EXPECT_EQ(out.str(), "instance_id,n,algorithm,total,optimum,ratio,wall_ms\n");
}

TEST(BenchRecords, RatiosWithinBounds) {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto inst = random_instance({rng.uniform(0, 7), 20, 20}, rng);
    for (const auto& rec : bench_instance("r", inst, {"a1", "spt"}, true)) {
      ASSERT_TRUE(rec.ratio);
      EXPECT_FALSE((*rec.ratio < Ratio{1, 1}));
      if (rec.algorithm == "a1") {
        EXPECT_FALSE((Ratio{2, 1} < *rec.ratio));
      }
    }
  }
}

}  // namespace
}  // namespace pma
