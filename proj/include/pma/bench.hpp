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
#include <chrono>
#include <cstdio>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pma/approx.hpp"
#include "pma/error.hpp"
#include "pma/exact.hpp"
#include "pma/model.hpp"

namespace pma {

inline const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"spt", "a1", "exact-bf", "exact-dp"};
  return names;
}

// Dispatches a solver by its CLI name. Returns a canonical schedule.
inline Schedule run_algorithm(std::string_view name, const Instance& instance) {
  if (name == "spt") return solve_spt(instance);
  if (name == "a1") return solve_a1(instance).schedule;
  if (name == "exact-bf") return canonical_schedule(instance, solve_brute_force(instance).best_order);
  if (name == "exact-dp") return canonical_schedule(instance, solve_subset_dp(instance).best_order);
  throw Error(ErrorCode::invalid_argument, "unknown algorithm '" + std::string(name) + "'");
}

// total / optimum kept as an exact fraction.
struct Ratio {
  Time num = 0;
  Time den = 1;

  friend bool operator<(const Ratio& a, const Ratio& b) {
    using wide = unsigned __int128;
    return static_cast<wide>(a.num) * b.den < static_cast<wide>(b.num) * a.den;
  }
};

// Decimal rendering with `digits` places, rounded half up.
inline std::string format_ratio(const Ratio& r, int digits = 6) {
  using wide = unsigned __int128;
  if (r.den == 0) throw Error(ErrorCode::invalid_argument, "ratio with zero denominator");
  wide scaled = r.num;
  wide scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  scaled = (scaled * scale * 2 + r.den) / (static_cast<wide>(r.den) * 2);
  const auto whole = static_cast<std::uint64_t>(scaled / scale);
  auto frac = static_cast<std::uint64_t>(scaled % scale);
  std::string frac_text(static_cast<std::size_t>(digits), '0');
  for (int i = digits; i-- > 0;) {
    frac_text[static_cast<std::size_t>(i)] = static_cast<char>('0' + frac % 10);
    frac /= 10;
  }
  return std::to_string(whole) + (digits > 0 ? "." + frac_text : "");
}

struct BenchRecord {
  std::string instance_id;
  std::size_t n = 0;
  std::string algorithm;
  Time total = 0;
  std::optional<Time> optimum;
  std::optional<Ratio> ratio;
  double wall_ms = 0.0;
};

// A zero optimum forces a zero total; that ratio is reported as 1.
inline std::optional<Ratio> make_ratio(Time total, std::optional<Time> optimum) {
  if (!optimum) return std::nullopt;
  if (*optimum == 0) return Ratio{1, 1};
  return Ratio{total, *optimum};
}

inline std::vector<BenchRecord> bench_instance(const std::string& id, const Instance& instance,
                                               const std::vector<std::string>& algorithms,
                                               bool with_oracle) {
  std::optional<Time> optimum;
  if (with_oracle) optimum = solve_subset_dp(instance).best_total;
  std::vector<BenchRecord> records;
  for (const auto& name : algorithms) {
    const auto start = std::chrono::steady_clock::now();
    const Schedule schedule = run_algorithm(name, instance);
    const Time total = canonical_total(instance, schedule.order);
    const auto stop = std::chrono::steady_clock::now();
    BenchRecord rec;
    rec.instance_id = id;
    rec.n = instance.size();
    rec.algorithm = name;
    rec.total = total;
    rec.optimum = optimum;
    rec.ratio = make_ratio(total, optimum);
    rec.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    records.push_back(std::move(rec));
  }
  return records;
}

inline constexpr std::string_view kBenchHeader = "instance_id,n,algorithm,total,optimum,ratio,wall_ms";

// Rows sorted by (instance_id, algorithm), then one `max_ratio` row per
// algorithm that has at least one ratio.
inline void write_bench_csv(std::vector<BenchRecord> records, std::ostream& out) {
  std::sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
    return a.instance_id != b.instance_id ? a.instance_id < b.instance_id
                                          : a.algorithm < b.algorithm;
  });
  out << kBenchHeader << '\n';
  std::map<std::string, Ratio> worst;
  for (const auto& rec : records) {
    char wall[32];
    std::snprintf(wall, sizeof wall, "%.3f", rec.wall_ms);
    out << rec.instance_id << ',' << rec.n << ',' << rec.algorithm << ',' << rec.total << ','
        << (rec.optimum ? std::to_string(*rec.optimum) : "") << ','
        << (rec.ratio ? format_ratio(*rec.ratio) : "") << ',' << wall << '\n';
    if (rec.ratio) {
      auto [it, inserted] = worst.try_emplace(rec.algorithm, *rec.ratio);
      if (!inserted && it->second < *rec.ratio) it->second = *rec.ratio;
    }
  }
  for (const auto& [algorithm, ratio] : worst) {
    out << "max_ratio,," << algorithm << ",,," << format_ratio(ratio) << ",\n";
  }
}

}  // namespace pma
