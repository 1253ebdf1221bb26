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

// JSON encodings:
//   Instance  {"jobs":[{"p":..,"delta":..},...],"ml0":..,"ml_max":..}
//   Schedule  {"order":[..],"mas":[{"before_position":..,"duration":..},...]}
//   Partition {"x":[..]} or a bare array [..]
// Parse failures raise ErrorCode::parse_error naming the line/column or the
// offending field.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pma/approx.hpp"
#include "pma/error.hpp"
#include "pma/exact.hpp"
#include "pma/model.hpp"
#include "pma/reduction.hpp"

namespace pma::io {

using json = nlohmann::ordered_json;

namespace detail {

inline json parse_text(std::string_view text, std::string_view what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse_error, std::string(what) + ": " + e.what());
  }
}

inline const json& field(const json& obj, const char* name, const std::string& path) {
  if (!obj.is_object()) throw Error(ErrorCode::parse_error, path + ": expected an object");
  const auto it = obj.find(name);
  if (it == obj.end()) {
    throw Error(ErrorCode::parse_error, path + ": missing field '" + name + "'");
  }
  return *it;
}

inline std::uint64_t as_uint(const json& v, const std::string& path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw Error(ErrorCode::parse_error, path + ": expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

inline const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw Error(ErrorCode::parse_error, path + ": expected an array");
  return v;
}

}  // namespace detail

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse_error, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json to_json(const Instance& instance) {
  json jobs = json::array();
  for (const Job& job : instance.jobs) jobs.push_back({{"p", job.p}, {"delta", job.delta}});
  return {{"jobs", std::move(jobs)}, {"ml0", instance.ml0}, {"ml_max", instance.ml_max}};
}

inline Instance instance_from_json(const json& doc) {
  using namespace detail;
  Instance instance;
  const json& jobs = as_array(field(doc, "jobs", "instance"), "instance.jobs");
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const std::string path = "instance.jobs[" + std::to_string(i) + "]";
    instance.jobs.push_back({as_uint(field(jobs[i], "p", path), path + ".p"),
                             as_uint(field(jobs[i], "delta", path), path + ".delta")});
  }
  instance.ml0 = as_uint(field(doc, "ml0", "instance"), "instance.ml0");
  instance.ml_max = as_uint(field(doc, "ml_max", "instance"), "instance.ml_max");
  return instance;
}

inline Instance parse_instance(std::string_view text) {
  return instance_from_json(detail::parse_text(text, "instance"));
}

inline json to_json(const Schedule& schedule) {
  json mas = json::array();
  for (const auto& ma : schedule.mas) {
    mas.push_back({{"before_position", ma.before_position}, {"duration", ma.duration}});
  }
  return {{"order", schedule.order}, {"mas", std::move(mas)}};
}

inline Schedule schedule_from_json(const json& doc) {
  using namespace detail;
  Schedule schedule;
  const json& order = as_array(field(doc, "order", "schedule"), "schedule.order");
  for (std::size_t i = 0; i < order.size(); ++i) {
    schedule.order.push_back(as_uint(order[i], "schedule.order[" + std::to_string(i) + "]"));
  }
  if (doc.contains("mas")) {
    const json& mas = as_array(doc["mas"], "schedule.mas");
    for (std::size_t i = 0; i < mas.size(); ++i) {
      const std::string path = "schedule.mas[" + std::to_string(i) + "]";
      schedule.mas.push_back(
          {as_uint(field(mas[i], "before_position", path), path + ".before_position"),
           as_uint(field(mas[i], "duration", path), path + ".duration")});
    }
  }
  return schedule;
}

inline Schedule parse_schedule(std::string_view text) {
  return schedule_from_json(detail::parse_text(text, "schedule"));
}

inline json to_json(const Evaluation& eval) {
  json out = {{"completion", eval.completion},
              {"total", eval.total},
              {"makespan", eval.makespan},
              {"feasible", eval.feasible}};
  out["first_ma_position"] =
      eval.first_ma_position ? json(*eval.first_ma_position) : json(nullptr);
  out["residual_before_first_ma"] = eval.residual_before_first_ma;
  return out;
}

inline json to_json(const AuditReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"position", v.position}, {"rule", v.rule}, {"detail", v.detail}});
  }
  return {{"spt_prefix_ok", report.spt_prefix_ok},
          {"ssf_suffix_ok", report.ssf_suffix_ok},
          {"boundary_ok", report.boundary_ok},
          {"violations", std::move(violations)}};
}

inline PartitionInstance parse_partition(std::string_view text) {
  using namespace detail;
  const json doc = parse_text(text, "partition");
  const json& xs = doc.is_array() ? doc : as_array(field(doc, "x", "partition"), "partition.x");
  std::vector<std::uint64_t> x;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    x.push_back(as_uint(xs[i], "partition.x[" + std::to_string(i) + "]"));
  }
  return make_partition(std::move(x));
}

// Sidecar for a generated reduction instance.
inline json reduction_metadata(const ReductionArtifacts& art) {
  return {{"M", art.m_value}, {"Q0", art.q0}, {"Q", art.q}, {"B", art.partition.b}};
}

}  // namespace pma::io
