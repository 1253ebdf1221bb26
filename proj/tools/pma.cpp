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

// pma: command-line front end for the partial-maintenance scheduling solvers.
//
//   pma solve <instance.json> --algorithm {spt|a1|exact-bf|exact-dp} [--out schedule.json]
//   pma evaluate <instance.json> <schedule.json>
//   pma audit <instance.json> <schedule.json>
//   pma generate {random|tight|reduction} [--n --max-p --max-delta --seed | --lambda |
//                                          --partition-file] [--out] [--meta]
//   pma gen-reduction --partition-file <x.json> [--out] [--meta]
//   pma bench <dir> --algorithm a1,spt --oracle {exact-dp|none} [--out report.csv]
//
// Exit codes: 0 success, 1 I/O, parse or usage error, 2 infeasible instance
// (or infeasible schedule for `evaluate`).

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pma/pma.hpp"

namespace fs = std::filesystem;
using pma::io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw pma::Error(pma::ErrorCode::parse_error, out_path + ": cannot write file");
  out << text;
}

std::string sidecar_path(const std::string& out, const std::string& meta) {
  if (!meta.empty()) return meta;
  if (out.empty()) return {};
  fs::path p(out);
  return (p.parent_path() / (p.stem().string() + ".meta.json")).string();
}

int run_solve(const std::string& path, const std::string& algorithm, const std::string& out) {
  const auto instance = pma::io::parse_instance(pma::io::read_file(path));
  const auto schedule = pma::run_algorithm(algorithm, instance);
  const auto eval = pma::evaluate(instance, schedule);
  if (!out.empty()) emit(pma::io::to_json(schedule).dump() + "\n", out);
  json doc = {{"algorithm", algorithm},
              {"schedule", pma::io::to_json(schedule)},
              {"evaluation", pma::io::to_json(eval)}};
  std::cout << doc.dump() << '\n';
  return kExitOk;
}

int run_evaluate(const std::string& instance_path, const std::string& schedule_path) {
  const auto instance = pma::io::parse_instance(pma::io::read_file(instance_path));
  const auto schedule = pma::io::parse_schedule(pma::io::read_file(schedule_path));
  const auto eval = pma::evaluate(instance, schedule);
  std::cout << pma::io::to_json(eval).dump() << '\n';
  return eval.feasible ? kExitOk : kExitInfeasible;
}

int run_audit(const std::string& instance_path, const std::string& schedule_path) {
  const auto instance = pma::io::parse_instance(pma::io::read_file(instance_path));
  const auto schedule = pma::io::parse_schedule(pma::io::read_file(schedule_path));
  std::cout << pma::io::to_json(pma::audit_lemma2(instance, schedule)).dump() << '\n';
  return kExitOk;
}

struct GenerateOptions {
  std::string kind;
  std::size_t n = 6;
  std::uint64_t max_p = 20;
  std::uint64_t max_delta = 20;
  std::uint64_t seed = 1;
  std::uint64_t lambda = 10;
  std::string partition_file;
  std::string out;
  std::string meta;
};

int run_generate(const GenerateOptions& opt) {
  if (opt.kind == "random") {
    const auto inst = pma::random_instance({opt.n, opt.max_p, opt.max_delta}, opt.seed);
    emit(pma::io::to_json(inst).dump() + "\n", opt.out);
  } else if (opt.kind == "tight") {
    emit(pma::io::to_json(pma::tight_instance(opt.lambda)).dump() + "\n", opt.out);
  } else if (opt.kind == "reduction") {
    if (opt.partition_file.empty()) {
      throw pma::Error(pma::ErrorCode::invalid_argument, "--partition-file is required");
    }
    const auto part = pma::io::parse_partition(pma::io::read_file(opt.partition_file));
    const auto art = pma::build_reduction(part);
    emit(pma::io::to_json(art.instance).dump() + "\n", opt.out);
    const std::string meta_text = pma::io::reduction_metadata(art).dump() + "\n";
    const std::string meta = sidecar_path(opt.out, opt.meta);
    if (meta.empty()) {
      std::cerr << meta_text;
    } else {
      emit(meta_text, meta);
    }
  } else {
    throw pma::Error(pma::ErrorCode::invalid_argument, "unknown generator '" + opt.kind + "'");
  }
  return kExitOk;
}

int run_bench(const std::string& dir, const std::vector<std::string>& algorithms,
              const std::string& oracle, const std::string& out) {
  if (oracle != "exact-dp" && oracle != "none") {
    throw pma::Error(pma::ErrorCode::invalid_argument, "unknown oracle '" + oracle + "'");
  }
  for (const auto& a : algorithms) {
    const auto& known = pma::algorithm_names();
    if (std::find(known.begin(), known.end(), a) == known.end()) {
      throw pma::Error(pma::ErrorCode::invalid_argument, "unknown algorithm '" + a + "'");
    }
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    if (name.size() > 10 && name.ends_with(".meta.json")) continue;
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<pma::BenchRecord> records;
  for (const auto& file : files) {
    try {
      const auto instance = pma::io::parse_instance(pma::io::read_file(file.string()));
      auto recs = pma::bench_instance(file.stem().string(), instance, algorithms,
                                      oracle == "exact-dp");
      records.insert(records.end(), recs.begin(), recs.end());
    } catch (const pma::Error& e) {
      std::cerr << "warning: skipping " << file.string() << ": " << e.what() << '\n';
    }
  }
  std::ostringstream csv;
  pma::write_bench_csv(std::move(records), csv);
  emit(csv.str(), out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-machine scheduling with partial maintenance"};
  app.require_subcommand(1);

  std::string instance_path, schedule_path, algorithm = "a1", out;
  auto* solve = app.add_subcommand("solve", "Solve an instance and print schedule + evaluation");
  solve->add_option("instance", instance_path, "Instance JSON file")->required();
  solve->add_option("--algorithm", algorithm, "spt | a1 | exact-bf | exact-dp")
      ->check(CLI::IsMember(pma::algorithm_names()));
  solve->add_option("--out", out, "Also write the schedule JSON to this file");

  auto* evaluate = app.add_subcommand("evaluate", "Evaluate a schedule against an instance");
  evaluate->add_option("instance", instance_path)->required();
  evaluate->add_option("schedule", schedule_path)->required();

  auto* audit = app.add_subcommand("audit", "Structural audit of a canonical schedule");
  audit->add_option("instance", instance_path)->required();
  audit->add_option("schedule", schedule_path)->required();

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Generate an instance");
  generate->add_option("kind", gen.kind, "random | tight | reduction")
      ->required()
      ->check(CLI::IsMember({"random", "tight", "reduction"}));
  generate->add_option("--n", gen.n, "Job count (random)");
  generate->add_option("--max-p", gen.max_p, "Largest processing time (random)");
  generate->add_option("--max-delta", gen.max_delta, "Largest deterioration (random)");
  generate->add_option("--seed", gen.seed, "RNG seed (random)");
  generate->add_option("--lambda", gen.lambda, "Tight-family parameter, >= 2");
  generate->add_option("--partition-file", gen.partition_file, "Partition input JSON");
  generate->add_option("--out", gen.out, "Instance output file (default stdout)");
  generate->add_option("--meta", gen.meta, "Reduction sidecar file (default <out>.meta.json)");

  GenerateOptions red;
  red.kind = "reduction";
  auto* gen_reduction = app.add_subcommand("gen-reduction", "Generate a reduction instance");
  gen_reduction->add_option("--partition-file", red.partition_file)->required();
  gen_reduction->add_option("--out", red.out);
  gen_reduction->add_option("--meta", red.meta);

  std::string dir, oracle = "exact-dp";
  std::vector<std::string> algorithms{"a1"};
  auto* bench = app.add_subcommand("bench", "Benchmark algorithms on a directory of instances");
  bench->add_option("dir", dir, "Directory of instance JSON files")->required();
  bench->add_option("--algorithm", algorithms, "Comma-separated algorithms")->delimiter(',');
  bench->add_option("--oracle", oracle, "exact-dp | none");
  bench->add_option("--out", out, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*solve) return run_solve(instance_path, algorithm, out);
    if (*evaluate) return run_evaluate(instance_path, schedule_path);
    if (*audit) return run_audit(instance_path, schedule_path);
    if (*generate) return run_generate(gen);
    if (*gen_reduction) return run_generate(red);
    if (*bench) return run_bench(dir, algorithms, oracle, out);
  } catch (const pma::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == pma::ErrorCode::infeasible_job ? kExitInfeasible : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
