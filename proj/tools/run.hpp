#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rhf/braid.hpp"

namespace rhf::cli {

struct Job {
  std::string name;
  int strands = 0;
  std::vector<int> word;
  std::string diagram_path;  // set for diagram-file input
  std::string input_error;   // set when the corpus line itself was unreadable
};

struct RunOptions {
  bool check_gradings = false;
  bool generators_only = false;
  bool det_check = true;
  int markov_rounds = 0;
  int jobs = 1;
  std::uint64_t seed = 1;
  std::string cache_dir;
  double timeout_seconds = 0;
  bool timing = true;
  int verbosity = 0;
};

enum class Status { ok = 0, input_error = 2, consistency_error = 3 };

struct Outcome {
  nlohmann::ordered_json record;
  Status status = Status::ok;
};

Outcome run_job(const Job& job, const RunOptions& opt, int inner_jobs);
std::vector<Outcome> run_all(const std::vector<Job>& jobs, const RunOptions& opt,
                             const std::function<void(const Outcome&)>& emit);

std::string render_json(const nlohmann::ordered_json& record);
std::string tsv_header();
std::string render_tsv(const nlohmann::ordered_json& record);

std::uint64_t fnv1a(const std::string& s);
std::string cache_key(const Job& job, const RunOptions& opt);

int selfcheck(const std::vector<std::string>& diagrams, int markov_rounds, std::uint64_t seed, int jobs, bool verbose);

}  // namespace rhf::cli
