#include "run.hpp"

#include <chrono>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "rhf/pipeline.hpp"

namespace rhf::cli {

namespace {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

std::mutex log_mutex;

void log(const RunOptions& opt, const std::string& msg) {
  if (opt.verbosity <= 0) return;
  std::lock_guard lock(log_mutex);
  std::cerr << "[rhf] " << msg << '\n';
}

ordered_json number(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

// Sets the flag once the deadline passes, unless stopped first.
class Watchdog {
 public:
  Watchdog(double seconds, std::atomic<bool>& flag) {
    if (seconds <= 0) return;
    thread_ = std::jthread([this, seconds, &flag](std::stop_token st) {
      std::unique_lock lock(m_);
      auto deadline = std::chrono::steady_clock::now() + std::chrono::duration<double>(seconds);
      if (!cv_.wait_until(lock, st, deadline, [] { return false; }) && !st.stop_requested()) flag = true;
    });
  }

 private:
  std::mutex m_;
  std::condition_variable_any cv_;
  std::jthread thread_;
};

ordered_json blank_record(const Job& job) {
  ordered_json r;
  r["name"] = job.name;
  if (job.diagram_path.empty()) {
    r["strands"] = job.strands;
    r["word"] = job.word;
  } else {
    r["strands"] = nullptr;
    r["word"] = nullptr;
  }
  r["det"] = nullptr;
  r["generators"] = nullptr;
  r["classes"] = nullptr;
  r["chi_multiset"] = nullptr;
  r["chi_tot"] = nullptr;
  r["checks"] = ordered_json::object();
  return r;
}

void fill_from_analysis(ordered_json& r, const Analysis& a) {
  r["generators"] = a.generators.size();
  ordered_json classes = ordered_json::array();
  for (std::size_t c = 0; c < a.partition.classes.size(); ++c) {
    ordered_json e;
    e["size"] = a.partition.classes[c].members.size();
    e["chi"] = a.chi ? ordered_json(a.chi->entries[c].chi) : ordered_json(nullptr);
    classes.push_back(e);
  }
  r["classes"] = classes;
  if (a.chi && a.h1.order() == 0) {
    r["chi_multiset"] = a.chi->multiset();
    r["chi_tot"] = a.chi->chi_tot;
    r["checks"]["parity"] = nullptr;
  } else if (a.chi) {
    r["chi_multiset"] = a.chi->multiset();
    r["chi_tot"] = a.chi->chi_tot;
    bool parity = a.chi->chi_tot % 2 != 0 && a.chi->chi_tot > 0;
    for (const auto& e : a.chi->entries) parity = parity && e.chi % 2 != 0;
    r["checks"]["parity"] = parity;
  } else {
    r["checks"]["parity"] = nullptr;
  }
  if (a.gradings && a.gradings->undefined) {
    r["checks"]["gradings"] = nullptr;
  } else if (a.gradings) {
    r["checks"]["gradings"] = a.gradings->ok();
    r["checks"]["grading_pairs"] = a.gradings->pairs;
  } else {
    r["checks"]["gradings"] = nullptr;
  }
}

std::optional<ordered_json> cache_load(const RunOptions& opt, const std::string& key) {
  if (opt.cache_dir.empty()) return std::nullopt;
  std::ifstream in(fs::path(opt.cache_dir) / (key + ".json"));
  if (!in) return std::nullopt;
  try {
    return ordered_json::parse(in);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void cache_store(const RunOptions& opt, const std::string& key, const ordered_json& record) {
  if (opt.cache_dir.empty()) return;
  std::error_code ec;
  fs::create_directories(opt.cache_dir, ec);
  fs::path final_path = fs::path(opt.cache_dir) / (key + ".json");
  fs::path tmp = final_path;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp);
    out << record.dump();
  }
  fs::rename(tmp, final_path, ec);
}

void compute(const Job& job, const RunOptions& opt, int inner_jobs, ordered_json& r, Status& status,
             std::atomic<bool>& cancel) {
  AnalysisOptions ao;
  ao.jobs = inner_jobs;
  ao.generators_only = opt.generators_only;
  ao.check_gradings = opt.check_gradings && !opt.generators_only;
  ao.cancel = &cancel;

  if (!job.diagram_path.empty()) {
    RealDiagram d = load_diagram(job.diagram_path);
    Analysis a = analyze_diagram(std::move(d), ao);
    r["det"] = number(a.h1.order());
    fill_from_analysis(r, a);
    bool ok = a.h1.order() == 0 || Integer(static_cast<unsigned long>(a.partition.classes.size())) <= a.h1.order();
    r["checks"]["det"] = ok;
    r["checks"]["markov"] = nullptr;
    if (a.gradings && !a.gradings->ok()) status = Status::consistency_error;
    return;
  }

  BraidWord b = make_braid(job.word, job.strands);
  Integer det = knot_determinant(b);
  r["det"] = number(det);
  try {
    Analysis a = opt.det_check ? analyze_braid(b, ao) : analyze_diagram(build_real_diagram(b), ao);
    fill_from_analysis(r, a);
    if (opt.det_check) r["checks"]["det"] = true;
    else r["checks"]["det"] = nullptr;
    if (a.gradings && !a.gradings->ok()) {
      status = Status::consistency_error;
      r["checks"]["error"] = a.gradings->first_error;
    }
    if (opt.markov_rounds > 0 && a.chi) {
      AnalysisOptions vo = ao;
      vo.check_gradings = false;
      bool same = true;
      ordered_json words = ordered_json::array();
      for (const BraidWord& v : markov_variants(b, opt.markov_rounds, opt.seed ^ fnv1a(b.str()))) {
        Analysis av = opt.det_check ? analyze_braid(v, vo) : analyze_diagram(build_real_diagram(v), vo);
        words.push_back(std::to_string(v.strands) + ":" + v.str());
        same = same && av.chi && av.chi->multiset() == a.chi->multiset() && av.chi->chi_tot == a.chi->chi_tot;
      }
      r["checks"]["markov"] = same;
      r["checks"]["markov_words"] = words;
      if (!same) status = Status::consistency_error;
    } else {
      r["checks"]["markov"] = nullptr;
    }
    if (r["checks"]["parity"].is_boolean() && !r["checks"]["parity"].get<bool>()) status = Status::consistency_error;
  } catch (const ConsistencyError& e) {
    r["checks"]["det"] = false;
    throw;
  }
}

}  // namespace

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string cache_key(const Job& job, const RunOptions& opt) {
  std::ostringstream key;
  key << "rhf " << kVersion << " conventions " << kConventionVersion << '\n';
  if (!job.diagram_path.empty()) {
    std::ifstream in(job.diagram_path);
    std::stringstream body;
    body << in.rdbuf();
    key << "diagram " << job.name << '\n' << body.str();
  } else {
    key << "braid " << job.name << ' ' << job.strands << ' ';
    for (int l : job.word) key << l << ',';
  }
  key << "\noptions " << opt.check_gradings << opt.generators_only << opt.det_check << ' ' << opt.markov_rounds << ' ' << opt.seed;
  std::ostringstream hex;
  hex << std::hex << fnv1a(key.str());
  return hex.str();
}

Outcome run_job(const Job& job, const RunOptions& opt, int inner_jobs) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  out.record = blank_record(job);
  auto finish = [&] {
    long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    out.record["millis"] = opt.timing ? ms : 0;
    return out;
  };
  if (!job.input_error.empty()) {
    out.status = Status::input_error;
    out.record["checks"]["error"] = job.input_error;
    return finish();
  }

  const std::string key = opt.cache_dir.empty() ? "" : cache_key(job, opt);
  if (auto cached = cache_load(opt, key)) {
    log(opt, job.name + ": cached");
    out.record = *cached;
    return finish();
  }

  std::atomic<bool> cancel{false};
  try {
    Watchdog dog(opt.timeout_seconds, cancel);
    log(opt, job.name + ": start");
    compute(job, opt, inner_jobs, out.record, out.status, cancel);
  } catch (const Cancelled&) {
    out.record["checks"]["timeout"] = true;
    // partial result: the streaming count is cheap even when signs are not
    try {
      if (job.diagram_path.empty()) {
        RealDiagram d = build_real_diagram(make_braid(job.word, job.strands));
        out.record["generators"] = number(generator_count(d, compute_topology(d)));
      }
    } catch (const std::exception&) {
    }
    log(opt, job.name + ": timed out");
    return finish();
  } catch (const InputError& e) {
    out.status = Status::input_error;
    out.record["checks"]["error"] = e.what();
  } catch (const StructuralError& e) {
    out.status = Status::input_error;
    out.record["checks"]["error"] = e.what();
  } catch (const UnsupportedDiagram& e) {
    out.status = Status::input_error;
    out.record["checks"]["error"] = e.what();
  } catch (const ConsistencyError& e) {
    out.status = Status::consistency_error;
    out.record["checks"]["error"] = e.what();
  }
  log(opt, job.name + ": done");
  if (out.status == Status::ok) cache_store(opt, key, out.record);
  return finish();
}

std::vector<Outcome> run_all(const std::vector<Job>& jobs, const RunOptions& opt,
                             const std::function<void(const Outcome&)>& emit) {
  const int n = static_cast<int>(jobs.size());
  const int outer = std::max(1, std::min(opt.jobs, n));
  const int inner = n == 1 ? std::max(1, opt.jobs) : 1;
  std::vector<std::optional<Outcome>> done(n);
  std::vector<Outcome> ordered;
  std::mutex m;
  int next_emit = 0;
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k; (k = next++) < n;) {
      Outcome o = run_job(jobs[k], opt, inner);
      std::lock_guard lock(m);
      done[k] = std::move(o);
      while (next_emit < n && done[next_emit]) {
        emit(*done[next_emit]);
        ordered.push_back(*done[next_emit]);
        ++next_emit;
      }
    }
  };
  std::vector<std::jthread> pool;
  for (int w = 0; w < outer; ++w) pool.emplace_back(worker);
  pool.clear();
  return ordered;
}

std::string render_json(const nlohmann::ordered_json& record) { return record.dump(); }

std::string tsv_header() { return "name\tstrands\tword\tdet\tgenerators\tclasses\tchi_multiset\tchi_tot\tchecks\tmillis"; }

std::string render_tsv(const nlohmann::ordered_json& r) {
  auto cell = [](const ordered_json& v) -> std::string {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ',';
        s += v[k].is_object() ? v[k]["size"].dump() + ":" + v[k]["chi"].dump() : v[k].dump();
      }
      return s;
    }
    return v.dump();
  };
  std::string checks;
  for (const auto& [k, v] : r["checks"].items()) {
    if (k == "markov_words") continue;
    if (!checks.empty()) checks += ';';
    checks += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  std::ostringstream out;
  out << cell(r["name"]) << '\t' << cell(r["strands"]) << '\t' << cell(r["word"]) << '\t' << cell(r["det"]) << '\t'
      << cell(r["generators"]) << '\t' << cell(r["classes"]) << '\t' << cell(r["chi_multiset"]) << '\t' << cell(r["chi_tot"])
      << '\t' << checks << '\t' << cell(r["millis"]);
  return out.str();
}

}  // namespace rhf::cli
