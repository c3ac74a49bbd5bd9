#include <CLI11.hpp>
#include <cctype>
#include <filesystem>
#include <iostream>

#include "rhf/corpus.hpp"
#include "rhf/pipeline.hpp"
#include "run.hpp"

using namespace rhf;

namespace {

// one more than the largest generator index, so "1,1,1" means a 2-braid
int default_strands(const std::string& word) {
  int top = 0;
  std::string digits;
  for (char ch : word + " ") {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits += ch;
    } else if (!digits.empty()) {
      top = std::max(top, digits.size() > 6 ? 1000000 : std::stoi(digits));
      digits.clear();
    }
  }
  return top + 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"real Heegaard Floer Euler characteristics of knots given as braid closures"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  cli::RunOptions opt;
  std::string braid, input, diagram, name, format = "json";
  int strands = 0;
  bool no_timing = false, no_det_check = false;

  auto* compute = app.add_subcommand("compute", "compute gradings and Euler characteristics");
  auto* src = compute->add_option_group("source");
  auto* braid_opt = src->add_option("--braid", braid, "braid word, e.g. \"1,1,1\" or \"[1,-2,1,-2]\"");
  src->add_option("--input", input, "corpus file (JSON lines or a name/strands/word table)");
  src->add_option("--diagram", diagram, "diagram file");
  src->require_option(1);
  compute->add_option("--strands", strands, "number of strands for --braid (default: largest generator + 1)");
  compute->add_option("--name", name, "record name for --braid");
  compute->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "tsv"}));
  compute->add_flag("--check-gradings", opt.check_gradings, "cross-check relative gradings inside each class");
  compute->add_option("--markov-rounds", opt.markov_rounds, "random Markov variants to compare")->check(CLI::NonNegativeNumber);
  compute->add_option("--jobs,-j", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
  compute->add_option("--cache", opt.cache_dir, "result cache directory");
  compute->add_option("--seed", opt.seed, "seed for Markov variants");
  compute->add_flag("--generators-only", opt.generators_only, "enumerate and partition generators, skip signs");
  compute->add_flag("--no-det-check", no_det_check, "do not require class count = determinant");
  compute->add_option("--timeout", opt.timeout_seconds, "per-knot time limit in seconds (0 = none)");
  compute->add_flag("--no-timing", no_timing, "report millis as 0 so output is reproducible byte for byte");
  compute->add_flag("-v,--verbose", opt.verbosity, "progress on stderr");

  std::vector<std::string> check_diagrams;
  int check_rounds = 2;
  std::uint64_t check_seed = 1;
  int check_jobs = 1;
  bool check_verbose = false;
  auto* selfcheck = app.add_subcommand("selfcheck", "run the built-in property suites");
  selfcheck->add_option("--diagram", check_diagrams, "extra diagram files to validate and analyze");
  selfcheck->add_option("--markov-rounds", check_rounds, "Markov variants per knot")->check(CLI::NonNegativeNumber);
  selfcheck->add_option("--seed", check_seed, "seed for random moves and convention flips");
  selfcheck->add_option("--jobs,-j", check_jobs, "worker threads")->check(CLI::PositiveNumber);
  selfcheck->add_flag("-v,--verbose", check_verbose, "print every check");

  std::string dump_braid;
  int dump_strands = 0;
  auto* dump = app.add_subcommand("diagram", "write the real Heegaard diagram built from a braid");
  dump->add_option("--braid", dump_braid, "braid word")->required();
  dump->add_option("--strands", dump_strands, "number of strands");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (*dump) {
    try {
      if (dump_strands == 0) dump_strands = default_strands(dump_braid);
      std::cout << dump_diagram(build_real_diagram(parse_braid(dump_braid, dump_strands))) << '\n';
      return 0;
    } catch (const InputError& e) {
      std::cerr << "rhf: " << e.what() << '\n';
      return 2;
    }
  }
  if (*selfcheck) return cli::selfcheck(check_diagrams, check_rounds, check_seed, check_jobs, check_verbose);

  opt.timing = !no_timing;
  opt.det_check = !no_det_check;
  std::vector<cli::Job> jobs;
  if (braid_opt->count() > 0) {
    cli::Job job;
    job.name = name.empty() ? "braid" : name;
    try {
      if (strands == 0) strands = default_strands(braid);
      BraidWord b = parse_braid(braid, strands);
      job.strands = b.strands;
      job.word = b.letters;
    } catch (const InputError& e) {
      job.strands = strands;
      job.input_error = e.what();
    }
    jobs.push_back(job);
  } else if (!input.empty()) {
    std::vector<CorpusRecord> records;
    try {
      records = read_corpus(input);
    } catch (const InputError& e) {
      std::cerr << "rhf: " << e.what() << '\n';
      return 2;
    }
    for (auto& r : records) jobs.push_back({r.name, r.strands, r.word, "", r.error});
  } else {
    cli::Job job;
    job.diagram_path = diagram;
    job.name = name.empty() ? std::filesystem::path(diagram).stem().string() : name;
    jobs.push_back(job);
  }

  if (format == "tsv") std::cout << cli::tsv_header() << '\n';
  int worst = 0;
  cli::run_all(jobs, opt, [&](const cli::Outcome& o) {
    std::cout << (format == "tsv" ? cli::render_tsv(o.record) : cli::render_json(o.record)) << '\n' << std::flush;
    int code = static_cast<int>(o.status);
    if (code == 3 || (code == 2 && worst == 0)) worst = code;
  });
  return worst;
}
