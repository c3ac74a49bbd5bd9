#include <algorithm>
#include <iostream>
#include <random>

#include "rhf/errors.hpp"
#include "rhf/pipeline.hpp"
#include "run.hpp"

namespace rhf::cli {

namespace {

struct Violation {
  std::string property;
  std::string detail;
};

struct Suite {
  bool verbose = false;
  std::optional<Violation> first;

  void check(bool ok, const std::string& subject, const std::string& property, const std::string& detail = "") {
    if (verbose || !ok)
      std::cout << (ok ? "ok    " : "FAIL  ") << subject << ": " << property << (detail.empty() ? "" : " (" + detail + ")")
                << '\n';
    if (!ok && !first) first = Violation{property, subject + (detail.empty() ? "" : ": " + detail)};
  }
};

std::vector<long long> sorted(std::vector<long long> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<long long> negated(std::vector<long long> v) {
  for (auto& x : v) x = -x;
  return sorted(std::move(v));
}

// random relabelings, curve reversals and surface flips; totals must agree up to one sign
void check_conventions(Suite& s, const std::string& name, const Analysis& a, std::mt19937_64& rng) {
  const auto base = sorted(raw_class_sums(a.diagram, a.generators));
  const int m = a.diagram.num_curves();
  bool ok = true;
  std::string detail;
  for (int round = 0; round < 10 && ok; ++round) {
    RealDiagram d = a.diagram;
    std::vector<int> order = d.alpha_order;
    std::shuffle(order.begin(), order.end(), rng);
    d = relabel_alpha_order(d, order);
    for (int c = 0; c < m; ++c)
      if (rng() & 1) d = flip_curve(d, c);
    if (rng() & 1) d = flip_surface_orientation(d);
    Topology t = compute_topology(d);
    auto sums = sorted(raw_class_sums(d, enumerate_generators(d, t)));
    if (sums != base && sums != negated(base)) {
      ok = false;
      detail = "round " + std::to_string(round);
    }
  }
  s.check(ok, name, "convention flips agree up to a global sign", detail);
}

void check_braid(Suite& s, const std::string& name, const BraidWord& b, int markov_rounds, std::uint64_t seed,
                 int jobs) {
  AnalysisOptions opt;
  opt.jobs = jobs;
  opt.check_gradings = true;
  Analysis a;
  try {
    a = analyze_braid(b, opt);
  } catch (const ConsistencyError& e) {
    s.check(false, name, "pipeline consistency", e.what());
    return;
  } catch (const StructuralError& e) {
    s.check(false, name, "diagram validation", e.what());
    return;
  }
  s.check(validate_diagram(a.diagram).empty(), name, "builder output validates");
  const Integer det = knot_determinant(b);
  s.check(a.h1.order() == det && det == static_cast<unsigned long>(a.partition.classes.size()), name,
          "class count = |H1| = det", "det " + det.get_str());
  s.check(a.generators.size() % 2 == 1, name, "odd generator count");
  bool odd = a.chi->chi_tot > 0 && a.chi->chi_tot % 2 != 0;
  for (const auto& e : a.chi->entries) odd = odd && e.chi % 2 != 0;
  s.check(odd, name, "chi parity");
  s.check(a.gradings && !a.gradings->undefined && a.gradings->ok(), name, "grading cross-check", a.gradings ? a.gradings->first_error : "");
  s.check(generator_count(a.diagram, a.topology) == static_cast<unsigned long>(a.generators.size()), name,
          "generator count matches enumeration");
  if (a.diagram.num_curves() <= 4)
    s.check(brute_force_generators(a.diagram, a.topology) == a.generators, name, "enumeration matches brute force");

  std::mt19937_64 rng(seed ^ fnv1a(name));
  check_conventions(s, name, a, rng);

  if (markov_rounds > 0) {
    bool same = true;
    std::string detail;
    AnalysisOptions vo;
    vo.jobs = jobs;
    for (const BraidWord& v : markov_variants(b, markov_rounds, seed ^ fnv1a(b.str()))) {
      Analysis av = analyze_braid(v, vo);
      if (av.chi->multiset() != a.chi->multiset()) {
        same = false;
        detail = std::to_string(v.strands) + ":" + v.str();
      }
    }
    s.check(same, name, "Markov invariance", detail);
  }
}

void check_diagram_file(Suite& s, const std::string& path, int jobs) {
  RealDiagram d;
  try {
    d = load_diagram(path);
  } catch (const std::exception& e) {
    s.check(false, path, "diagram parses", e.what());
    return;
  }
  for (const auto& issue : validate_diagram(d)) s.check(false, d.name, issue.invariant, issue.detail);
  if (s.first) return;
  AnalysisOptions opt;
  opt.jobs = jobs;
  opt.check_gradings = true;
  try {
    Analysis a = analyze_diagram(d, opt);
    if (a.h1.order() != 0) {
      s.check(a.generators.size() % 2 == 1, d.name, "odd generator count");
      s.check(a.h1.order() == static_cast<unsigned long>(a.partition.classes.size()), d.name, "class count = |H1|");
    }
    if (a.chi && a.h1.order() != 0) {
      bool odd = a.chi->chi_tot > 0 && a.chi->chi_tot % 2 != 0;
      for (const auto& e : a.chi->entries) odd = odd && e.chi % 2 != 0;
      s.check(odd, d.name, "chi parity");
    }
    if (a.gradings && !a.gradings->undefined) s.check(a.gradings->ok(), d.name, "grading cross-check", a.gradings->first_error);
  } catch (const UnsupportedDiagram& e) {
    if (s.verbose) std::cout << "skip  " << d.name << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    s.check(false, d.name, "pipeline consistency", e.what());
  }
}

}  // namespace

int selfcheck(const std::vector<std::string>& diagrams, int markov_rounds, std::uint64_t seed, int jobs, bool verbose) {
  Suite s;
  s.verbose = verbose;
  // diagram files first, so a broken fixture is the first violation reported
  for (const auto& path : diagrams) check_diagram_file(s, path, jobs);
  if (!s.first) {
    const std::vector<std::tuple<std::string, int, std::vector<int>>> knots = {
        {"unknot", 2, {1}},
        {"3_1", 2, {1, 1, 1}},
        {"4_1", 3, {1, -2, 1, -2}},
        {"5_1", 2, {1, 1, 1, 1, 1}},
        {"5_2", 3, {1, 1, 1, 2, -1, 2}},
        {"6_1", 4, {1, 1, 2, -1, -3, 2, -3}},
    };
    for (const auto& [name, strands, word] : knots) {
      check_braid(s, name, make_braid(word, strands), markov_rounds, seed, jobs);
      if (s.first) break;
    }
  }
  if (s.first) {
    std::cout << "selfcheck failed: " << s.first->property << " [" << s.first->detail << "]\n";
    return 3;
  }
  std::cout << "selfcheck passed\n";
  return 0;
}

}  // namespace rhf::cli
