#include "rhf/pipeline.hpp"

#include <future>

namespace rhf {

namespace {

void poll(const std::atomic<bool>* cancel) {
  if (cancel && cancel->load(std::memory_order_relaxed)) throw Cancelled();
}

std::vector<int> compute_signs(const RealDiagram& d, const Topology& t, const std::vector<Generator>& gens, int jobs,
                               const std::atomic<bool>* cancel) {
  std::vector<int> signs(gens.size());
  const std::size_t n = gens.size();
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(n / 256) + 1));
  std::vector<std::future<void>> parts;
  for (int w = 0; w < jobs; ++w)
    parts.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, [&, w] {
      for (std::size_t g = w; g < n; g += jobs) {
        if ((g & 1023) == 0) poll(cancel);
        signs[g] = generator_sign(d, t, gens[g]);
      }
    }));
  for (auto& p : parts) p.get();
  return signs;
}

}  // namespace

Analysis analyze_diagram(RealDiagram d, const AnalysisOptions& opt) {
  auto issues = validate_diagram(d);
  if (!issues.empty())
    throw StructuralError("diagram violates '" + issues.front().invariant + "': " + issues.front().detail);
  Analysis a;
  a.diagram = std::move(d);
  a.topology = compute_topology(a.diagram);
  a.h1 = h1_presentation(a.diagram, a.topology);
  poll(opt.cancel);
  a.generators = enumerate_generators(a.diagram, a.topology, opt.jobs);
  poll(opt.cancel);
  a.partition = partition_by_spinc(a.diagram, a.topology, a.h1, a.generators);
  if (a.h1.order() != 0 && Integer(static_cast<unsigned long>(a.partition.classes.size())) > a.h1.order())
    throw ConsistencyError("more classes than elements of H1");
  if (opt.generators_only || !a.diagram.quotient_orientable) return a;
  a.signs = compute_signs(a.diagram, a.topology, a.generators, opt.jobs, opt.cancel);
  a.chi = chi_report(a.partition, a.signs);
  a.chi->determinant = a.h1.order();
  for (const auto& e : a.chi->entries)
    if (e.chi % 2 == 0 && a.h1.order() != 0) throw ConsistencyError("even Euler characteristic in a class");
  if (opt.check_gradings) {
    a.gradings = check_gradings(a, opt.cancel);
    a.chi->gradings_consistent = a.gradings->ok();
  }
  return a;
}

Analysis analyze_braid(const BraidWord& b, const AnalysisOptions& opt) {
  Analysis a = analyze_diagram(build_real_diagram(b), opt);
  a.diagram.name = b.str();
  Integer det = knot_determinant(b);
  if (a.h1.order() != det) throw ConsistencyError("|H1| = " + a.h1.order().get_str() + " but det = " + det.get_str());
  if (Integer(static_cast<unsigned long>(a.partition.classes.size())) != det)
    throw ConsistencyError(std::to_string(a.partition.classes.size()) + " classes but det = " + det.get_str());
  if (a.chi) a.chi->determinant = det;
  return a;
}

GradingCheck check_gradings(const Analysis& a, const std::atomic<bool>* cancel) {
  GradingCheck out;
  if (a.signs.size() != a.generators.size()) {
    out.first_error = "signs not computed";
    return out;
  }
  const RealDiagram& d = a.diagram;
  const Topology& t = a.topology;
  const RegionData regions = compute_regions(d, t);
  const DomainSolver solver(d, t, regions);
  if (solver.periodic_rank() > 0) {
    out.undefined = true;
    return out;
  }
  const std::vector<Integer> zero(d.num_fixed_circles(), 0);
  auto note = [&](const std::string& msg) {
    if (out.first_error.empty()) out.first_error = msg;
  };
  for (const auto& cls : a.partition.classes) {
    poll(cancel);
    const auto& mem = cls.members;
    const Generator& base = a.generators[mem.front()];
    std::vector<std::optional<Domain>> from_base;
    for (int g : mem) from_base.push_back(solver.find(base, a.generators[g], zero));
    for (std::size_t i = 0; i < mem.size(); ++i)
      for (std::size_t j = i + 1; j < mem.size(); ++j) {
        ++out.pairs;
        if (!from_base[i] || !from_base[j]) {
          ++out.missing;
          note("no domain inside a class");
          continue;
        }
        Domain dom = compose(reverse(*from_base[i]), *from_base[j]);
        if (!dom.real_invariant) ++out.asymmetric;
        try {
          IndexResult idx = real_index(d, t, regions, dom);
          Integer rhs2 = 4 * idx.real + (idx.sigma_source - idx.sigma_target);
          if (2 * idx.classical != rhs2) ++out.relation;
          int mu = grading_of(idx, dom);
          int expected = a.signs[mem[i]] * a.signs[mem[j]] > 0 ? 0 : 1;
          if (mu != expected) {
            ++out.failures;
            note("grading disagrees with signs for generators " + std::to_string(mem[i]) + ", " + std::to_string(mem[j]));
          }
        } catch (const ConsistencyError& e) {
          note(e.what());
        }
      }
  }
  return out;
}

std::vector<long long> raw_class_sums(const RealDiagram& d, const std::vector<Generator>& gens) {
  Topology t = compute_topology(d);
  HomologyPresentation hp = h1_presentation(d, t);
  SpinCPartition part = partition_by_spinc(d, t, hp, gens);
  std::vector<long long> out;
  for (const auto& c : part.classes) {
    long long s = 0;
    for (int g : c.members) s += generator_sign(d, t, gens[g]);
    out.push_back(s);
  }
  return out;
}

}  // namespace rhf
