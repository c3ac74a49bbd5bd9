#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace rhf;
using namespace rhf::test;

namespace {

// every choice of one crossing per alpha curve whose point set is tau-invariant
// and meets each beta curve once
std::set<std::vector<int>> oracle_generators(const RealDiagram& d) {
  Topology t = compute_topology(d);
  const int m = d.num_curves();
  std::vector<std::vector<int>> on_alpha(m);
  for (int v = 0; v < d.num_vertices(); ++v)
    if (t.alpha_at[v] >= 0 && t.beta_at[v] >= 0) on_alpha[t.alpha_at[v]].push_back(v);
  std::set<std::vector<int>> out;
  std::vector<int> pick(m);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      std::set<int> betas, pts(pick.begin(), pick.end());
      for (int v : pick) betas.insert(t.beta_at[v]);
      if (static_cast<int>(betas.size()) != m) return;
      for (int v : pick)
        if (!pts.count(d.tau_vertex[v])) return;
      out.insert(pick);
      return;
    }
    for (int v : on_alpha[i]) {
      pick[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

TEST_SUITE("generators") {
  TEST_CASE("empty generator when there are no curves") {
    RealDiagram d = load_diagram(fixture("sphere.json"));
    Topology t = compute_topology(d);
    auto gens = enumerate_generators(d, t);
    REQUIRE(gens.size() == 1);
    CHECK(gens[0].size() == 0);
    CHECK(generator_count(d, t) == 1);
  }

  TEST_CASE("hand fixtures") {
    RealDiagram torus = load_diagram(fixture("s3_torus.json"));
    CHECK(enumerate_generators(torus, compute_topology(torus)).size() == 1);
    RealDiagram lenses = load_diagram(fixture("nested_lenses.json"));
    CHECK(enumerate_generators(lenses, compute_topology(lenses)).size() == 4);
  }

  TEST_CASE("enumeration, brute force, oracle and count agree") {
    for (const auto& k : small_knots()) {
      CAPTURE(k.name);
      RealDiagram d = build_real_diagram(braid(k));
      Topology t = compute_topology(d);
      auto gens = enumerate_generators(d, t);
      CHECK(std::is_sorted(gens.begin(), gens.end()));
      CHECK(generator_count(d, t) == static_cast<unsigned long>(gens.size()));
      CHECK(enumerate_generators(d, t, 4) == gens);
      if (d.num_curves() <= 4) CHECK(brute_force_generators(d, t) == gens);
      std::set<std::vector<int>> mine;
      for (const auto& g : gens) {
        CHECK(is_generator(d, t, g));
        mine.insert(g.point);
      }
      CHECK(mine == oracle_generators(d));
    }
  }

  TEST_CASE("generator structure") {
    RealDiagram d = build_real_diagram(make_braid({1, 1, 1, 2, -1, 2}, 3));
    Topology t = compute_topology(d);
    for (const auto& g : enumerate_generators(d, t)) {
      for (int i = 0; i < g.size(); ++i) {
        int j = g.sigma[i];
        CHECK(g.sigma[j] == i);
        CHECK(t.alpha_at[g.point[i]] == i);
        CHECK(t.beta_at[g.point[i]] == j);
        if (j == i) CHECK(t.circle_at[g.point[i]] >= 0);
        else CHECK(g.point[j] == d.tau_vertex[g.point[i]]);
      }
      Generator broken = g;
      if (broken.size() >= 2) {
        std::swap(broken.point[0], broken.point[1]);
        CHECK_FALSE(is_generator(d, t, broken));
      }
    }
  }

  TEST_CASE("odd count for knots") {
    for (const auto& k : small_knots()) {
      const Analysis& a = analysis_of(k);
      CHECK(a.generators.size() % 2 == 1);
    }
  }

  TEST_CASE("9_46 fixture") {
    // built from a 4-braid, not the hand-drawn 9_46 diagram
    RealDiagram d = load_diagram(fixture("9_46.json"));
    Topology t = compute_topology(d);
    CHECK(generator_count(d, t) == 217);
    CHECK(enumerate_generators(d, t).size() == 217);
  }
}
