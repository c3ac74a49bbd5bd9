#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace rhf;
using namespace rhf::test;

namespace {

bool is_zero(const Coordinates& c) {
  return std::all_of(c.begin(), c.end(), [](const Integer& x) { return x == 0; });
}

Coordinates sum(const HomologyPresentation& hp, Coordinates a, const Coordinates& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  hp.normalize(a);
  return a;
}

}  // namespace

TEST_SUITE("spinc") {
  TEST_CASE("epsilon is additive and agrees with the direct definition") {
    std::mt19937_64 rng(5);
    for (const auto& k : small_knots()) {
      CAPTURE(k.name);
      const Analysis& a = analysis_of(k);
      EpsilonMap eps(a.diagram, a.topology, a.h1);
      const auto& g = a.generators;
      const std::size_t n = g.size();
      for (int trial = 0; trial < 40; ++trial) {
        const Generator& x = g[rng() % n];
        const Generator& y = g[rng() % n];
        const Generator& z = g[rng() % n];
        CHECK(is_zero(eps.epsilon(x, x)));
        CHECK(eps.epsilon(x, y) == epsilon_class(a.diagram, a.topology, a.h1, x, y));
        CHECK(sum(a.h1, eps.epsilon(x, y), eps.epsilon(y, z)) == eps.epsilon(x, z));
        CHECK(is_zero(sum(a.h1, eps.epsilon(x, y), eps.epsilon(y, x))));
      }
    }
  }

  TEST_CASE("tau on chains is an involution") {
    RealDiagram d = build_real_diagram(make_braid({1, -2, 1, -2}, 3));
    std::vector<Integer> chain(d.num_edges());
    for (int e = 0; e < d.num_edges(); ++e) chain[e] = e % 5 - 2;
    CHECK(tau_chain(d, tau_chain(d, chain)) == chain);
  }

  TEST_CASE("partition") {
    SUBCASE("sphere") {
      RealDiagram d = load_diagram(fixture("sphere.json"));
      Analysis a = analyze_diagram(d);
      REQUIRE(a.partition.classes.size() == 1);
      CHECK(a.partition.classes[0].members.size() == 1);
    }
    SUBCASE("trefoil") {
      const Analysis& a = analysis_of({1, 1, 1}, 2);
      CHECK(a.partition.classes.size() == 3);
      for (const auto& c : a.partition.classes) CHECK(c.members.size() % 2 == 1);
    }
    SUBCASE("class count equals the determinant") {
      for (const auto& k : small_knots()) {
        const Analysis& a = analysis_of(k);
        CHECK(a.partition.classes.size() == knot_determinant(braid(k)).get_ui());
        CHECK_FALSE(a.partition.coarse);
        EpsilonMap eps(a.diagram, a.topology, a.h1);
        for (std::size_t c = 0; c < a.partition.classes.size(); ++c)
          for (int m : a.partition.classes[c].members) {
            CHECK(a.partition.class_of[m] == static_cast<int>(c));
            CHECK(is_zero(eps.epsilon(a.generators[a.partition.classes[c].members[0]], a.generators[m])));
          }
      }
    }
    SUBCASE("infinite H1 is flagged") {
      RealDiagram d = load_diagram(fixture("nested_lenses.json"));
      CHECK(analyze_diagram(d).partition.coarse);
    }
  }

  TEST_CASE("9_46 fixture has nine classes") {
    Analysis a = analyze_diagram(load_diagram(fixture("9_46.json")));
    CHECK(a.h1.order() == 9);
    CHECK(a.h1.invariant_factors() == std::vector<Integer>{3, 3});
    CHECK(a.partition.classes.size() == 9);
  }
}
