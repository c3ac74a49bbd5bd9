#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace rhf;
using namespace rhf::test;

TEST_SUITE("signs") {
  TEST_CASE("permutation sign") {
    CHECK(permutation_sign({0, 1, 2}) == 1);
    CHECK(permutation_sign({1, 0, 2}) == -1);
    CHECK(permutation_sign({1, 2, 0}) == 1);
    CHECK(permutation_sign({}) == 1);
    CHECK(permutation_sign({3, 2, 1, 0}) == 1);
    CHECK_THROWS_AS(permutation_sign({0, 0}), InputError);
    CHECK_THROWS_AS(permutation_sign({0, 2}), InputError);
  }

  TEST_CASE("eps_c on builder curves") {
    for (const auto& k : small_knots()) {
      CAPTURE(k.name);
      RealDiagram d = build_real_diagram(braid(k));
      Topology t = compute_topology(d);
      for (int i = 0; i < d.num_curves(); ++i) {
        std::vector<int> on_c;
        for (HalfEdge h : t.alpha_path[i])
          if (t.circle_at[d.tail(h)] >= 0 && t.beta_at[d.tail(h)] >= 0) on_c.push_back(d.tail(h));
        // each builder alpha crosses C twice, in opposite directions
        REQUIRE(on_c.size() == 2);
        CHECK(eps_c(d, t, on_c[0]) == -eps_c(d, t, on_c[1]));
        RealDiagram f = flip_curve(d, i);
        Topology tf = compute_topology(f);
        CHECK(eps_c(f, tf, on_c[0]) == -eps_c(d, t, on_c[0]));
      }
    }
  }

  TEST_CASE("eps_z") {
    RealDiagram d = build_real_diagram(make_braid({1, 1, 1, 2, -1, 2}, 3));
    Topology t = compute_topology(d);
    RealDiagram s = flip_surface_orientation(d);
    Topology ts = compute_topology(s);
    int seen = 0;
    for (int v = 0; v < d.num_vertices(); ++v) {
      if (d.vertices[v] != VertexKind::crossing) continue;
      ++seen;
      // the formula reads the plus-sheet member of the pair either way
      CHECK(eps_z(d, t, v) == eps_z(d, t, d.tau_vertex[v]));
      CHECK(eps_z(s, ts, v) == -eps_z(d, t, v));
    }
    CHECK(seen > 0);
  }

  TEST_CASE("boundary order") {
    const Analysis& a = analysis_of({1, 1, 1, 2, -1, 2}, 3);
    for (const auto& g : a.generators) {
      auto order = boundary_order(a.diagram, a.topology, g);
      int on_c = 0;
      for (int i = 0; i < g.size(); ++i) on_c += g.sigma[i] == i;
      CHECK(static_cast<int>(order.size()) == on_c);
      // vertices come in the order met walking C from the basepoint
      int last = -1;
      for (int v : order) {
        const auto& walk = a.topology.fixed_walk[a.topology.circle_at[v]];
        int pos = static_cast<int>(std::find(walk.begin(), walk.end(), v) - walk.begin());
        CHECK(pos > last);
        last = pos;
      }
      auto listing = sign_listing(a.diagram, a.topology, g);
      std::sort(listing.begin(), listing.end());
      for (int p = 0; p < g.size(); ++p) CHECK(listing[p] == p);
    }
  }

  TEST_CASE("signs refuse non-orientable quotients") {
    RealDiagram d = load_diagram(fixture("s3_torus.json"));
    Topology t = compute_topology(d);
    auto gens = enumerate_generators(d, t);
    CHECK_THROWS_AS(generator_sign(d, t, gens[0]), UnsupportedDiagram);
  }

  TEST_CASE("empty generator has sign +1") {
    RealDiagram d = load_diagram(fixture("sphere.json"));
    Topology t = compute_topology(d);
    CHECK(generator_sign(d, t, enumerate_generators(d, t).at(0)) == 1);
  }

  TEST_CASE("golden rows for the calibration knots") {
    CHECK(sorted(analysis_of({1}, 2).chi->multiset()) == std::vector<long long>{1});
    CHECK(analysis_of({1}, 2).chi->chi_tot == 1);
    CHECK(sorted(analysis_of({1, 1, 1}, 2).chi->multiset()) == std::vector<long long>{-1, 1, 1});
    CHECK(analysis_of({1, 1, 1}, 2).chi->chi_tot == 1);
    CHECK(sorted(analysis_of({1, -2, 1, -2}, 3).chi->multiset()) == std::vector<long long>{-1, 1, 1, 1, 1});
    CHECK(analysis_of({1, -2, 1, -2}, 3).chi->chi_tot == 3);
  }

  TEST_CASE("class sums are odd and the total positive") {
    for (const auto& k : small_knots()) {
      CAPTURE(k.name);
      const ChiReport& r = *analysis_of(k).chi;
      long long total = 0;
      for (const auto& e : r.entries) {
        CHECK(e.chi % 2 != 0);
        CHECK(e.size % 2 == 1);
        total += e.chi;
      }
      CHECK(total == r.chi_tot);
      CHECK(r.chi_tot > 0);
    }
  }

  TEST_CASE("convention changes agree up to one global sign") {
    std::mt19937_64 rng(11);
    for (const auto& k : small_knots()) {
      CAPTURE(k.name);
      const Analysis& a = analysis_of(k);
      auto base = sorted(raw_class_sums(a.diagram, a.generators));
      auto negated = base;
      for (auto& x : negated) x = -x;
      negated = sorted(negated);
      for (int round = 0; round < 10; ++round) {
        RealDiagram d = a.diagram;
        std::vector<int> order = d.alpha_order;
        std::shuffle(order.begin(), order.end(), rng);
        d = relabel_alpha_order(d, order);
        for (int c = 0; c < d.num_curves(); ++c)
          if (rng() & 1) d = flip_curve(d, c);
        if (rng() & 1) d = flip_surface_orientation(d);
        auto sums = sorted(raw_class_sums(d, enumerate_generators(d, compute_topology(d))));
        CHECK((sums == base || sums == negated));
      }
    }
  }

  TEST_CASE("chi report normalization") {
    SpinCPartition p;
    p.classes = {{{}, {0}}, {{}, {1, 2, 3}}};
    p.class_of = {0, 1, 1, 1};
    ChiReport r = chi_report(p, {-1, 1, -1, -1});
    CHECK(r.global_sign == -1);
    CHECK(r.chi_tot == 2);
    CHECK(sorted(r.multiset()) == std::vector<long long>{1, 1});
    p.classes = {{{}, {0, 1}}};
    p.class_of = {0, 0};
    CHECK_THROWS_AS(chi_report(p, {1, -1}), ConsistencyError);
    p.coarse = true;
    CHECK(chi_report(p, {1, -1}).chi_tot == 0);
  }
}
