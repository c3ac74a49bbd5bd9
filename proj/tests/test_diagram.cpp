#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "support.hpp"

using namespace rhf;
using namespace rhf::test;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> invariants(const RealDiagram& d) {
  std::vector<std::string> out;
  for (const auto& issue : validate_diagram(d)) out.push_back(issue.invariant);
  return out;
}

bool mentions(const std::vector<std::string>& v, const std::string& what) {
  return std::find(v.begin(), v.end(), what) != v.end();
}

// chi(Sigma) = sum of region characteristics + chi of the curve graph
void check_region_euler(const RealDiagram& d) {
  Topology t = compute_topology(d);
  RegionData r = compute_regions(d, t);
  long long total = 0;
  for (const auto& reg : r.regions) total += reg.euler_characteristic();
  int curve_vertices = 0, curve_edges = 0;
  for (int v = 0; v < d.num_vertices(); ++v) curve_vertices += (t.alpha_at[v] >= 0 || t.beta_at[v] >= 0);
  for (const auto& e : d.edges) curve_edges += e.is_curve();
  CHECK(total + curve_vertices - curve_edges == d.euler_characteristic());
  for (std::size_t k = 0; k < r.regions.size(); ++k) CHECK(r.tau_region[r.tau_region[k]] == static_cast<int>(k));
}

}  // namespace

TEST_SUITE("diagram") {
  TEST_CASE("hand-encoded fixtures validate") {
    for (const char* name : {"nested_lenses.json", "s3_torus.json", "sphere.json", "9_46.json"}) {
      CAPTURE(name);
      CHECK(validate_diagram(load_diagram(fixture(name))).empty());
    }
  }

  TEST_CASE("corrupted tau is reported as an involution violation") {
    CHECK(mentions(invariants(load_diagram(fixture("3_1_bad_tau.json"))), "tau involution"));
  }

  TEST_CASE("targeted violations") {
    RealDiagram base = load_diagram(fixture("nested_lenses.json"));
    SUBCASE("sheet swapped on one face") {
      RealDiagram d = base;
      d.faces[0].sheet = Sheet::minus;
      CHECK(!validate_diagram(d).empty());
    }
    SUBCASE("alpha order not a permutation") {
      RealDiagram d = base;
      d.alpha_order = {0, 0};
      CHECK(mentions(invariants(d), "alpha order"));
    }
    SUBCASE("basepoint off its circle") {
      RealDiagram d = base;
      d.fixed_circles[0].basepoint_edge = d.fixed_circles[1].basepoint_edge;
      CHECK(mentions(invariants(d), "one basepoint per fixed circle"));
    }
    SUBCASE("curve orientation flipped on one edge") {
      RealDiagram d = base;
      for (auto& e : d.edges)
        if (e.kind == EdgeKind::alpha) {
          e.dir = -e.dir;
          break;
        }
      CHECK(!validate_diagram(d).empty());
    }
    SUBCASE("face dropped") {
      RealDiagram d = base;
      d.faces.pop_back();
      d.tau_face.pop_back();
      CHECK(!validate_diagram(d).empty());
    }
  }

  TEST_CASE("file format") {
    RealDiagram d = load_diagram(fixture("nested_lenses.json"));
    RealDiagram again = parse_diagram(dump_diagram(d));
    CHECK(dump_diagram(again) == dump_diagram(d));
    CHECK(d.name == "nested_lenses");

    auto doc = nlohmann::json::parse(read_file(fixture("sphere.json")));
    doc["extra"] = 1;
    CHECK_THROWS_AS(parse_diagram(doc.dump()), InputError);
    CHECK_THROWS_AS(parse_diagram("{"), InputError);
    auto doc2 = nlohmann::json::parse(read_file(fixture("sphere.json")));
    doc2["edges"][0]["label"] = "gamma:0";
    CHECK_THROWS_AS(parse_diagram(doc2.dump()), InputError);
  }

  TEST_CASE("regions") {
    RealDiagram torus = load_diagram(fixture("s3_torus.json"));
    Topology t = compute_topology(torus);
    RegionData r = compute_regions(torus, t);
    // alpha and beta meet once; cutting the torus along both leaves one disk
    CHECK(r.regions.size() == 1);
    CHECK(r.regions[0].euler_characteristic() == 1);

    RealDiagram lenses = load_diagram(fixture("nested_lenses.json"));
    RegionData rl = compute_regions(lenses, compute_topology(lenses));
    CHECK(rl.regions.size() == 7);
    int annuli = 0;
    for (const auto& reg : rl.regions) annuli += reg.euler_characteristic() == 0;
    CHECK(annuli == 1);

    for (const char* name : {"nested_lenses.json", "s3_torus.json", "sphere.json", "9_46.json"})
      check_region_euler(load_diagram(fixture(name)));
    for (const auto& k : small_knots()) check_region_euler(build_real_diagram(braid(k)));
  }

  TEST_CASE("first homology") {
    RealDiagram torus = load_diagram(fixture("s3_torus.json"));
    CHECK(h1_presentation(torus, compute_topology(torus)).order() == 1);
    RealDiagram sphere = load_diagram(fixture("sphere.json"));
    CHECK(h1_presentation(sphere, compute_topology(sphere)).order() == 1);
    RealDiagram lenses = load_diagram(fixture("nested_lenses.json"));
    auto hl = h1_presentation(lenses, compute_topology(lenses));
    CHECK(hl.order() == 0);
    CHECK(hl.betti() > 0);

    for (const auto& k : small_knots()) {
      CAPTURE(k.name);
      RealDiagram d = build_real_diagram(braid(k));
      Topology t = compute_topology(d);
      auto hp = h1_presentation(d, t);
      CHECK(hp.order() == knot_determinant(braid(k)));
      CHECK(hp.surface_rank() == 2 * d.genus());
    }
  }

  TEST_CASE("builder output") {
    struct Case {
      std::vector<int> word;
      int strands, m, h;
      long det;
    };
    for (const Case& c : {Case{{1, 1, 1}, 2, 2, 1, 3}, Case{{1, -2, 1, -2}, 3, 2, 1, 5},
                          Case{{1, 1, 1, 1, 1}, 2, 4, 2, 5}, Case{{1}, 2, 0, 0, 1}}) {
      RealDiagram d = build_real_diagram(make_braid(c.word, c.strands));
      CHECK(validate_diagram(d).empty());
      CHECK(d.num_curves() == c.m);
      CHECK(d.quotient_genus() == c.h);
      CHECK(d.num_fixed_circles() == 1);
      CHECK(d.genus() == c.m);
      CHECK(h1_presentation(d, compute_topology(d)).order() == c.det);
    }
    for (const auto& k : small_knots()) {
      CAPTURE(k.name);
      RealDiagram d = build_real_diagram(braid(k));
      CHECK(validate_diagram(d).empty());
      CHECK(d.num_curves() == seifert_data(braid(k)).curves);
    }
  }

  TEST_CASE("convention changes keep diagrams valid") {
    RealDiagram d = build_real_diagram(make_braid({1, 1, 1, 2, -1, 2}, 3));
    CHECK(validate_diagram(flip_curve(d, 0)).empty());
    CHECK(validate_diagram(flip_surface_orientation(d)).empty());
    std::vector<int> order(d.alpha_order.rbegin(), d.alpha_order.rend());
    CHECK(validate_diagram(relabel_alpha_order(d, order)).empty());
  }
}
