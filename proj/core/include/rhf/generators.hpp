#pragma once

#include <compare>
#include <vector>

#include "rhf/diagram.hpp"
#include "rhf/snf.hpp"

namespace rhf {

// A tau-invariant generator: an involution sigma on curve indices and one point
// on each alpha curve. Fixed indices sit on C; a 2-cycle {r, s} holds a mirror
// pair with point[r] in alpha_r cap beta_s and point[s] = tau(point[r]).
struct Generator {
  std::vector<int> sigma;
  std::vector<int> point;

  int size() const { return static_cast<int>(point.size()); }
  int pairs() const;
  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

// Crossing vertices of each alpha curve, grouped by the beta curve they lie on.
struct IntersectionTable {
  int m = 0;
  std::vector<std::vector<int>> on_c;                     // per i: C-crossings of alpha_i
  std::vector<std::vector<std::vector<int>>> off_c;       // [i][j]: off-C points of alpha_i cap beta_j
};

IntersectionTable intersection_table(const RealDiagram& d, const Topology& t);

bool is_generator(const RealDiagram& d, const Topology& t, const Generator& g);

// Sorted list; jobs > 1 splits the search over the choices for the first curve.
std::vector<Generator> enumerate_generators(const RealDiagram& d, const Topology& t, int jobs = 1);

// Count without materializing the list.
Integer generator_count(const RealDiagram& d, const Topology& t);

// Oracle: every choice of one crossing per alpha curve, filtered.
std::vector<Generator> brute_force_generators(const RealDiagram& d, const Topology& t);

}  // namespace rhf
