#pragma once

#include <vector>

#include "rhf/generators.hpp"
#include "rhf/homology.hpp"

namespace rhf {

using Coordinates = std::vector<Integer>;

// Per curve, the class of c - tau(c) where c is the alpha arc from a fixed
// start vertex to each point. epsilon(x, y) is then a difference of sums.
class EpsilonMap {
 public:
  EpsilonMap(const RealDiagram& d, const Topology& t, const HomologyPresentation& hp);

  Coordinates potential(const Generator& g) const;
  Coordinates epsilon(const Generator& x, const Generator& y) const;

 private:
  const HomologyPresentation* hp_;
  std::vector<std::vector<std::pair<int, Coordinates>>> table_;  // per curve: (vertex, potential)
  const Coordinates& lookup(int curve, int vertex) const;
};

// Direct definition with the shortest arcs along each alpha curve.
Coordinates epsilon_class(const RealDiagram& d, const Topology& t, const HomologyPresentation& hp,
                          const Generator& x, const Generator& y);

// tau acting on an edge chain
std::vector<Integer> tau_chain(const RealDiagram& d, const std::vector<Integer>& chain);

struct SpinCClass {
  Coordinates coordinate;  // epsilon(base, member)
  std::vector<int> members;
};

struct SpinCPartition {
  std::vector<SpinCClass> classes;  // sorted by coordinate
  std::vector<int> class_of;
  bool coarse = false;              // set when H2 may be nontrivial, i.e. H1 is infinite
};

SpinCPartition partition_by_spinc(const RealDiagram& d, const Topology& t, const HomologyPresentation& hp,
                                  const std::vector<Generator>& gens);

}  // namespace rhf
