#pragma once

#include <optional>
#include <vector>

#include "rhf/generators.hpp"
#include "rhf/spinc.hpp"

namespace rhf {

// +1 when the ccw order at v restricted to these four half-edges is h1 h2 h3 h4,
// -1 for h1 h4 h3 h2; anything else means the two curves are not transverse.
int cyclic_sign(const Topology& t, int v, HalfEdge h1, HalfEdge h2, HalfEdge h3, HalfEdge h4);

// Outgoing half-edges at v along an oriented curve (forward) and against it (backward).
struct LocalBranches {
  HalfEdge forward;
  HalfEdge backward;
};
LocalBranches curve_branches(const RealDiagram& d, const Topology& t, int v, EdgeKind kind);
LocalBranches fixed_branches(const RealDiagram& d, const Topology& t, int v);

int eps_c(const RealDiagram& d, const Topology& t, int vertex);
// evaluated at the plus-sheet member of the mirror pair containing vertex
int eps_z(const RealDiagram& d, const Topology& t, int vertex);

std::vector<int> boundary_order(const RealDiagram& d, const Topology& t, const Generator& x);
// listing of 0..n-1; throws InputError on repeats
int permutation_sign(const std::vector<int>& listing);
// the listing fed to permutation_sign for x, in alpha_order positions
std::vector<int> sign_listing(const RealDiagram& d, const Topology& t, const Generator& x);
int generator_sign(const RealDiagram& d, const Topology& t, const Generator& x);

struct ChiEntry {
  int class_id = 0;
  int size = 0;
  long long chi = 0;
};

struct ChiReport {
  std::vector<ChiEntry> entries;
  long long chi_tot = 0;
  int global_sign = 1;
  Integer determinant = 0;
  std::optional<bool> gradings_consistent;

  std::vector<long long> multiset() const;
};

ChiReport chi_report(const SpinCPartition& part, const std::vector<int>& signs);

}  // namespace rhf
