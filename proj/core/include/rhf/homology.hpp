#pragma once

#include <vector>

#include "rhf/diagram.hpp"
#include "rhf/snf.hpp"

namespace rhf {

// H1(Y) = H1(Sigma) / <alpha_i, beta_i>, presented on the cycle basis given by
// the edges outside a spanning tree of the 1-skeleton.
struct HomologyPresentation {
  std::vector<int> basis_row;  // edge -> row of the cycle basis, -1 for tree edges
  int basis_size = 0;
  // basis_size x (faces + 2m); columns are face boundaries, then alpha_i, then beta_i
  IntMatrix relations;
  int first_curve_column = 0;
  SmithForm snf;
  // rows of the left transform that survive in the quotient, with their moduli
  // (0 marks a free coordinate)
  std::vector<int> coordinate_rows;
  std::vector<Integer> moduli;
  // per edge, its image in quotient coordinates before reduction
  std::vector<std::vector<Integer>> edge_image;

  int dimension() const { return static_cast<int>(moduli.size()); }
  int betti() const;
  // order of H1(Y), or 0 when it is infinite
  Integer order() const;
  // nontrivial invariant factors of H1(Y); free summands appear as 0
  std::vector<Integer> invariant_factors() const;
  // rank of H1(Sigma) computed from the cell complex
  int surface_rank() const;
  // coordinates of an edge chain (a cycle for meaningful results)
  std::vector<Integer> reduce(const std::vector<Integer>& chain) const;
  void normalize(std::vector<Integer>& coords) const;
};

HomologyPresentation h1_presentation(const RealDiagram& d, const Topology& t);

}  // namespace rhf
