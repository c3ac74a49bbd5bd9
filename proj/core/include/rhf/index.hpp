#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "rhf/generators.hpp"

namespace rhf {

struct Domain {
  Generator source;
  Generator target;
  std::vector<Integer> multiplicity;  // per region
  std::vector<Integer> alpha_shift;   // copies of each full alpha curve in the boundary
  std::vector<Integer> beta_shift;
  std::vector<Integer> basepoint_multiplicity;  // per fixed circle
  bool real_invariant = false;

  Integer n_w() const;
};

// Domains from the linear boundary conditions, solved once through a Smith form.
class DomainSolver {
 public:
  DomainSolver(const RealDiagram& d, const Topology& t, const RegionData& r);

  // unique when periodic_rank() == 0; otherwise one representative
  std::optional<Domain> find(const Generator& x, const Generator& y, const std::vector<Integer>& n_w) const;
  int periodic_rank() const { return nullity_; }
  int unknowns() const { return unknowns_; }

 private:
  const RealDiagram* d_;
  const Topology* t_;
  const RegionData* r_;
  std::vector<int> row_of_edge_;
  std::vector<int> basepoint_row_;
  int rows_ = 0;
  int unknowns_ = 0;
  int nullity_ = 0;
  SmithForm snf_;
  // position of each vertex along each alpha / beta path (-1 if absent), per curve
  std::vector<std::vector<int>> alpha_pos_, beta_pos_;
};

std::optional<Domain> find_domain(const RealDiagram& d, const Topology& t, const RegionData& r, const Generator& x,
                                  const Generator& y, const std::vector<Integer>& n_w);

// the same domain read from target to source, with negated multiplicities
Domain reverse(const Domain& dom);
// D2 after D1, for D1 from x to y and D2 from y to z
Domain compose(const Domain& first, const Domain& second);
Domain add_surface(const Domain& dom, int copies);

mpq_class euler_measure(const RegionData& r, const Domain& dom);
mpq_class vertex_multiplicity(const RegionData& r, const Domain& dom, const Generator& g);
int triple_sigma(const RealDiagram& d, const Topology& t, const Generator& g);

struct IndexResult {
  Integer classical;
  Integer real;
  int sigma_source = 0;
  int sigma_target = 0;
};

// throws ConsistencyError when either index is not an integer
IndexResult real_index(const RealDiagram& d, const Topology& t, const RegionData& r, const Domain& dom);

// ind_R - n_w mod 2
int grading_of(const IndexResult& idx, const Domain& dom);
std::optional<int> relative_grading(const DomainSolver& solver, const RealDiagram& d, const Topology& t,
                                    const RegionData& r, const Generator& x, const Generator& y);

}  // namespace rhf
