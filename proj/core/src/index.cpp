#include "rhf/index.hpp"

#include "rhf/errors.hpp"

namespace rhf {

namespace {

std::vector<std::vector<int>> path_positions(const RealDiagram& d, const std::vector<std::vector<HalfEdge>>& paths) {
  std::vector<std::vector<int>> pos(paths.size(), std::vector<int>(d.num_vertices(), -1));
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t k = 0; k < paths[i].size(); ++k) pos[i][d.tail(paths[i][k])] = static_cast<int>(k);
  return pos;
}

// adds c(to) - c(from) along a path, c counting edges before a position
void add_arc(std::vector<std::pair<int, int>>& rhs, const std::vector<HalfEdge>& path, int from, int to,
             const std::vector<int>& row_of_edge) {
  if (from < 0 || to < 0) throw ConsistencyError("generator point is not on its curve");
  int lo = std::min(from, to), hi = std::max(from, to), sign = to > from ? 1 : -1;
  for (int k = lo; k < hi; ++k) rhs.push_back({row_of_edge[path[k].edge], sign});
}

}  // namespace

Integer Domain::n_w() const {
  Integer s = 0;
  for (const auto& v : basepoint_multiplicity) s += v;
  return s;
}

DomainSolver::DomainSolver(const RealDiagram& d, const Topology& t, const RegionData& r) : d_(&d), t_(&t), r_(&r) {
  const int m = d.num_curves(), R = static_cast<int>(r.regions.size());
  unknowns_ = R + 2 * m;
  row_of_edge_.assign(d.num_edges(), -1);
  for (int e = 0; e < d.num_edges(); ++e)
    if (d.edges[e].is_curve()) row_of_edge_[e] = rows_++;
  for (int k = 0; k < d.num_fixed_circles(); ++k) basepoint_row_.push_back(rows_++);

  IntMatrix a(rows_, unknowns_);
  for (int e = 0; e < d.num_edges(); ++e) {
    const Edge& ed = d.edges[e];
    if (!ed.is_curve()) continue;
    HalfEdge h{e, d.curve_dir(e)};
    int row = row_of_edge_[e];
    a(row, r.region_of_face[t.face_left(h)]) += 1;
    a(row, r.region_of_face[t.face_left(h.reversed())]) -= 1;
    a(row, R + (ed.kind == EdgeKind::alpha ? 0 : m) + ed.index) -= 1;
  }
  for (int k = 0; k < d.num_fixed_circles(); ++k) {
    int bp = d.fixed_circles[k].basepoint_edge;
    a(basepoint_row_[k], r.region_of_face[t.face_left(HalfEdge{bp, 1})]) = 1;
  }
  snf_ = smith_normal_form(a, true);
  nullity_ = unknowns_ - snf_.rank();
  alpha_pos_ = path_positions(d, t.alpha_path);
  beta_pos_ = path_positions(d, t.beta_path);
}

std::optional<Domain> DomainSolver::find(const Generator& x, const Generator& y, const std::vector<Integer>& n_w) const {
  const RealDiagram& d = *d_;
  const int m = d.num_curves(), R = static_cast<int>(r_->regions.size());
  if (static_cast<int>(n_w.size()) != d.num_fixed_circles()) throw InputError("one basepoint multiplicity per fixed circle");
  std::vector<std::pair<int, int>> rhs;
  for (int i = 0; i < m; ++i) {
    add_arc(rhs, t_->alpha_path[i], alpha_pos_[i][x.point[i]], alpha_pos_[i][y.point[i]], row_of_edge_);
    // beta_j carries point[sigma(j)]; its arc runs from y back to x
    add_arc(rhs, t_->beta_path[i], beta_pos_[i][y.point[y.sigma[i]]], beta_pos_[i][x.point[x.sigma[i]]], row_of_edge_);
  }
  std::vector<Integer> b(rows_);
  for (auto [row, v] : rhs) b[row] += v;
  for (std::size_t k = 0; k < n_w.size(); ++k) b[basepoint_row_[k]] = n_w[k];

  const IntMatrix& u = snf_.left;
  const int rank = snf_.rank();
  std::vector<Integer> z(unknowns_);
  for (int k = 0; k < rows_; ++k) {
    Integer yk = 0;
    for (int j = 0; j < rows_; ++j)
      if (b[j] != 0) yk += u(k, j) * b[j];
    if (k < rank) {
      if (!mpz_divisible_p(yk.get_mpz_t(), snf_.factors[k].get_mpz_t())) return std::nullopt;
      mpz_divexact(z[k].get_mpz_t(), yk.get_mpz_t(), snf_.factors[k].get_mpz_t());
    } else if (yk != 0) {
      return std::nullopt;
    }
  }
  Domain dom;
  dom.source = x;
  dom.target = y;
  std::vector<Integer> sol(unknowns_);
  for (int i = 0; i < unknowns_; ++i)
    for (int k = 0; k < rank; ++k)
      if (z[k] != 0) sol[i] += snf_.right(i, k) * z[k];
  dom.multiplicity.assign(sol.begin(), sol.begin() + R);
  dom.alpha_shift.assign(sol.begin() + R, sol.begin() + R + m);
  dom.beta_shift.assign(sol.begin() + R + m, sol.end());
  dom.basepoint_multiplicity = n_w;
  dom.real_invariant = true;
  for (int q = 0; q < R; ++q)
    if (dom.multiplicity[q] != dom.multiplicity[r_->tau_region[q]]) dom.real_invariant = false;
  return dom;
}

std::optional<Domain> find_domain(const RealDiagram& d, const Topology& t, const RegionData& r, const Generator& x,
                                  const Generator& y, const std::vector<Integer>& n_w) {
  return DomainSolver(d, t, r).find(x, y, n_w);
}

Domain reverse(const Domain& dom) {
  Domain out = dom;
  std::swap(out.source, out.target);
  for (auto* v : {&out.multiplicity, &out.alpha_shift, &out.beta_shift, &out.basepoint_multiplicity})
    for (auto& c : *v) c = -c;
  return out;
}

Domain compose(const Domain& first, const Domain& second) {
  if (first.target != second.source) throw InputError("domains do not compose");
  Domain out = first;
  out.target = second.target;
  auto add = [](std::vector<Integer>& a, const std::vector<Integer>& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  };
  add(out.multiplicity, second.multiplicity);
  add(out.alpha_shift, second.alpha_shift);
  add(out.beta_shift, second.beta_shift);
  add(out.basepoint_multiplicity, second.basepoint_multiplicity);
  out.real_invariant = first.real_invariant && second.real_invariant;
  return out;
}

Domain add_surface(const Domain& dom, int copies) {
  Domain out = dom;
  for (auto& c : out.multiplicity) c += copies;
  for (auto& c : out.basepoint_multiplicity) c += copies;
  return out;
}

mpq_class euler_measure(const RegionData& r, const Domain& dom) {
  mpq_class e = 0;
  for (std::size_t q = 0; q < r.regions.size(); ++q) {
    if (dom.multiplicity[q] == 0) continue;
    const Region& reg = r.regions[q];
    mpq_class local(4 * reg.euler_characteristic() - static_cast<int>(reg.corners.size()), 4);
    e += mpq_class(dom.multiplicity[q]) * local;
  }
  e.canonicalize();
  return e;
}

mpq_class vertex_multiplicity(const RegionData& r, const Domain& dom, const Generator& g) {
  Integer sum = 0;
  for (int v : g.point)
    for (const Quadrant& q : r.quadrants[v]) sum += dom.multiplicity[q.region];
  mpq_class out(sum, 4);
  out.canonicalize();
  return out;
}

int triple_sigma(const RealDiagram& d, const Topology& t, const Generator& g) {
  int total = 0;
  for (int i = 0; i < g.size(); ++i) {
    if (g.sigma[i] != i) continue;
    int v = g.point[i];
    const auto& rot = t.rotation[v];
    const int n = static_cast<int>(rot.size());
    int start = -1;
    for (int k = 0; k < n && start < 0; ++k)
      if (d.edges[rot[k].edge].kind == EdgeKind::fixed) start = k;
    if (start < 0) throw ConsistencyError("C-component off the fixed set");
    for (int k = 1; k < n; ++k) {
      EdgeKind kind = d.edges[rot[(start + k) % n].edge].kind;
      if (kind == EdgeKind::alpha || kind == EdgeKind::beta) {
        total += kind == EdgeKind::alpha ? 1 : -1;
        break;
      }
    }
  }
  return total;
}

IndexResult real_index(const RealDiagram& d, const Topology& t, const RegionData& r, const Domain& dom) {
  IndexResult out;
  mpq_class q4 = 4 * (vertex_multiplicity(r, dom, dom.source) + vertex_multiplicity(r, dom, dom.target) + euler_measure(r, dom));
  q4.canonicalize();
  if (q4.get_den() != 1) throw ConsistencyError("index is not a quarter-integer");
  Integer quarters = q4.get_num();
  if (!mpz_divisible_ui_p(quarters.get_mpz_t(), 4)) throw ConsistencyError("classical index is not an integer");
  out.classical = quarters / 4;
  out.sigma_source = triple_sigma(d, t, dom.source);
  out.sigma_target = triple_sigma(d, t, dom.target);
  Integer eightfold = quarters - 2 * (out.sigma_source - out.sigma_target);
  if (!mpz_divisible_ui_p(eightfold.get_mpz_t(), 8)) throw ConsistencyError("real index is not an integer");
  out.real = eightfold / 8;
  return out;
}

int grading_of(const IndexResult& idx, const Domain& dom) {
  Integer g = idx.real - dom.n_w();
  return mpz_odd_p(g.get_mpz_t()) ? 1 : 0;
}

std::optional<int> relative_grading(const DomainSolver& solver, const RealDiagram& d, const Topology& t,
                                    const RegionData& r, const Generator& x, const Generator& y) {
  auto dom = solver.find(x, y, std::vector<Integer>(d.num_fixed_circles(), 0));
  if (!dom) return std::nullopt;
  return grading_of(real_index(d, t, r, *dom), *dom);
}

}  // namespace rhf
