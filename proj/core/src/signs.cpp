#include "rhf/signs.hpp"

#include <algorithm>

#include "rhf/errors.hpp"

namespace rhf {

namespace {

void require_orientable(const RealDiagram& d) {
  if (!d.quotient_orientable) throw UnsupportedDiagram("signs need an orientable quotient surface");
}

int position(const std::vector<HalfEdge>& rot, HalfEdge h) {
  auto it = std::find(rot.begin(), rot.end(), h);
  if (it == rot.end()) throw ConsistencyError("half-edge missing from vertex rotation");
  return static_cast<int>(it - rot.begin());
}

}  // namespace

int cyclic_sign(const Topology& t, int v, HalfEdge h1, HalfEdge h2, HalfEdge h3, HalfEdge h4) {
  const auto& rot = t.rotation[v];
  const int n = static_cast<int>(rot.size());
  const int p1 = position(rot, h1);
  auto rel = [&](HalfEdge h) { return (position(rot, h) - p1 + n) % n; };
  int a = rel(h2), b = rel(h3), c = rel(h4);
  if (a < b && b < c) return 1;
  if (c < b && b < a) return -1;
  throw ConsistencyError("curves are not transverse at vertex " + std::to_string(v));
}

LocalBranches curve_branches(const RealDiagram& d, const Topology& t, int v, EdgeKind kind) {
  LocalBranches out{{-1, 0}, {-1, 0}};
  for (HalfEdge h : t.rotation[v]) {
    if (d.edges[h.edge].kind != kind) continue;
    (h.sign == d.curve_dir(h.edge) ? out.forward : out.backward) = h;
  }
  if (out.forward.edge < 0 || out.backward.edge < 0) throw ConsistencyError("curve does not pass through vertex " + std::to_string(v));
  return out;
}

LocalBranches fixed_branches(const RealDiagram& d, const Topology& t, int v) {
  LocalBranches out{{-1, 0}, {-1, 0}};
  for (HalfEdge h : t.rotation[v]) {
    if (d.edges[h.edge].kind != EdgeKind::fixed) continue;
    (h.sign == t.fixed_dir[h.edge] ? out.forward : out.backward) = h;
  }
  if (out.forward.edge < 0 || out.backward.edge < 0) throw ConsistencyError("fixed circle does not pass through vertex " + std::to_string(v));
  return out;
}

int eps_c(const RealDiagram& d, const Topology& t, int vertex) {
  require_orientable(d);
  if (d.vertices[vertex] != VertexKind::fixed_crossing) throw InputError("vertex is not on C");
  auto a = curve_branches(d, t, vertex, EdgeKind::alpha);
  auto c = fixed_branches(d, t, vertex);
  return cyclic_sign(t, vertex, a.forward, c.forward, a.backward, c.backward);
}

int eps_z(const RealDiagram& d, const Topology& t, int vertex) {
  require_orientable(d);
  if (d.vertices[vertex] != VertexKind::crossing) throw InputError("vertex is not an off-C crossing");
  int z = t.vertex_sheet[vertex] == Sheet::plus ? vertex : d.tau_vertex[vertex];
  auto a = curve_branches(d, t, z, EdgeKind::alpha);
  auto b = curve_branches(d, t, z, EdgeKind::beta);
  return cyclic_sign(t, z, a.forward, b.forward, a.backward, b.backward);
}

std::vector<int> boundary_order(const RealDiagram& d, const Topology& t, const Generator& x) {
  require_orientable(d);
  std::vector<std::pair<std::pair<int, int>, int>> keyed;
  for (int i = 0; i < x.size(); ++i) {
    if (x.sigma[i] != i) continue;
    int v = x.point[i];
    int circle = t.circle_at[v];
    const auto& walk = t.fixed_walk[circle];
    auto it = std::find(walk.begin(), walk.end(), v);
    if (it == walk.end()) throw ConsistencyError("C-crossing missing from its fixed circle");
    keyed.push_back({{circle, static_cast<int>(it - walk.begin())}, v});
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> out;
  for (const auto& [_, v] : keyed) out.push_back(v);
  return out;
}

int permutation_sign(const std::vector<int>& listing) {
  const int n = static_cast<int>(listing.size());
  std::vector<char> seen(n, 0);
  for (int v : listing) {
    if (v < 0 || v >= n || seen[v]) throw InputError("listing is not a permutation");
    seen[v] = 1;
  }
  std::fill(seen.begin(), seen.end(), 0);
  int sign = 1;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (int k = s; !seen[k]; k = listing[k]) seen[k] = 1, ++len;
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::vector<int> sign_listing(const RealDiagram& d, const Topology& t, const Generator& x) {
  require_orientable(d);
  const int m = x.size();
  std::vector<int> pos(m);
  for (int p = 0; p < m; ++p) pos[d.alpha_order[p]] = p;
  // each 2-cycle as (alpha index of the plus-sheet point, partner)
  std::vector<std::pair<int, int>> blocks;
  for (int r = 0; r < m; ++r) {
    int s = x.sigma[r];
    if (s <= r) continue;
    bool r_plus = t.vertex_sheet[x.point[r]] == Sheet::plus;
    blocks.push_back(r_plus ? std::pair{pos[r], pos[s]} : std::pair{pos[s], pos[r]});
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    return std::min(a.first, a.second) < std::min(b.first, b.second);
  });
  std::vector<int> listing;
  for (const auto& [a, b] : blocks) {
    listing.push_back(a);
    listing.push_back(b);
  }
  for (int v : boundary_order(d, t, x)) listing.push_back(pos[t.alpha_at[v]]);
  return listing;
}

int generator_sign(const RealDiagram& d, const Topology& t, const Generator& x) {
  int sign = permutation_sign(sign_listing(d, t, x));
  for (int i = 0; i < x.size(); ++i) {
    if (x.sigma[i] == i) sign *= eps_c(d, t, x.point[i]);
    else if (x.sigma[i] > i) sign *= eps_z(d, t, x.point[i]);
  }
  return sign;
}

std::vector<long long> ChiReport::multiset() const {
  std::vector<long long> out;
  for (const auto& e : entries) out.push_back(e.chi);
  std::sort(out.begin(), out.end());
  return out;
}

ChiReport chi_report(const SpinCPartition& part, const std::vector<int>& signs) {
  if (signs.size() != part.class_of.size()) throw InputError("one sign per generator expected");
  ChiReport r;
  long long raw = 0;
  for (std::size_t c = 0; c < part.classes.size(); ++c) {
    ChiEntry e{static_cast<int>(c), static_cast<int>(part.classes[c].members.size()), 0};
    for (int g : part.classes[c].members) e.chi += signs[g];
    raw += e.chi;
    r.entries.push_back(e);
  }
  // with infinite H1 a zero total is possible and leaves the sign unnormalized
  if (raw == 0 && !part.coarse) throw ConsistencyError("total Euler characteristic vanishes");
  r.global_sign = raw < 0 ? -1 : 1;
  for (auto& e : r.entries) e.chi *= r.global_sign;
  r.chi_tot = raw * r.global_sign;
  return r;
}

}  // namespace rhf
