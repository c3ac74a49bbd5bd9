#include "rhf/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "rhf/errors.hpp"

namespace rhf {

namespace {

int slot(HalfEdge h) { return 2 * h.edge + (h.sign < 0); }

std::string cell(const char* what, int id) { return std::string(what) + " " + std::to_string(id); }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Follows one curve from its lowest-numbered edge. Returns an empty path if the
// edges of that curve do not form a single cycle.
std::vector<HalfEdge> trace_curve(const RealDiagram& d, EdgeKind kind, int index,
                                  const std::vector<std::vector<int>>& incident) {
  std::vector<int> own;
  for (int e = 0; e < d.num_edges(); ++e)
    if (d.edges[e].kind == kind && d.edges[e].index == index) own.push_back(e);
  std::vector<HalfEdge> path;
  if (own.empty()) return path;
  std::set<int> seen;
  HalfEdge h{own.front(), d.curve_dir(own.front()) >= 0 ? 1 : -1};
  while (!seen.count(h.edge)) {
    seen.insert(h.edge);
    path.push_back(h);
    int v = d.head(h);
    int next = -1;
    for (int e : incident[v]) {
      if (e == h.edge || d.edges[e].kind != kind || d.edges[e].index != index) continue;
      if (next != -1) return {};
      next = e;
    }
    if (next == -1) return {};
    h = HalfEdge{next, d.edges[next].from == v ? 1 : -1};
    if (d.edges[next].from == v && d.edges[next].to == v) return {};
  }
  if (h.edge != path.front().edge || seen.size() != own.size()) return {};
  return path;
}

bool same_cycle(const std::vector<HalfEdge>& a, const std::vector<HalfEdge>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t k = 0;
    while (k < n && b[(s + k) % n] == a[k]) ++k;
    if (k == n) return true;
  }
  return n == 0;
}

}  // namespace

int RealDiagram::quotient_genus() const {
  int l = num_fixed_circles();
  return (2 - l - euler_characteristic() / 2) / 2;
}

Topology compute_topology(const RealDiagram& d) {
  Topology t;
  const int V = d.num_vertices();
  const int E = d.num_edges();
  t.left_face.assign(2 * E, -1);
  std::vector<HalfEdge> nxt(2 * E, HalfEdge{-1, 0});
  for (int f = 0; f < d.num_faces(); ++f) {
    const auto& loop = d.faces[f].loop;
    for (std::size_t k = 0; k < loop.size(); ++k) {
      HalfEdge hin = loop[k];
      HalfEdge hout = loop[(k + 1) % loop.size()];
      if (t.left_face[slot(hin)] != -1) throw StructuralError("half-edge used twice: " + cell("edge", hin.edge));
      t.left_face[slot(hin)] = f;
      if (d.head(hin) != d.tail(hout)) throw StructuralError("face loop not closed: " + cell("face", f));
      nxt[slot(hout)] = hin.reversed();
    }
  }
  std::vector<std::vector<int>> incident(V);
  for (int e = 0; e < E; ++e) {
    incident[d.edges[e].from].push_back(e);
    if (d.edges[e].to != d.edges[e].from) incident[d.edges[e].to].push_back(e);
  }
  t.rotation.assign(V, {});
  for (int v = 0; v < V; ++v) {
    if (incident[v].empty()) continue;
    int e0 = incident[v].front();
    HalfEdge start{e0, d.edges[e0].from == v ? 1 : -1};
    HalfEdge h = start;
    do {
      t.rotation[v].push_back(h);
      h = nxt[slot(h)];
      if (h.edge < 0) throw StructuralError("open vertex star at " + cell("vertex", v));
    } while (!(h == start) && t.rotation[v].size() <= 2 * incident[v].size());
    std::size_t degree = 0;
    for (int e : incident[v]) degree += (d.edges[e].from == d.edges[e].to) ? 2 : 1;
    if (t.rotation[v].size() != degree) throw StructuralError("vertex link is not a circle at " + cell("vertex", v));
  }

  const int m = d.num_curves();
  t.alpha_path.resize(m);
  t.beta_path.resize(m);
  for (int i = 0; i < m; ++i) {
    t.alpha_path[i] = trace_curve(d, EdgeKind::alpha, i, incident);
    t.beta_path[i] = trace_curve(d, EdgeKind::beta, i, incident);
  }

  t.alpha_at.assign(V, -1);
  t.beta_at.assign(V, -1);
  t.circle_at.assign(V, -1);
  for (const auto& e : d.edges) {
    auto mark = [&](std::vector<int>& at) {
      at[e.from] = e.index;
      at[e.to] = e.index;
    };
    if (e.kind == EdgeKind::alpha) mark(t.alpha_at);
    if (e.kind == EdgeKind::beta) mark(t.beta_at);
    if (e.kind == EdgeKind::fixed) mark(t.circle_at);
  }

  t.fixed_dir.assign(E, 0);
  for (const auto& c : d.fixed_circles)
    for (HalfEdge h : c.cycle) t.fixed_dir[h.edge] = h.sign;
  if (d.quotient_orientable) {
    for (int e = 0; e < E; ++e) {
      if (d.edges[e].kind != EdgeKind::fixed) continue;
      for (int s : {1, -1}) {
        int f = t.left_face[slot(HalfEdge{e, s})];
        if (f >= 0 && d.faces[f].sheet == Sheet::plus) t.fixed_dir[e] = s;
      }
    }
  }

  t.fixed_walk.resize(d.fixed_circles.size());
  for (std::size_t k = 0; k < d.fixed_circles.size(); ++k) {
    int bp = d.fixed_circles[k].basepoint_edge;
    if (bp < 0 || bp >= E || t.fixed_dir[bp] == 0) continue;
    HalfEdge h{bp, t.fixed_dir[bp]};
    for (std::size_t guard = 0; guard <= static_cast<std::size_t>(E); ++guard) {
      int v = d.head(h);
      t.fixed_walk[k].push_back(v);
      int next = -1;
      for (int e : incident[v])
        if (e != h.edge && d.edges[e].kind == EdgeKind::fixed) next = e;
      if (next == -1 || next == bp) break;
      h = HalfEdge{next, d.edges[next].from == v ? 1 : -1};
    }
  }

  t.vertex_sheet.assign(V, Sheet::none);
  for (int v = 0; v < V; ++v) {
    if (t.circle_at[v] >= 0) continue;
    for (HalfEdge h : t.rotation[v]) {
      int f = t.face_left(h);
      if (f >= 0) t.vertex_sheet[v] = d.faces[f].sheet;
    }
  }
  return t;
}

std::vector<ValidationIssue> validate_diagram(const RealDiagram& d) {
  std::vector<ValidationIssue> out;
  auto fail = [&](const std::string& inv, const std::string& detail) { out.push_back({inv, detail}); };
  const int V = d.num_vertices(), E = d.num_edges(), F = d.num_faces(), m = d.num_curves();

  for (int e = 0; e < E; ++e) {
    const Edge& ed = d.edges[e];
    if (ed.from < 0 || ed.from >= V || ed.to < 0 || ed.to >= V) {
      fail("edge endpoints", cell("edge", e));
      return out;
    }
    if (ed.is_curve() && (ed.index < 0 || ed.index >= m || (ed.dir != 1 && ed.dir != -1)))
      fail("curve label", cell("edge", e));
    if (ed.kind == EdgeKind::fixed && (ed.index < 0 || ed.index >= d.num_fixed_circles()))
      fail("fixed circle label", cell("edge", e));
  }
  for (int f = 0; f < F; ++f)
    for (HalfEdge h : d.faces[f].loop)
      if (h.edge < 0 || h.edge >= E || (h.sign != 1 && h.sign != -1)) {
        fail("face loop", cell("face", f));
        return out;
      }
  if (static_cast<int>(d.curve_orientations.size()) != m) fail("curve orientations", "size mismatch");
  {
    std::vector<int> sorted = d.alpha_order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
      if (sorted[i] != i) {
        fail("alpha order", "not a permutation");
        break;
      }
  }
  if (!out.empty()) return out;

  Topology t;
  try {
    t = compute_topology(d);
  } catch (const StructuralError& err) {
    fail("closed surface", err.what());
    return out;
  }
  for (int s = 0; s < 2 * E; ++s)
    if (t.left_face[s] < 0) fail("closed surface", "half-edge without face: " + cell("edge", s / 2));

  {
    UnionFind uf(V);
    for (const auto& e : d.edges) uf.unite(e.from, e.to);
    for (int v = 1; v < V; ++v)
      if (uf.find(v) != uf.find(0)) {
        fail("connected", cell("vertex", v));
        break;
      }
  }
  int chi = d.euler_characteristic();
  if (chi > 2 || chi % 2 != 0) fail("euler characteristic", "V-E+F = " + std::to_string(chi));

  // involution
  if (static_cast<int>(d.tau_vertex.size()) != V || static_cast<int>(d.tau_edge.size()) != E ||
      static_cast<int>(d.tau_face.size()) != F) {
    fail("tau involution", "map sizes do not match cell counts");
    return out;
  }
  for (int v = 0; v < V; ++v)
    if (d.tau_vertex[v] < 0 || d.tau_vertex[v] >= V || d.tau_vertex[d.tau_vertex[v]] != v)
      fail("tau involution", cell("vertex", v));
  for (int e = 0; e < E; ++e)
    if (d.tau_edge[e] < 0 || d.tau_edge[e] >= E || d.tau_edge[d.tau_edge[e]] != e) fail("tau involution", cell("edge", e));
  for (int f = 0; f < F; ++f)
    if (d.tau_face[f] < 0 || d.tau_face[f] >= F || d.tau_face[d.tau_face[f]] != f) fail("tau involution", cell("face", f));
  if (!out.empty()) return out;

  std::vector<int> tau_sign(E, 0);
  for (int e = 0; e < E; ++e) {
    const Edge& a = d.edges[e];
    const Edge& b = d.edges[d.tau_edge[e]];
    if (d.tau_vertex[a.from] == b.from && d.tau_vertex[a.to] == b.to) tau_sign[e] = 1;
    else if (d.tau_vertex[a.from] == b.to && d.tau_vertex[a.to] == b.from) tau_sign[e] = -1;
    else fail("tau cellular", cell("edge", e));
    auto swapped = [](EdgeKind k) {
      return k == EdgeKind::alpha ? EdgeKind::beta : k == EdgeKind::beta ? EdgeKind::alpha : k;
    };
    if (b.kind != swapped(a.kind) || (a.is_curve() && b.index != a.index)) fail("tau swaps alpha and beta", cell("edge", e));
    if (a.kind == EdgeKind::fixed && (d.tau_edge[e] != e || tau_sign[e] != 1)) fail("tau fixes C", cell("edge", e));
    if (a.is_curve() && tau_sign[e] != 0 && d.curve_dir(d.tau_edge[e]) != d.curve_dir(e) * tau_sign[e])
      fail("beta orientation induced by tau", cell("edge", e));
  }
  for (int v = 0; v < V; ++v)
    if (t.circle_at[v] >= 0 && d.tau_vertex[v] != v) fail("tau fixes C", cell("vertex", v));
  if (!out.empty()) return out;
  for (int f = 0; f < F; ++f) {
    // tau(loop of f), read backwards, must be a rotation of the loop of tau(f)
    const auto& src = d.faces[f].loop;
    const auto& dst = d.faces[d.tau_face[f]].loop;
    std::vector<HalfEdge> img;
    for (auto it = src.rbegin(); it != src.rend(); ++it)
      img.push_back(HalfEdge{d.tau_edge[it->edge], -it->sign * tau_sign[it->edge]});
    bool ok = same_cycle(img, dst);
    if (!ok) fail("tau reverses orientation", cell("face", f));
  }

  // curves
  for (int i = 0; i < m; ++i) {
    if (t.alpha_path[i].empty()) fail("embedded curves", "alpha " + std::to_string(i) + " is not a single cycle");
    if (t.beta_path[i].empty()) fail("embedded curves", "beta " + std::to_string(i) + " is not a single cycle");
    for (const auto* path : {&t.alpha_path[i], &t.beta_path[i]})
      for (HalfEdge h : *path)
        if (h.sign != d.curve_dir(h.edge)) {
          fail("consistent curve directions", "curve " + std::to_string(i) + " at " + cell("edge", h.edge));
          break;
        }
  }
  for (int v = 0; v < V; ++v) {
    int na = 0, nb = 0, nc = 0;
    std::set<int> ia, ib;
    for (HalfEdge h : t.rotation[v]) {
      const Edge& e = d.edges[h.edge];
      if (e.kind == EdgeKind::alpha) ++na, ia.insert(e.index);
      if (e.kind == EdgeKind::beta) ++nb, ib.insert(e.index);
      if (e.kind == EdgeKind::fixed) ++nc;
    }
    if (ia.size() > 1 || ib.size() > 1 || na > 2 || nb > 2) fail("disjoint curves", cell("vertex", v));
    if (nc != 0 && nc != 2) fail("fixed circles embedded", cell("vertex", v));
    bool crossing = na == 2 && nb == 2;
    if (crossing && nc == 2 && *ia.begin() != *ib.begin()) fail("on-C crossings have equal index", cell("vertex", v));
    VertexKind want = crossing ? (nc ? VertexKind::fixed_crossing : VertexKind::crossing) : VertexKind::subdivision;
    if (d.vertices[v] != want) fail("vertex tags", cell("vertex", v));
    if (crossing && nc == 0) {
      int w = d.tau_vertex[v];
      if (t.alpha_at[w] != t.beta_at[v] || t.beta_at[w] != t.alpha_at[v]) fail("mirror pairs", cell("vertex", v));
      if (d.quotient_orientable && t.vertex_sheet[v] == t.vertex_sheet[w]) fail("mirror pairs on opposite sheets", cell("vertex", v));
    }
  }

  // fixed circles
  std::vector<int> owner(E, -1);
  for (int k = 0; k < d.num_fixed_circles(); ++k) {
    const auto& c = d.fixed_circles[k];
    bool closed = !c.cycle.empty();
    for (std::size_t j = 0; closed && j < c.cycle.size(); ++j) {
      HalfEdge h = c.cycle[j];
      if (d.edges[h.edge].kind != EdgeKind::fixed || d.edges[h.edge].index != k) closed = false;
      else if (d.head(h) != d.tail(c.cycle[(j + 1) % c.cycle.size()])) closed = false;
      else owner[h.edge] = k;
    }
    if (!closed) fail("fixed circle cycle", "circle " + std::to_string(k));
    bool has_bp = std::any_of(c.cycle.begin(), c.cycle.end(), [&](HalfEdge h) { return h.edge == c.basepoint_edge; });
    if (!has_bp) fail("one basepoint per fixed circle", "circle " + std::to_string(k));
  }
  for (int e = 0; e < E; ++e)
    if (d.edges[e].kind == EdgeKind::fixed && owner[e] < 0) fail("fixed circle cycle", "unlisted " + cell("edge", e));

  if (d.quotient_orientable) {
    for (int f = 0; f < F; ++f) {
      if (d.faces[f].sheet == Sheet::none) fail("sheet labels", cell("face", f));
      else if (d.faces[d.tau_face[f]].sheet != (d.faces[f].sheet == Sheet::plus ? Sheet::minus : Sheet::plus))
        fail("tau swaps sheets", cell("face", f));
    }
    for (int e = 0; e < E; ++e) {
      int a = t.face_left(HalfEdge{e, 1}), b = t.face_left(HalfEdge{e, -1});
      if (a < 0 || b < 0) continue;
      bool interface = d.faces[a].sheet != d.faces[b].sheet;
      if (interface != (d.edges[e].kind == EdgeKind::fixed)) fail("C is the sheet interface", cell("edge", e));
    }
    int l = d.num_fixed_circles();
    if ((2 - l - chi / 2) % 2 != 0 || m != 2 * d.quotient_genus() + 2 * (l - 1))
      fail("curve count", "m = " + std::to_string(m) + " but 2h + 2(l-1) = " +
                              std::to_string(2 * d.quotient_genus() + 2 * (l - 1)));
  }
  return out;
}

RegionData compute_regions(const RealDiagram& d, const Topology& t) {
  const int F = d.num_faces();
  UnionFind uf(F);
  for (int e = 0; e < d.num_edges(); ++e) {
    if (d.edges[e].is_curve()) continue;
    int a = t.face_left(HalfEdge{e, 1}), b = t.face_left(HalfEdge{e, -1});
    if (a < 0 || b < 0) throw StructuralError("malformed face loops at " + cell("edge", e));
    uf.unite(a, b);
  }
  RegionData r;
  r.region_of_face.assign(F, -1);
  std::vector<int> id(F, -1);
  for (int f = 0; f < F; ++f) {
    int root = uf.find(f);
    if (id[root] < 0) {
      id[root] = static_cast<int>(r.regions.size());
      r.regions.emplace_back();
    }
    r.region_of_face[f] = id[root];
    r.regions[id[root]].faces.push_back(f);
  }
  r.tau_region.assign(r.regions.size(), -1);
  for (int f = 0; f < F; ++f) r.tau_region[r.region_of_face[f]] = r.region_of_face[d.tau_face[f]];

  for (int e = 0; e < d.num_edges(); ++e)
    if (!d.edges[e].is_curve()) ++r.regions[r.region_of_face[t.face_left(HalfEdge{e, 1})]].interior_edges;

  r.quadrants.assign(d.num_vertices(), {});
  for (int v = 0; v < d.num_vertices(); ++v) {
    const auto& rot = t.rotation[v];
    std::vector<int> curve_pos;
    for (std::size_t k = 0; k < rot.size(); ++k)
      if (d.edges[rot[k].edge].is_curve()) curve_pos.push_back(static_cast<int>(k));
    if (curve_pos.empty()) {
      if (!rot.empty()) ++r.regions[r.region_of_face[t.face_left(rot.front())]].interior_vertices;
      continue;
    }
    if (d.vertices[v] == VertexKind::subdivision) continue;
    for (std::size_t j = 0; j < curve_pos.size(); ++j) {
      HalfEdge a = rot[curve_pos[j]];
      HalfEdge b = rot[curve_pos[(j + 1) % curve_pos.size()]];
      Quadrant q{v, r.region_of_face[t.face_left(a)], a, b};
      r.quadrants[v].push_back(q);
      r.regions[q.region].corners.push_back(q);
    }
  }
  for (int k = 0; k < d.num_fixed_circles(); ++k) {
    int bp = d.fixed_circles[k].basepoint_edge;
    r.regions[r.region_of_face[t.face_left(HalfEdge{bp, 1})]].basepoints.push_back(k);
  }
  return r;
}

RealDiagram relabel_alpha_order(const RealDiagram& d, const std::vector<int>& order) {
  if (order.size() != d.alpha_order.size()) throw InputError("alpha order has the wrong length");
  RealDiagram out = d;
  out.alpha_order = order;
  return out;
}

RealDiagram flip_curve(const RealDiagram& d, int curve) {
  RealDiagram out = d;
  out.curve_orientations.at(curve) *= -1;
  return out;
}

RealDiagram flip_surface_orientation(const RealDiagram& d) {
  RealDiagram out = d;
  auto reverse_loop = [](std::vector<HalfEdge>& loop) {
    std::reverse(loop.begin(), loop.end());
    for (auto& h : loop) h.sign = -h.sign;
  };
  for (auto& f : out.faces) reverse_loop(f.loop);
  for (auto& c : out.fixed_circles) reverse_loop(c.cycle);
  return out;
}

}  // namespace rhf
