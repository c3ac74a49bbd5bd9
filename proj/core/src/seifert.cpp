#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <algorithm>

#include "rhf/braid.hpp"

namespace rhf {

namespace {

// Planar pieces of the Seifert surface F: one disk per strand, one rectangle per
// band. Each piece carries straight segments; crossings are found numerically,
// all combinatorics downstream is exact.

enum class Seg : std::uint8_t { aux, fixed, plus_arc, minus_arc };

struct SegLabel {
  Seg kind = Seg::aux;
  int gap = -1;
  int dir = 0;
};

struct Segment {
  int a, b;
  SegLabel label;
};

struct Piece {
  bool flip = false;
  std::map<int, std::array<double, 2>> xy;
  std::vector<Segment> segs;
};

enum Rim { rim_a = 0, rim_lo = 1, rim_hi = 2, rim_b = 3 };

class Registry {
 public:
  int id(const std::array<int, 4>& key) {
    auto [it, fresh] = ids_.emplace(key, next_);
    if (fresh) ++next_;
    return it->second;
  }
  int fresh() { return next_++; }
  int size() const { return next_; }

 private:
  std::map<std::array<int, 4>, int> ids_;
  int next_ = 0;
};

int rim_key(Registry& r, int disk, int band, Rim kind) { return r.id({0, disk, band, kind}); }

struct LocalEdge {
  int a, b;
  SegLabel label;
};

// Splits every segment at its proper crossings with the others.
std::vector<LocalEdge> arrange(Piece& piece, Registry& reg) {
  const auto& segs = piece.segs;
  std::vector<std::vector<std::pair<double, int>>> cuts(segs.size());
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const auto& p1 = piece.xy.at(segs[i].a);
      const auto& p2 = piece.xy.at(segs[i].b);
      const auto& p3 = piece.xy.at(segs[j].a);
      const auto& p4 = piece.xy.at(segs[j].b);
      double den = (p2[0] - p1[0]) * (p4[1] - p3[1]) - (p2[1] - p1[1]) * (p4[0] - p3[0]);
      bool shared = segs[i].a == segs[j].a || segs[i].a == segs[j].b || segs[i].b == segs[j].a || segs[i].b == segs[j].b;
      if (std::abs(den) < 1e-14) {
        if (shared) continue;
        // parallel: reject overlapping collinear segments
        double cross = (p3[0] - p1[0]) * (p2[1] - p1[1]) - (p3[1] - p1[1]) * (p2[0] - p1[0]);
        if (std::abs(cross) < 1e-12) {
          double len = (p2[0] - p1[0]) * (p2[0] - p1[0]) + (p2[1] - p1[1]) * (p2[1] - p1[1]);
          auto proj = [&](const std::array<double, 2>& q) {
            return ((q[0] - p1[0]) * (p2[0] - p1[0]) + (q[1] - p1[1]) * (p2[1] - p1[1])) / len;
          };
          double lo = std::min(proj(p3), proj(p4)), hi = std::max(proj(p3), proj(p4));
          if (hi > 1e-9 && lo < 1 - 1e-9) throw ConsistencyError("builder produced overlapping segments");
        }
        continue;
      }
      double t = ((p3[0] - p1[0]) * (p4[1] - p3[1]) - (p3[1] - p1[1]) * (p4[0] - p3[0])) / den;
      double u = ((p3[0] - p1[0]) * (p2[1] - p1[1]) - (p3[1] - p1[1]) * (p2[0] - p1[0])) / den;
      constexpr double eps = 1e-9;
      bool inside_t = t > eps && t < 1 - eps, inside_u = u > eps && u < 1 - eps;
      if (inside_t && inside_u) {
        int v = reg.fresh();
        piece.xy[v] = {p1[0] + t * (p2[0] - p1[0]), p1[1] + t * (p2[1] - p1[1])};
        cuts[i].push_back({t, v});
        cuts[j].push_back({u, v});
      } else if (!shared && t > -eps && t < 1 + eps && u > -eps && u < 1 + eps) {
        throw ConsistencyError("builder produced a degenerate crossing");
      }
    }
  std::vector<LocalEdge> edges;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    std::sort(cuts[i].begin(), cuts[i].end());
    int prev = segs[i].a;
    for (const auto& [_, v] : cuts[i]) {
      edges.push_back({prev, v, segs[i].label});
      prev = v;
    }
    edges.push_back({prev, segs[i].b, segs[i].label});
  }
  return edges;
}

// Bounded faces of a planar straight-line graph, counterclockwise.
std::vector<std::vector<HalfEdge>> trace_faces(const Piece& piece, const std::vector<LocalEdge>& edges) {
  std::map<int, std::vector<HalfEdge>> out;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    out[edges[e].a].push_back({e, 1});
    out[edges[e].b].push_back({e, -1});
  }
  auto tail = [&](HalfEdge h) { return h.sign > 0 ? edges[h.edge].a : edges[h.edge].b; };
  auto head = [&](HalfEdge h) { return h.sign > 0 ? edges[h.edge].b : edges[h.edge].a; };
  auto angle = [&](HalfEdge h) {
    const auto& p = piece.xy.at(tail(h));
    const auto& q = piece.xy.at(head(h));
    return std::atan2(q[1] - p[1], q[0] - p[0]);
  };
  for (auto& [_, hs] : out) std::sort(hs.begin(), hs.end(), [&](HalfEdge x, HalfEdge y) { return angle(x) < angle(y); });

  std::set<HalfEdge> seen;
  std::vector<std::vector<HalfEdge>> faces;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    for (int s : {1, -1}) {
      HalfEdge h{e, s};
      if (seen.count(h)) continue;
      std::vector<HalfEdge> loop;
      for (HalfEdge cur = h; !seen.count(cur);) {
        seen.insert(cur);
        loop.push_back(cur);
        const auto& hs = out[head(cur)];
        auto k = std::find(hs.begin(), hs.end(), cur.reversed()) - hs.begin();
        cur = hs[(k + hs.size() - 1) % hs.size()];
      }
      double area = 0;
      for (HalfEdge x : loop) {
        const auto& p = piece.xy.at(tail(x));
        const auto& q = piece.xy.at(head(x));
        area += p[0] * q[1] - p[1] * q[0];
      }
      if (area > 0) faces.push_back(std::move(loop));
    }
  return faces;
}

struct SurfaceF {
  struct FEdge {
    int a, b;
    SegLabel label;
  };
  int vertices = 0;
  std::vector<FEdge> edges;
  std::vector<std::vector<HalfEdge>> faces;
};

std::vector<Piece> make_pieces(const BraidWord& w, const SeifertData& s, Registry& reg) {
  const int n = w.strands, c = w.crossings();
  std::vector<int> gap_below(c, -1), gap_above(c, -1);
  for (int g = 0; g < static_cast<int>(s.gaps.size()); ++g) {
    gap_above[s.gaps[g].lower] = g;
    gap_below[s.gaps[g].upper] = g;
  }
  const double pi = std::numbers::pi;
  auto theta = [&](int p) { return 2 * pi * (p + 1) / (c + 1); };
  const double dl = pi / (c + 1) * 0.6;

  std::vector<Piece> pieces;
  for (int i = 1; i <= n; ++i) {
    Piece disk;
    struct RimPoint {
      double angle;
      int id, band;
      Rim kind;
    };
    std::vector<RimPoint> rim;
    for (int p : s.disk_levels[i]) {
      const std::array<std::pair<Rim, double>, 4> offs = {
          {{rim_a, -dl}, {rim_lo, -dl / 2}, {rim_hi, dl / 2}, {rim_b, dl}}};
      for (auto [kind, off] : offs) {
        int id = rim_key(reg, i, p, kind);
        double ang = theta(p) + off;
        disk.xy[id] = {std::cos(ang), std::sin(ang)};
        rim.push_back({ang, id, p, kind});
      }
    }
    if (rim.empty()) throw ConsistencyError("disk without bands");
    std::sort(rim.begin(), rim.end(), [](const RimPoint& x, const RimPoint& y) { return x.angle < y.angle; });
    for (std::size_t k = 0; k < rim.size(); ++k) {
      const auto& a = rim[k];
      const auto& b = rim[(k + 1) % rim.size()];
      bool attached = a.band == b.band && a.kind != rim_b;
      disk.segs.push_back({a.id, b.id, {attached ? Seg::aux : Seg::fixed, -1, 0}});
    }
    for (int g = 0; g < static_cast<int>(s.gaps.size()); ++g) {
      const Gap& gp = s.gaps[g];
      if (gp.column == i)
        disk.segs.push_back({rim_key(reg, i, gp.lower, rim_hi), rim_key(reg, i, gp.upper, rim_lo), {Seg::plus_arc, g, 1}});
      if (gp.column == i - 1)
        disk.segs.push_back({rim_key(reg, i, gp.upper, rim_lo), rim_key(reg, i, gp.lower, rim_hi), {Seg::minus_arc, g, 1}});
    }
    pieces.push_back(std::move(disk));
  }

  for (int p = 0; p < c; ++p) {
    const int i = std::abs(w.letters[p]);
    Piece band;
    band.flip = true;
    const std::array<double, 4> xs = {0.0, 0.25, 0.75, 1.0};
    std::array<int, 4> bot = {rim_key(reg, i, p, rim_a), rim_key(reg, i, p, rim_lo), rim_key(reg, i, p, rim_hi),
                              rim_key(reg, i, p, rim_b)};
    std::array<int, 4> top = {rim_key(reg, i + 1, p, rim_b), rim_key(reg, i + 1, p, rim_hi),
                              rim_key(reg, i + 1, p, rim_lo), rim_key(reg, i + 1, p, rim_a)};
    for (int k = 0; k < 4; ++k) {
      band.xy[bot[k]] = {xs[k], 0.0};
      band.xy[top[k]] = {xs[k], 1.0};
    }
    for (int k = 0; k < 3; ++k) {
      band.segs.push_back({bot[k], bot[k + 1], {}});
      band.segs.push_back({top[k], top[k + 1], {}});
    }
    // the half twist: positive letters route both traversing arcs to the left edge
    const bool left = w.letters[p] > 0;
    const double t_below = left ? 1.0 / 3 : 2.0 / 3;
    const double t_above = left ? 2.0 / 3 : 1.0 / 3;
    const int side = left ? 0 : 1;
    std::array<std::vector<std::pair<double, int>>, 2> sides = {
        {{{0.0, bot[0]}, {1.0, top[0]}}, {{0.0, bot[3]}, {1.0, top[3]}}}};
    if (int g = gap_below[p]; g >= 0) {
      int touch = reg.id({1, p, 0, 0});
      band.xy[touch] = {static_cast<double>(side), t_below};
      sides[side].push_back({t_below, touch});
      band.segs.push_back({bot[1], touch, {Seg::plus_arc, g, 1}});
      band.segs.push_back({touch, top[2], {Seg::minus_arc, g, 1}});
    }
    if (int g = gap_above[p]; g >= 0) {
      int touch = reg.id({1, p, 1, 0});
      band.xy[touch] = {static_cast<double>(side), t_above};
      sides[side].push_back({t_above, touch});
      band.segs.push_back({bot[2], touch, {Seg::plus_arc, g, -1}});
      band.segs.push_back({touch, top[1], {Seg::minus_arc, g, -1}});
    }
    for (auto& sd : sides) {
      std::sort(sd.begin(), sd.end());
      for (std::size_t k = 0; k + 1 < sd.size(); ++k) band.segs.push_back({sd[k].second, sd[k + 1].second, {Seg::fixed, -1, 0}});
    }
    pieces.push_back(std::move(band));
  }
  return pieces;
}

SurfaceF assemble(std::vector<Piece>& pieces, Registry& reg) {
  SurfaceF f;
  std::map<std::pair<int, int>, int> aux_edge;
  for (auto& piece : pieces) {
    auto local = arrange(piece, reg);
    std::vector<HalfEdge> global(local.size());
    for (std::size_t k = 0; k < local.size(); ++k) {
      const auto& le = local[k];
      if (le.label.kind == Seg::aux) {
        auto key = std::minmax(le.a, le.b);
        auto it = aux_edge.find(key);
        if (it != aux_edge.end()) {
          global[k] = {it->second, f.edges[it->second].a == le.a ? 1 : -1};
          continue;
        }
        aux_edge[key] = static_cast<int>(f.edges.size());
      }
      global[k] = {static_cast<int>(f.edges.size()), 1};
      f.edges.push_back({le.a, le.b, le.label});
    }
    for (const auto& loop : trace_faces(piece, local)) {
      std::vector<HalfEdge> g;
      for (HalfEdge h : loop) g.push_back({global[h.edge].edge, global[h.edge].sign * h.sign});
      if (piece.flip) {
        std::reverse(g.begin(), g.end());
        for (auto& h : g) h.sign = -h.sign;
      }
      f.faces.push_back(std::move(g));
    }
  }
  f.vertices = reg.size();
  return f;
}

}  // namespace

RealDiagram build_real_diagram(const BraidWord& b) {
  const SeifertData s = seifert_data(b);
  Registry reg;
  auto pieces = make_pieces(b, s, reg);
  SurfaceF f = assemble(pieces, reg);

  std::vector<char> on_c(f.vertices, 0);
  for (const auto& e : f.edges)
    if (e.label.kind == Seg::fixed) on_c[e.a] = on_c[e.b] = 1;

  RealDiagram d;
  d.name = b.str();
  // vertex ids per sheet: index 0 for minus, 1 for plus
  std::vector<std::array<int, 2>> sv(f.vertices, {-1, -1});
  std::vector<Sheet> sheet_of;
  for (int v = 0; v < f.vertices; ++v) {
    if (on_c[v]) {
      sv[v] = {d.num_vertices(), d.num_vertices()};
      d.vertices.push_back(VertexKind::subdivision);
      sheet_of.push_back(Sheet::none);
    } else {
      for (int sh : {1, 0}) {
        sv[v][sh] = d.num_vertices();
        d.vertices.push_back(VertexKind::subdivision);
        sheet_of.push_back(sh ? Sheet::plus : Sheet::minus);
      }
    }
  }
  d.tau_vertex.resize(d.vertices.size());
  for (int v = 0; v < f.vertices; ++v) {
    d.tau_vertex[sv[v][0]] = sv[v][1];
    d.tau_vertex[sv[v][1]] = sv[v][0];
  }

  std::vector<std::array<int, 2>> se(f.edges.size(), {-1, -1});
  for (std::size_t k = 0; k < f.edges.size(); ++k) {
    const auto& fe = f.edges[k];
    if (fe.label.kind == Seg::fixed) {
      se[k] = {d.num_edges(), d.num_edges()};
      d.edges.push_back({sv[fe.a][0], sv[fe.b][0], EdgeKind::fixed, 0, 0});
      continue;
    }
    for (int sh : {1, 0}) {
      Edge e{sv[fe.a][sh], sv[fe.b][sh], EdgeKind::aux, -1, 0};
      if (fe.label.kind != Seg::aux) {
        bool alpha = (fe.label.kind == Seg::plus_arc) == (sh == 1);
        e.kind = alpha ? EdgeKind::alpha : EdgeKind::beta;
        e.index = fe.label.gap;
        e.dir = fe.label.dir;
      }
      se[k][sh] = d.num_edges();
      d.edges.push_back(e);
    }
  }
  d.tau_edge.resize(d.edges.size());
  for (const auto& pair : se) {
    d.tau_edge[pair[0]] = pair[1];
    d.tau_edge[pair[1]] = pair[0];
  }

  for (const auto& loop : f.faces) {
    Face plus, minus;
    plus.sheet = Sheet::plus;
    minus.sheet = Sheet::minus;
    for (HalfEdge h : loop) plus.loop.push_back({se[h.edge][1], h.sign});
    for (auto it = loop.rbegin(); it != loop.rend(); ++it) minus.loop.push_back({se[it->edge][0], -it->sign});
    d.tau_face.push_back(d.num_faces() + 1);
    d.tau_face.push_back(d.num_faces());
    d.faces.push_back(std::move(plus));
    d.faces.push_back(std::move(minus));
  }

  const int m = static_cast<int>(s.gaps.size());
  d.alpha_order.resize(m);
  std::iota(d.alpha_order.begin(), d.alpha_order.end(), 0);
  d.curve_orientations.assign(m, 1);

  // vertex tags from incidence
  std::vector<std::array<int, 3>> count(d.vertices.size(), {0, 0, 0});
  for (const auto& e : d.edges) {
    int slot = e.kind == EdgeKind::alpha ? 0 : e.kind == EdgeKind::beta ? 1 : e.kind == EdgeKind::fixed ? 2 : -1;
    if (slot < 0) continue;
    ++count[e.from][slot];
    ++count[e.to][slot];
  }
  for (int v = 0; v < d.num_vertices(); ++v)
    if (count[v][0] == 2 && count[v][1] == 2)
      d.vertices[v] = count[v][2] ? VertexKind::fixed_crossing : VertexKind::crossing;

  // fixed circle, oriented as the boundary of the plus sheet
  std::vector<int> cdir(d.edges.size(), 0);
  for (const auto& face : d.faces)
    if (face.sheet == Sheet::plus)
      for (HalfEdge h : face.loop)
        if (d.edges[h.edge].kind == EdgeKind::fixed) cdir[h.edge] = h.sign;
  const int first_band = s.disk_levels[1].front(), last_band = s.disk_levels[1].back();
  const int wa = sv[rim_key(reg, 1, last_band, rim_b)][0];
  const int wb = sv[rim_key(reg, 1, first_band, rim_a)][0];
  int bp = -1;
  for (int e = 0; e < d.num_edges(); ++e) {
    const Edge& ed = d.edges[e];
    if (ed.kind == EdgeKind::fixed && ((ed.from == wa && ed.to == wb) || (ed.from == wb && ed.to == wa))) bp = e;
  }
  if (bp < 0) throw ConsistencyError("builder could not place the basepoint");
  FixedCircle circle;
  circle.basepoint_edge = bp;
  std::vector<std::vector<int>> fixed_at(d.vertices.size());
  for (int e = 0; e < d.num_edges(); ++e)
    if (d.edges[e].kind == EdgeKind::fixed) {
      fixed_at[d.edges[e].from].push_back(e);
      fixed_at[d.edges[e].to].push_back(e);
    }
  HalfEdge h{bp, cdir[bp]};
  do {
    circle.cycle.push_back(h);
    int v = d.head(h);
    if (fixed_at[v].size() != 2) throw ConsistencyError("fixed set is not a circle");
    int next = fixed_at[v][0] == h.edge ? fixed_at[v][1] : fixed_at[v][0];
    h = {next, cdir[next]};
  } while (h.edge != bp && circle.cycle.size() <= d.edges.size());
  d.fixed_circles.push_back(std::move(circle));
  d.quotient_orientable = true;

  auto issues = validate_diagram(d);
  if (!issues.empty()) throw ConsistencyError("builder output violates '" + issues.front().invariant + "': " + issues.front().detail);
  return d;
}

}  // namespace rhf
