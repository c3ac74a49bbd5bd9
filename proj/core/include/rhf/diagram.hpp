#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rhf {

enum class EdgeKind : std::uint8_t { alpha, beta, fixed, aux };
enum class VertexKind : std::uint8_t { crossing, fixed_crossing, subdivision };
enum class Sheet : std::int8_t { minus = -1, none = 0, plus = 1 };

struct Edge {
  int from = -1;
  int to = -1;
  EdgeKind kind = EdgeKind::aux;
  int index = -1;  // curve index for alpha/beta, circle index for fixed
  int dir = 0;     // +1/-1 relative to the curve orientation, 0 otherwise

  bool is_curve() const { return kind == EdgeKind::alpha || kind == EdgeKind::beta; }
};

struct HalfEdge {
  int edge = -1;
  int sign = 1;  // +1 traverses from -> to

  HalfEdge reversed() const { return {edge, -sign}; }
  friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

struct Face {
  std::vector<HalfEdge> loop;  // counterclockwise in the orientation of the surface
  Sheet sheet = Sheet::none;
};

struct FixedCircle {
  std::vector<HalfEdge> cycle;
  int basepoint_edge = -1;
};

// Cell model of a real Heegaard diagram. Plain data; call RealDiagram::topology()
// for the derived incidence structure.
struct RealDiagram {
  std::string name;
  std::vector<VertexKind> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;
  std::vector<int> tau_vertex;
  std::vector<int> tau_edge;
  std::vector<int> tau_face;
  std::vector<int> alpha_order;         // position -> curve index
  std::vector<int> curve_orientations;  // per curve, multiplies the edge direction flags
  std::vector<FixedCircle> fixed_circles;
  bool quotient_orientable = true;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_faces() const { return static_cast<int>(faces.size()); }
  int num_curves() const { return static_cast<int>(alpha_order.size()); }
  int euler_characteristic() const { return num_vertices() - num_edges() + num_faces(); }
  int genus() const { return (2 - euler_characteristic()) / 2; }
  int num_fixed_circles() const { return static_cast<int>(fixed_circles.size()); }
  // genus of the quotient surface, valid when the quotient is orientable
  int quotient_genus() const;

  int tail(HalfEdge h) const { return h.sign > 0 ? edges[h.edge].from : edges[h.edge].to; }
  int head(HalfEdge h) const { return h.sign > 0 ? edges[h.edge].to : edges[h.edge].from; }
  // direction of an edge along its curve after applying curve_orientations
  int curve_dir(int e) const { return edges[e].dir * curve_orientations[edges[e].index]; }
};

// Incidence data derived from the face loops.
struct Topology {
  // ccw cyclic order of outgoing half-edges at each vertex
  std::vector<std::vector<HalfEdge>> rotation;
  // face lying to the left of each half-edge, indexed by 2*edge + (sign < 0)
  std::vector<int> left_face;
  // per curve index, the half-edges of alpha_i / beta_i in traversal order
  std::vector<std::vector<HalfEdge>> alpha_path;
  std::vector<std::vector<HalfEdge>> beta_path;
  // orientation of each fixed edge as the boundary of the plus sheet (0 for other edges)
  std::vector<int> fixed_dir;
  // per fixed circle, its vertices in order starting after the basepoint
  std::vector<std::vector<int>> fixed_walk;
  // per vertex: alpha/beta curve through it (-1 if none), and fixed circle (-1 if none)
  std::vector<int> alpha_at;
  std::vector<int> beta_at;
  std::vector<int> circle_at;
  std::vector<Sheet> vertex_sheet;

  int face_left(HalfEdge h) const { return left_face[2 * h.edge + (h.sign < 0)]; }
};

Topology compute_topology(const RealDiagram& d);

struct ValidationIssue {
  std::string invariant;
  std::string detail;
};

std::vector<ValidationIssue> validate_diagram(const RealDiagram& d);

struct Quadrant {
  int vertex = -1;
  int region = -1;
  HalfEdge first;  // curve half-edge bounding the quadrant clockwise
  HalfEdge second; // curve half-edge bounding it counterclockwise
};

struct Region {
  std::vector<int> faces;
  std::vector<Quadrant> corners;
  int interior_edges = 0;
  int interior_vertices = 0;
  std::vector<int> basepoints;  // fixed circle indices whose basepoint lies here

  int euler_characteristic() const {
    return static_cast<int>(faces.size()) - interior_edges + interior_vertices;
  }
};

struct RegionData {
  std::vector<Region> regions;
  std::vector<int> region_of_face;
  std::vector<int> tau_region;
  // quadrants at each alpha-beta crossing in ccw order (empty for other vertices)
  std::vector<std::vector<Quadrant>> quadrants;
};

RegionData compute_regions(const RealDiagram& d, const Topology& t);

// JSON diagram files
RealDiagram load_diagram(const std::string& path);
RealDiagram parse_diagram(const std::string& text);
std::string dump_diagram(const RealDiagram& d);

// Convention changes used by the sign-stability property.
RealDiagram relabel_alpha_order(const RealDiagram& d, const std::vector<int>& order);
RealDiagram flip_curve(const RealDiagram& d, int curve);
RealDiagram flip_surface_orientation(const RealDiagram& d);

}  // namespace rhf
