#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rhf/diagram.hpp"
#include "rhf/errors.hpp"

namespace rhf {

namespace {

using nlohmann::json;

const std::set<std::string> kTopKeys = {"vertices", "edges", "faces", "tau", "alpha_order",
                                        "curve_orientations", "fixed_circles", "quotient_orientable"};

void only_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key)) throw InputError(where + ": unknown key '" + key + "'");
}

const json& need(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing key '" + key + "'");
  return *it;
}

// ids may be arbitrary integers; cells are stored densely in file order
struct IdMap {
  std::map<long long, int> index;
  std::vector<long long> ids;
  int add(long long id, const std::string& what) {
    if (!index.emplace(id, static_cast<int>(ids.size())).second)
      throw InputError("duplicate " + what + " id " + std::to_string(id));
    ids.push_back(id);
    return static_cast<int>(ids.size()) - 1;
  }
  int at(long long id, const std::string& what) const {
    auto it = index.find(id);
    if (it == index.end()) throw InputError("unknown " + what + " id " + std::to_string(id));
    return it->second;
  }
};

std::pair<EdgeKind, int> parse_label(const std::string& s) {
  if (s == "aux") return {EdgeKind::aux, -1};
  auto colon = s.find(':');
  if (colon == std::string::npos) throw InputError("bad edge label '" + s + "'");
  std::string head = s.substr(0, colon);
  int idx;
  try {
    std::size_t used = 0;
    idx = std::stoi(s.substr(colon + 1), &used);
    if (used != s.size() - colon - 1) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw InputError("bad edge label '" + s + "'");
  }
  if (head == "alpha") return {EdgeKind::alpha, idx};
  if (head == "beta") return {EdgeKind::beta, idx};
  if (head == "fixed") return {EdgeKind::fixed, idx};
  throw InputError("bad edge label '" + s + "'");
}

std::string label_of(const Edge& e) {
  switch (e.kind) {
    case EdgeKind::alpha: return "alpha:" + std::to_string(e.index);
    case EdgeKind::beta: return "beta:" + std::to_string(e.index);
    case EdgeKind::fixed: return "fixed:" + std::to_string(e.index);
    case EdgeKind::aux: break;
  }
  return "aux";
}

const char* kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::crossing: return "crossing";
    case VertexKind::fixed_crossing: return "fixed_crossing";
    case VertexKind::subdivision: break;
  }
  return "subdivision";
}

std::vector<HalfEdge> parse_loop(const json& j, const IdMap& edges, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": loop must be a list");
  std::vector<HalfEdge> loop;
  for (const auto& step : j) {
    if (!step.is_array() || step.size() != 2) throw InputError(where + ": loop entries are [edge, sign]");
    int sign = step[1].get<int>();
    if (sign != 1 && sign != -1) throw InputError(where + ": incidence sign must be +1 or -1");
    loop.push_back({edges.at(step[0].get<long long>(), "edge"), sign});
  }
  return loop;
}

json dump_loop(const std::vector<HalfEdge>& loop) {
  json out = json::array();
  for (HalfEdge h : loop) out.push_back({h.edge, h.sign});
  return out;
}

void parse_tau(const json& j, const IdMap& ids, std::vector<int>& out, const std::string& what) {
  if (!j.is_array()) throw InputError("tau." + what + " must be a list of [id, image] pairs");
  out.assign(ids.ids.size(), -1);
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw InputError("tau." + what + " entries are [id, image]");
    int a = ids.at(pair[0].get<long long>(), what);
    int b = ids.at(pair[1].get<long long>(), what);
    if (out[a] != -1) throw InputError("tau." + what + " lists id " + std::to_string(ids.ids[a]) + " twice");
    out[a] = b;
  }
  for (std::size_t k = 0; k < out.size(); ++k)
    if (out[k] < 0) throw InputError("tau." + what + " misses id " + std::to_string(ids.ids[k]));
}

RealDiagram from_json(const json& root) {
  only_keys(root, kTopKeys, "diagram");
  RealDiagram d;
  IdMap vid, eid, fid;

  for (const auto& v : need(root, "vertices", "diagram")) {
    only_keys(v, {"id", "kind"}, "vertex");
    vid.add(need(v, "id", "vertex").get<long long>(), "vertex");
    std::string k = need(v, "kind", "vertex").get<std::string>();
    if (k == "crossing") d.vertices.push_back(VertexKind::crossing);
    else if (k == "fixed_crossing") d.vertices.push_back(VertexKind::fixed_crossing);
    else if (k == "subdivision") d.vertices.push_back(VertexKind::subdivision);
    else throw InputError("bad vertex kind '" + k + "'");
  }
  for (const auto& e : need(root, "edges", "diagram")) {
    only_keys(e, {"id", "from", "to", "label", "direction"}, "edge");
    eid.add(need(e, "id", "edge").get<long long>(), "edge");
    Edge ed;
    ed.from = vid.at(need(e, "from", "edge").get<long long>(), "vertex");
    ed.to = vid.at(need(e, "to", "edge").get<long long>(), "vertex");
    std::tie(ed.kind, ed.index) = parse_label(need(e, "label", "edge").get<std::string>());
    ed.dir = e.value("direction", 0);
    d.edges.push_back(ed);
  }
  for (const auto& f : need(root, "faces", "diagram")) {
    only_keys(f, {"id", "loop", "sheet"}, "face");
    fid.add(need(f, "id", "face").get<long long>(), "face");
    Face face;
    face.loop = parse_loop(need(f, "loop", "face"), eid, "face");
    auto s = f.find("sheet");
    if (s != f.end() && !s->is_null()) {
      std::string name = s->get<std::string>();
      if (name == "plus") face.sheet = Sheet::plus;
      else if (name == "minus") face.sheet = Sheet::minus;
      else throw InputError("bad sheet '" + name + "'");
    }
    d.faces.push_back(std::move(face));
  }
  const json& tau = need(root, "tau", "diagram");
  only_keys(tau, {"vertices", "edges", "faces"}, "tau");
  parse_tau(need(tau, "vertices", "tau"), vid, d.tau_vertex, "vertex");
  parse_tau(need(tau, "edges", "tau"), eid, d.tau_edge, "edge");
  parse_tau(need(tau, "faces", "tau"), fid, d.tau_face, "face");

  d.alpha_order = need(root, "alpha_order", "diagram").get<std::vector<int>>();
  d.curve_orientations = need(root, "curve_orientations", "diagram").get<std::vector<int>>();
  for (const auto& c : need(root, "fixed_circles", "diagram")) {
    only_keys(c, {"cycle", "basepoint_edge"}, "fixed circle");
    FixedCircle fc;
    fc.cycle = parse_loop(need(c, "cycle", "fixed circle"), eid, "fixed circle");
    fc.basepoint_edge = eid.at(need(c, "basepoint_edge", "fixed circle").get<long long>(), "edge");
    d.fixed_circles.push_back(std::move(fc));
  }
  d.quotient_orientable = need(root, "quotient_orientable", "diagram").get<bool>();
  return d;
}

}  // namespace

RealDiagram parse_diagram(const std::string& text) {
  try {
    return from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw InputError(std::string("diagram file: ") + e.what());
  }
}

RealDiagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  RealDiagram d = parse_diagram(ss.str());
  auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  d.name = base.substr(0, base.rfind('.'));
  return d;
}

std::string dump_diagram(const RealDiagram& d) {
  json root;
  root["vertices"] = json::array();
  for (int v = 0; v < d.num_vertices(); ++v) root["vertices"].push_back({{"id", v}, {"kind", kind_name(d.vertices[v])}});
  root["edges"] = json::array();
  for (int e = 0; e < d.num_edges(); ++e) {
    const Edge& ed = d.edges[e];
    root["edges"].push_back({{"id", e}, {"from", ed.from}, {"to", ed.to}, {"label", label_of(ed)}, {"direction", ed.dir}});
  }
  root["faces"] = json::array();
  for (int f = 0; f < d.num_faces(); ++f) {
    json sheet = d.faces[f].sheet == Sheet::none ? json(nullptr) : json(d.faces[f].sheet == Sheet::plus ? "plus" : "minus");
    root["faces"].push_back({{"id", f}, {"loop", dump_loop(d.faces[f].loop)}, {"sheet", sheet}});
  }
  auto pairs = [](const std::vector<int>& m) {
    json out = json::array();
    for (std::size_t k = 0; k < m.size(); ++k) out.push_back({static_cast<int>(k), m[k]});
    return out;
  };
  root["tau"] = {{"vertices", pairs(d.tau_vertex)}, {"edges", pairs(d.tau_edge)}, {"faces", pairs(d.tau_face)}};
  root["alpha_order"] = d.alpha_order;
  root["curve_orientations"] = d.curve_orientations;
  root["fixed_circles"] = json::array();
  for (const auto& c : d.fixed_circles)
    root["fixed_circles"].push_back({{"cycle", dump_loop(c.cycle)}, {"basepoint_edge", c.basepoint_edge}});
  root["quotient_orientable"] = d.quotient_orientable;
  return root.dump(1);
}

}  // namespace rhf
