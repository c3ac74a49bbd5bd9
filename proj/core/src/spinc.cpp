#include "rhf/spinc.hpp"

#include <algorithm>
#include <map>

#include "rhf/errors.hpp"

namespace rhf {

namespace {

int tau_sign(const RealDiagram& d, int e) {
  const Edge& a = d.edges[e];
  const Edge& b = d.edges[d.tau_edge[e]];
  return d.tau_vertex[a.from] == b.from && d.tau_vertex[a.to] == b.to ? 1 : -1;
}

Coordinates antisymmetric_class(const RealDiagram& d, const HomologyPresentation& hp, const std::vector<Integer>& chain) {
  std::vector<Integer> c = chain;
  std::vector<Integer> tc = tau_chain(d, chain);
  for (std::size_t e = 0; e < c.size(); ++e) c[e] -= tc[e];
  return hp.reduce(c);
}

}  // namespace

std::vector<Integer> tau_chain(const RealDiagram& d, const std::vector<Integer>& chain) {
  std::vector<Integer> out(chain.size());
  for (std::size_t e = 0; e < chain.size(); ++e)
    if (chain[e] != 0) out[d.tau_edge[e]] += tau_sign(d, static_cast<int>(e)) * chain[e];
  return out;
}

EpsilonMap::EpsilonMap(const RealDiagram& d, const Topology& t, const HomologyPresentation& hp) : hp_(&hp) {
  const int m = d.num_curves();
  table_.resize(m);
  const std::size_t dim = hp.moduli.size();
  std::vector<Coordinates> tau_image(d.num_edges(), Coordinates(dim));
  for (int e = 0; e < d.num_edges(); ++e) {
    // class of e - tau(e), unreduced
    for (std::size_t k = 0; k < dim; ++k)
      tau_image[e][k] = hp.edge_image[e][k] - tau_sign(d, e) * hp.edge_image[d.tau_edge[e]][k];
  }
  for (int i = 0; i < m; ++i) {
    Coordinates acc(dim);
    for (HalfEdge h : t.alpha_path[i]) {
      int v = d.tail(h);
      if (d.vertices[v] != VertexKind::subdivision) {
        Coordinates c = acc;
        hp.normalize(c);
        table_[i].push_back({v, std::move(c)});
      }
      for (std::size_t k = 0; k < dim; ++k) acc[k] += h.sign * tau_image[h.edge][k];
    }
    std::sort(table_[i].begin(), table_[i].end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
}

const Coordinates& EpsilonMap::lookup(int curve, int vertex) const {
  const auto& row = table_[curve];
  auto it = std::lower_bound(row.begin(), row.end(), vertex, [](const auto& a, int v) { return a.first < v; });
  if (it == row.end() || it->first != vertex) throw ConsistencyError("point is not on its alpha curve");
  return it->second;
}

Coordinates EpsilonMap::potential(const Generator& g) const {
  Coordinates sum(hp_->moduli.size());
  for (int i = 0; i < g.size(); ++i) {
    const auto& p = lookup(i, g.point[i]);
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += p[k];
  }
  hp_->normalize(sum);
  return sum;
}

Coordinates EpsilonMap::epsilon(const Generator& x, const Generator& y) const {
  Coordinates a = potential(y), b = potential(x);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  hp_->normalize(a);
  return a;
}

Coordinates epsilon_class(const RealDiagram& d, const Topology& t, const HomologyPresentation& hp, const Generator& x,
                          const Generator& y) {
  std::vector<Integer> chain(d.num_edges());
  for (int i = 0; i < x.size(); ++i) {
    const auto& path = t.alpha_path[i];
    const int len = static_cast<int>(path.size());
    int px = -1, py = -1;
    for (int k = 0; k < len; ++k) {
      if (d.tail(path[k]) == x.point[i]) px = k;
      if (d.tail(path[k]) == y.point[i]) py = k;
    }
    if (px < 0 || py < 0) throw ConsistencyError("point is not on its alpha curve");
    int forward = ((py - px) % len + len) % len;
    if (forward <= len - forward) {
      for (int k = 0; k < forward; ++k) chain[path[(px + k) % len].edge] += path[(px + k) % len].sign;
    } else {
      for (int k = 0; k < len - forward; ++k) chain[path[(py + k) % len].edge] -= path[(py + k) % len].sign;
    }
  }
  return antisymmetric_class(d, hp, chain);
}

SpinCPartition partition_by_spinc(const RealDiagram& d, const Topology& t, const HomologyPresentation& hp,
                                  const std::vector<Generator>& gens) {
  SpinCPartition part;
  part.coarse = hp.betti() > 0;
  part.class_of.assign(gens.size(), -1);
  if (gens.empty()) return part;
  EpsilonMap eps(d, t, hp);
  const Coordinates base = eps.potential(gens.front());
  std::map<Coordinates, std::vector<int>> groups;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Coordinates c = eps.potential(gens[g]);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] -= base[k];
    hp.normalize(c);
    groups[c].push_back(static_cast<int>(g));
  }
  for (auto& [coord, members] : groups) {
    for (int g : members) part.class_of[g] = static_cast<int>(part.classes.size());
    part.classes.push_back({coord, std::move(members)});
  }
  return part;
}

}  // namespace rhf
