#include "rhf/homology.hpp"

#include <queue>

namespace rhf {

int HomologyPresentation::betti() const {
  int b = 0;
  for (const auto& q : moduli) b += (q == 0);
  return b;
}

Integer HomologyPresentation::order() const {
  Integer n = 1;
  for (const auto& q : moduli) {
    if (q == 0) return 0;
    n *= q;
  }
  return n;
}

std::vector<Integer> HomologyPresentation::invariant_factors() const { return moduli; }

int HomologyPresentation::surface_rank() const {
  IntMatrix faces(basis_size, first_curve_column);
  for (int i = 0; i < basis_size; ++i)
    for (int j = 0; j < first_curve_column; ++j) faces(i, j) = relations(i, j);
  return basis_size - smith_normal_form(faces, false).rank();
}

void HomologyPresentation::normalize(std::vector<Integer>& coords) const {
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (moduli[k] != 0) {
      mpz_fdiv_r(coords[k].get_mpz_t(), coords[k].get_mpz_t(), moduli[k].get_mpz_t());
    }
}

std::vector<Integer> HomologyPresentation::reduce(const std::vector<Integer>& chain) const {
  std::vector<Integer> out(moduli.size());
  for (std::size_t e = 0; e < chain.size(); ++e) {
    if (chain[e] == 0 || basis_row[e] < 0) continue;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += chain[e] * edge_image[e][k];
  }
  normalize(out);
  return out;
}

HomologyPresentation h1_presentation(const RealDiagram& d, const Topology& t) {
  HomologyPresentation hp;
  const int V = d.num_vertices(), E = d.num_edges(), m = d.num_curves();

  std::vector<char> tree(E, 0), seen(V, 0);
  std::queue<int> todo;
  if (V > 0) {
    seen[0] = 1;
    todo.push(0);
  }
  while (!todo.empty()) {
    int v = todo.front();
    todo.pop();
    for (HalfEdge h : t.rotation[v]) {
      int w = d.head(h);
      if (seen[w]) continue;
      seen[w] = 1;
      tree[h.edge] = 1;
      todo.push(w);
    }
  }
  hp.basis_row.assign(E, -1);
  for (int e = 0; e < E; ++e)
    if (!tree[e]) hp.basis_row[e] = hp.basis_size++;

  hp.first_curve_column = d.num_faces();
  hp.relations = IntMatrix(hp.basis_size, d.num_faces() + 2 * m);
  auto add = [&](int col, HalfEdge h, int coef) {
    int row = hp.basis_row[h.edge];
    if (row >= 0) hp.relations(row, col) += coef * h.sign;
  };
  for (int f = 0; f < d.num_faces(); ++f)
    for (HalfEdge h : d.faces[f].loop) add(f, h, 1);
  for (int i = 0; i < m; ++i) {
    for (HalfEdge h : t.alpha_path[i]) add(hp.first_curve_column + i, h, 1);
    for (HalfEdge h : t.beta_path[i]) add(hp.first_curve_column + m + i, h, 1);
  }

  hp.snf = smith_normal_form(hp.relations, true);
  const int rank = hp.snf.rank();
  for (int k = 0; k < hp.basis_size; ++k) {
    if (k < rank && hp.snf.factors[k] == 1) continue;
    hp.coordinate_rows.push_back(k);
    hp.moduli.push_back(k < rank ? hp.snf.factors[k] : Integer(0));
  }
  hp.edge_image.assign(E, std::vector<Integer>(hp.moduli.size()));
  for (int e = 0; e < E; ++e) {
    int row = hp.basis_row[e];
    if (row < 0) continue;
    for (std::size_t k = 0; k < hp.coordinate_rows.size(); ++k)
      hp.edge_image[e][k] = hp.snf.left(hp.coordinate_rows[k], row);
  }
  return hp;
}

}  // namespace rhf
