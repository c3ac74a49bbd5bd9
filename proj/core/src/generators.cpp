#include "rhf/generators.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <unordered_map>

#include "rhf/errors.hpp"

namespace rhf {

int Generator::pairs() const {
  int k = 0;
  for (int i = 0; i < size(); ++i) k += sigma[i] > i;
  return k;
}

IntersectionTable intersection_table(const RealDiagram& d, const Topology& t) {
  IntersectionTable tab;
  tab.m = d.num_curves();
  tab.on_c.assign(tab.m, {});
  tab.off_c.assign(tab.m, std::vector<std::vector<int>>(tab.m));
  for (int v = 0; v < d.num_vertices(); ++v) {
    if (d.vertices[v] == VertexKind::subdivision) continue;
    int a = t.alpha_at[v], b = t.beta_at[v];
    if (d.vertices[v] == VertexKind::fixed_crossing) tab.on_c[a].push_back(v);
    else tab.off_c[a][b].push_back(v);
  }
  return tab;
}

bool is_generator(const RealDiagram& d, const Topology& t, const Generator& g) {
  const int m = d.num_curves();
  if (g.size() != m || static_cast<int>(g.sigma.size()) != m) return false;
  std::vector<char> beta_used(m, 0);
  for (int i = 0; i < m; ++i) {
    int v = g.point[i];
    if (v < 0 || v >= d.num_vertices() || d.vertices[v] == VertexKind::subdivision) return false;
    if (t.alpha_at[v] != i) return false;
    int j = t.beta_at[v];
    if (g.sigma[i] != j || beta_used[j]) return false;
    beta_used[j] = 1;
    if (i == j) {
      if (d.vertices[v] != VertexKind::fixed_crossing) return false;
    } else if (g.point[j] != d.tau_vertex[v]) {
      return false;
    }
  }
  return true;
}

namespace {

struct Search {
  const IntersectionTable& tab;
  const RealDiagram& d;
  std::vector<Generator>& out;
  Generator cur;

  void run(int i) {
    const int m = tab.m;
    while (i < m && cur.sigma[i] >= 0) ++i;
    if (i == m) {
      out.push_back(cur);
      return;
    }
    for (int v : tab.on_c[i]) {
      cur.sigma[i] = i;
      cur.point[i] = v;
      run(i + 1);
    }
    for (int j = i + 1; j < m; ++j) {
      if (cur.sigma[j] >= 0) continue;
      for (int v : tab.off_c[i][j]) {
        cur.sigma[i] = j;
        cur.sigma[j] = i;
        cur.point[i] = v;
        cur.point[j] = d.tau_vertex[v];
        run(i + 1);
        cur.sigma[j] = -1;
      }
    }
    cur.sigma[i] = -1;
    cur.point[i] = -1;
  }
};

}  // namespace

std::vector<Generator> enumerate_generators(const RealDiagram& d, const Topology& t, int jobs) {
  const IntersectionTable tab = intersection_table(d, t);
  const int m = tab.m;
  std::vector<Generator> all;
  Generator empty{std::vector<int>(m, -1), std::vector<int>(m, -1)};
  if (m == 0 || jobs <= 1) {
    Search s{tab, d, all, empty};
    s.run(0);
  } else {
    // one task per first-level choice
    std::vector<Generator> seeds;
    for (int v : tab.on_c[0]) {
      Generator g = empty;
      g.sigma[0] = 0;
      g.point[0] = v;
      seeds.push_back(g);
    }
    for (int j = 1; j < m; ++j)
      for (int v : tab.off_c[0][j]) {
        Generator g = empty;
        g.sigma[0] = j;
        g.sigma[j] = 0;
        g.point[0] = v;
        g.point[j] = d.tau_vertex[v];
        seeds.push_back(g);
      }
    std::vector<std::vector<Generator>> parts(seeds.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t k; (k = next++) < seeds.size();) {
        Search s{tab, d, parts[k], seeds[k]};
        s.run(1);
      }
    };
    std::vector<std::future<void>> pool;
    for (int w = 0; w < jobs; ++w) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
    for (auto& p : parts) all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  std::sort(all.begin(), all.end());
  return all;
}

Integer generator_count(const RealDiagram& d, const Topology& t) {
  const IntersectionTable tab = intersection_table(d, t);
  const int m = tab.m;
  if (m > 62) throw UnsupportedDiagram("too many curves for the counting table");
  std::unordered_map<std::uint64_t, Integer> memo;
  const std::uint64_t full = m == 0 ? 0 : (m == 64 ? ~0ULL : (1ULL << m) - 1);
  auto count = [&](auto&& self, std::uint64_t used) -> Integer {
    if (used == full) return 1;
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    int i = __builtin_ctzll(~used);
    Integer total = 0;
    std::uint64_t with_i = used | (1ULL << i);
    if (!tab.on_c[i].empty()) total += Integer(static_cast<unsigned long>(tab.on_c[i].size())) * self(self, with_i);
    for (int j = i + 1; j < m; ++j) {
      if (used >> j & 1ULL || tab.off_c[i][j].empty()) continue;
      total += Integer(static_cast<unsigned long>(tab.off_c[i][j].size())) * self(self, with_i | (1ULL << j));
    }
    memo.emplace(used, total);
    return total;
  };
  return count(count, 0);
}

std::vector<Generator> brute_force_generators(const RealDiagram& d, const Topology& t) {
  const int m = d.num_curves();
  std::vector<std::vector<int>> on_alpha(m);
  for (int v = 0; v < d.num_vertices(); ++v)
    if (d.vertices[v] != VertexKind::subdivision) on_alpha[t.alpha_at[v]].push_back(v);
  std::vector<Generator> out;
  Generator g{std::vector<int>(m), std::vector<int>(m)};
  std::vector<std::size_t> pick(m, 0);
  for (;;) {
    for (int i = 0; i < m; ++i) {
      if (on_alpha[i].empty()) return out;
      g.point[i] = on_alpha[i][pick[i]];
      g.sigma[i] = t.beta_at[g.point[i]];
    }
    if (is_generator(d, t, g)) out.push_back(g);
    int k = 0;
    while (k < m && ++pick[k] == on_alpha[k].size()) pick[k++] = 0;
    if (k == m) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rhf
