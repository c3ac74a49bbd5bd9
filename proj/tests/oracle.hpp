#pragma once

// Independent reference computations used by the tests and the acceptance run.

#include <cstdint>
#include <numeric>
#include <vector>

namespace rhf::oracle {

using Mat = std::vector<std::vector<long long>>;

// cofactor expansion, fine up to 6x6
inline long long det_laplace(const Mat& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  long long total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    Mat minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    total += (j % 2 ? -1 : 1) * a[0][j] * det_laplace(minor);
  }
  return total;
}

inline void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// invariant factors as quotients of determinantal divisors d_k = gcd of k x k minors
inline std::vector<long long> invariant_factors(const Mat& a) {
  const int r = static_cast<int>(a.size());
  const int c = r ? static_cast<int>(a[0].size()) : 0;
  std::vector<long long> out;
  long long prev = 1;
  for (int k = 1; k <= std::min(r, c); ++k) {
    std::vector<std::vector<int>> rows, cols;
    std::vector<int> cur;
    subsets(r, k, 0, cur, rows);
    subsets(c, k, 0, cur, cols);
    long long g = 0;
    for (const auto& rs : rows)
      for (const auto& cs : cols) {
        Mat m(k, std::vector<long long>(k));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) m[i][j] = a[rs[i]][cs[j]];
        g = std::gcd(g, det_laplace(m));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Knot determinant from Fox colorings of the braid closure: arcs are the
// initial strands plus one new arc per under-crossing exit; closing the braid
// identifies the final arcs with the initial ones. det = product of the
// nonzero invariant factors of the coloring matrix.
inline long long coloring_determinant(const std::vector<int>& word, int strands) {
  const int n = strands, c = static_cast<int>(word.size());
  std::vector<int> arc(n);
  std::iota(arc.begin(), arc.end(), 0);
  int next = n;
  Mat rows;
  const int vars = n + c;
  for (int l : word) {
    int i = std::abs(l) - 1;  // strands i and i+1 swap
    // positive letters: the strand coming from position i passes over
    int over = l > 0 ? arc[i] : arc[i + 1];
    int under = l > 0 ? arc[i + 1] : arc[i];
    int fresh = next++;
    std::vector<long long> row(vars, 0);
    row[over] += 2;
    row[under] -= 1;
    row[fresh] -= 1;
    rows.push_back(row);
    if (l > 0) {
      arc[i + 1] = over;
      arc[i] = fresh;
    } else {
      arc[i] = over;
      arc[i + 1] = fresh;
    }
  }
  for (int p = 0; p < n; ++p) {
    std::vector<long long> row(vars, 0);
    row[arc[p]] += 1;
    row[p] -= 1;
    rows.push_back(row);
  }
  // textbook Smith reduction on the (n+c) x (n+c) matrix
  Mat a = rows;
  const int R = static_cast<int>(a.size()), C = vars;
  long long product = 1;
  int t = 0;
  for (; t < std::min(R, C); ++t) {
    for (;;) {
      int bi = -1, bj = -1;
      for (int i = t; i < R; ++i)
        for (int j = t; j < C; ++j)
          if (a[i][j] != 0 && (bi < 0 || std::llabs(a[i][j]) < std::llabs(a[bi][bj]))) bi = i, bj = j;
      if (bi < 0) return product;
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      bool clean = true;
      for (int i = t + 1; i < R; ++i) {
        long long q = a[i][t] / a[t][t];
        for (int j = t; j < C; ++j) a[i][j] -= q * a[t][j];
        clean = clean && a[i][t] == 0;
      }
      for (int j = t + 1; j < C; ++j) {
        long long q = a[t][j] / a[t][t];
        for (int i = t; i < R; ++i) a[i][j] -= q * a[i][t];
        clean = clean && a[t][j] == 0;
      }
      if (!clean) continue;
      bool divides = true;
      for (int i = t + 1; i < R && divides; ++i)
        for (int j = t + 1; j < C; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (int k = t; k < C; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    product *= std::llabs(a[t][t]);
  }
  return product;
}

}  // namespace rhf::oracle
