#include <algorithm>

#include "rhf/braid.hpp"

namespace rhf {

namespace {

using Poly = std::vector<Integer>;  // coefficients, lowest degree first

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// exact division; throws if the remainder is nonzero
Poly divexact(Poly a, const Poly& b) {
  if (b.empty()) throw ConsistencyError("polynomial division by zero");
  trim(a);
  if (a.empty()) return {};
  if (a.size() < b.size()) throw ConsistencyError("inexact polynomial division");
  Poly q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const Integer& top = a[k + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) throw ConsistencyError("inexact polynomial division");
    q[k] = top / b.back();
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= q[k] * b[j];
  }
  trim(a);
  if (!a.empty()) throw ConsistencyError("inexact polynomial division");
  trim(q);
  return q;
}

Poly det_bareiss(std::vector<std::vector<Poly>> a) {
  const std::size_t n = a.size();
  if (n == 0) return {Integer(1)};
  Poly prev{Integer(1)};
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].empty()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].empty()) ++r;
      if (r == n) return {};
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = divexact(sub(mul(a[k][k], a[i][j]), mul(a[i][k], a[k][j])), prev);
      a[i][k].clear();
    }
    prev = a[k][k];
  }
  Poly d = a[n - 1][n - 1];
  if (sign < 0)
    for (auto& c : d) c = -c;
  return d;
}

}  // namespace

std::vector<Integer> alexander_polynomial(const BraidWord& b) {
  const int n = b.strands, r = n - 1;
  // product of reduced Burau matrices, scaled by t^shift to stay polynomial
  std::vector<std::vector<Poly>> m(r, std::vector<Poly>(r));
  for (int i = 0; i < r; ++i) m[i][i] = {Integer(1)};
  int shift = 0;
  for (int l : b.letters) {
    const int k = std::abs(l) - 1;
    std::vector<std::vector<Poly>> g(r, std::vector<Poly>(r));
    if (l > 0) {
      for (int i = 0; i < r; ++i) g[i][i] = {Integer(1)};
      g[k][k] = {Integer(0), Integer(-1)};
      if (k > 0) g[k][k - 1] = {Integer(0), Integer(1)};
      if (k + 1 < r) g[k][k + 1] = {Integer(1)};
    } else {
      ++shift;
      for (int i = 0; i < r; ++i) g[i][i] = {Integer(0), Integer(1)};
      g[k][k] = {Integer(-1)};
      if (k > 0) g[k][k - 1] = {Integer(0), Integer(1)};
      if (k + 1 < r) g[k][k + 1] = {Integer(1)};
    }
    std::vector<std::vector<Poly>> out(r, std::vector<Poly>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        Poly acc;
        for (int s = 0; s < r; ++s) {
          if (m[i][s].empty() || g[s][j].empty()) continue;
          Poly p = mul(m[i][s], g[s][j]);
          if (acc.size() < p.size()) acc.resize(p.size());
          for (std::size_t c = 0; c < p.size(); ++c) acc[c] += p[c];
        }
        trim(acc);
        out[i][j] = std::move(acc);
      }
    m = std::move(out);
  }
  // det(t^shift I - M) equals det(I - rho) up to a unit
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Poly neg = m[i][j];
      for (auto& c : neg) c = -c;
      if (i == j) {
        if (neg.size() <= static_cast<std::size_t>(shift)) neg.resize(shift + 1);
        neg[shift] += 1;
        trim(neg);
      }
      m[i][j] = std::move(neg);
    }
  Poly p = det_bareiss(std::move(m));
  Poly cyclo(n, Integer(1));
  p = divexact(p, cyclo);
  std::size_t lead = 0;
  while (lead < p.size() && p[lead] == 0) ++lead;
  p.erase(p.begin(), p.begin() + static_cast<long>(lead));
  if (!p.empty() && p.back() < 0)
    for (auto& c : p) c = -c;
  return p;
}

Integer knot_determinant(const BraidWord& b) {
  Poly p = alexander_polynomial(b);
  Integer v = 0;
  for (std::size_t k = 0; k < p.size(); ++k) v += (k % 2 ? -p[k] : p[k]);
  return abs(v);
}

}  // namespace rhf
