#include "rhf/snf.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace rhf {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shapes do not match");
  IntMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

namespace {

struct Overflow {};

// Scalar policies: the reduction runs on int64 first and is redone with GMP
// integers if anything overflows.
struct Small {
  using T = std::int64_t;
  static bool zero(T x) { return x == 0; }
  static bool less_abs(T a, T b) { return (a < 0 ? -a : a) < (b < 0 ? -b : b); }
  static bool unit(T x) { return x == 1 || x == -1; }
  static T quot(T a, T b) { return a / b; }
  static bool divides(T b, T a) { return a % b == 0; }
  static void axpy(T& x, T q, T y) {  // x -= q * y
    T p;
    if (__builtin_mul_overflow(q, y, &p) || __builtin_sub_overflow(x, p, &x)) throw Overflow{};
  }
  static void add(T& x, T y) {
    if (__builtin_add_overflow(x, y, &x)) throw Overflow{};
  }
  static void negate(T& x) {
    if (x == INT64_MIN) throw Overflow{};
    x = -x;
  }
  static bool negative(T x) { return x < 0; }
  static T from(const Integer& v) {
    if (!v.fits_slong_p()) throw Overflow{};
    return v.get_si();
  }
  static Integer to(T v) { return Integer(static_cast<long>(v)); }
};

struct Big {
  using T = Integer;
  static bool zero(const T& x) { return sgn(x) == 0; }
  static bool less_abs(const T& a, const T& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
  static bool unit(const T& x) { return mpz_cmpabs_ui(x.get_mpz_t(), 1) == 0; }
  static T quot(const T& a, const T& b) {
    T q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static bool divides(const T& b, const T& a) { return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0; }
  static void axpy(T& x, const T& q, const T& y) { mpz_submul(x.get_mpz_t(), q.get_mpz_t(), y.get_mpz_t()); }
  static void add(T& x, const T& y) { x += y; }
  static void negate(T& x) { x = -x; }
  static bool negative(const T& x) { return sgn(x) < 0; }
  static T from(const Integer& v) { return v; }
  static Integer to(const T& v) { return v; }
};

template <class P>
class Reducer {
  using T = typename P::T;

 public:
  Reducer(const IntMatrix& m, bool transforms) : r_(m.rows), c_(m.cols), track_(transforms) {
    a_.assign(r_, std::vector<T>(c_));
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) a_[i][j] = P::from(m(i, j));
    if (track_) {
      u_.assign(r_, std::vector<T>(r_));
      for (int i = 0; i < r_; ++i) u_[i][i] = 1;
      // V is stored transposed so column operations are row operations
      vt_.assign(c_, std::vector<T>(c_));
      for (int j = 0; j < c_; ++j) vt_[j][j] = 1;
    }
  }

  SmithForm run() {
    SmithForm out;
    const int n = std::min(r_, c_);
    for (int t = 0; t < n; ++t) {
      if (!place_pivot(t)) break;
      for (;;) {
        if (!clear_column(t)) continue;
        if (!clear_row(t)) continue;
        if (fix_divisibility(t)) break;
      }
      if (P::negative(a_[t][t])) {
        P::negate(a_[t][t]);
        if (track_)
          for (auto& x : u_[t]) P::negate(x);
      }
      out.factors.push_back(P::to(a_[t][t]));
    }
    if (track_) {
      out.left = IntMatrix(r_, r_);
      for (int i = 0; i < r_; ++i)
        for (int j = 0; j < r_; ++j) out.left(i, j) = P::to(u_[i][j]);
      out.right = IntMatrix(c_, c_);
      for (int i = 0; i < c_; ++i)
        for (int j = 0; j < c_; ++j) out.right(i, j) = P::to(vt_[j][i]);
    }
    return out;
  }

 private:
  bool place_pivot(int t) {
    int bi = -1, bj = -1;
    for (int j = t; j < c_ && !(bi >= 0 && P::unit(a_[bi][bj])); ++j)
      for (int i = t; i < r_; ++i) {
        if (P::zero(a_[i][j])) continue;
        if (bi < 0 || P::less_abs(a_[i][j], a_[bi][bj])) bi = i, bj = j;
        if (P::unit(a_[bi][bj])) break;
      }
    if (bi < 0) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void swap_rows(int i, int k) {
    if (i == k) return;
    std::swap(a_[i], a_[k]);
    if (track_) std::swap(u_[i], u_[k]);
  }

  void swap_cols(int j, int k) {
    if (j == k) return;
    for (auto& row : a_) std::swap(row[j], row[k]);
    if (track_) std::swap(vt_[j], vt_[k]);
  }

  // returns false if the pivot changed and the sweep must restart
  bool clear_column(int t) {
    for (int i = t + 1; i < r_; ++i) {
      if (P::zero(a_[i][t])) continue;
      T q = P::quot(a_[i][t], a_[t][t]);
      for (int j = t; j < c_; ++j)
        if (!P::zero(a_[t][j])) P::axpy(a_[i][j], q, a_[t][j]);
      if (track_)
        for (int j = 0; j < r_; ++j)
          if (!P::zero(u_[t][j])) P::axpy(u_[i][j], q, u_[t][j]);
      if (!P::zero(a_[i][t])) {
        swap_rows(t, i);
        return false;
      }
    }
    return true;
  }

  bool clear_row(int t) {
    for (int j = t + 1; j < c_; ++j) {
      if (P::zero(a_[t][j])) continue;
      T q = P::quot(a_[t][j], a_[t][t]);
      for (int i = t; i < r_; ++i)
        if (!P::zero(a_[i][t])) P::axpy(a_[i][j], q, a_[i][t]);
      if (track_)
        for (int k = 0; k < c_; ++k)
          if (!P::zero(vt_[t][k])) P::axpy(vt_[j][k], q, vt_[t][k]);
      if (!P::zero(a_[t][j])) {
        swap_cols(t, j);
        return false;
      }
    }
    return true;
  }

  // adds an offending row into row t; returns true when nothing had to be done
  bool fix_divisibility(int t) {
    if (P::unit(a_[t][t])) return true;
    for (int i = t + 1; i < r_; ++i)
      for (int j = t + 1; j < c_; ++j)
        if (!P::zero(a_[i][j]) && !P::divides(a_[t][t], a_[i][j])) {
          for (int k = t; k < c_; ++k) P::add(a_[t][k], a_[i][k]);
          if (track_)
            for (int k = 0; k < r_; ++k) P::add(u_[t][k], u_[i][k]);
          return false;
        }
    return true;
  }

  int r_, c_;
  bool track_;
  std::vector<std::vector<T>> a_, u_, vt_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms) {
  try {
    return Reducer<Small>(m, with_transforms).run();
  } catch (const Overflow&) {
    return Reducer<Big>(m, with_transforms).run();
  }
}

Integer determinant(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
  // fraction-free Bareiss elimination
  const int n = m.rows;
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace rhf
