#pragma once

#include <gmpxx.h>

#include <vector>

namespace rhf {

using Integer = mpz_class;

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Integer> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}
  static IntMatrix identity(int n);

  Integer& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  const Integer& operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

struct SmithForm {
  // nonzero invariant factors, each dividing the next
  std::vector<Integer> factors;
  // U and V with U * M * V = diag(factors, 0, ...); empty when not requested
  IntMatrix left;
  IntMatrix right;

  int rank() const { return static_cast<int>(factors.size()); }
};

SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms = true);

Integer determinant(const IntMatrix& m);

}  // namespace rhf
