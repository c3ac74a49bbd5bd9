#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "rhf/snf.hpp"

using namespace rhf;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m(i, j) = static_cast<long>(rows[i][j]);
  return m;
}

std::vector<long long> as_ll(const std::vector<Integer>& v) {
  std::vector<long long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

bool is_diagonal_form(const IntMatrix& m, const std::vector<Integer>& factors) {
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      Integer want = (i == j && i < static_cast<int>(factors.size())) ? factors[i] : Integer(0);
      if (m(i, j) != want) return false;
    }
  return true;
}

}  // namespace

TEST_SUITE("snf") {
  TEST_CASE("small examples") {
    CHECK(as_ll(smith_normal_form(IntMatrix::identity(2)).factors) == std::vector<long long>{1, 1});
    CHECK(smith_normal_form(IntMatrix(3, 2)).factors.empty());
    CHECK(as_ll(smith_normal_form(from_rows({{2, 4}, {6, 8}})).factors) == std::vector<long long>{2, 4});
    CHECK(smith_normal_form(IntMatrix(0, 0)).rank() == 0);
  }

  TEST_CASE("random matrices against determinantal divisors") {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> entry(-9, 9), dim(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
      int r = dim(rng), c = dim(rng);
      std::vector<std::vector<long long>> rows(r, std::vector<long long>(c));
      for (auto& row : rows)
        for (auto& x : row) x = rng() % 3 == 0 ? 0 : entry(rng);
      IntMatrix m = from_rows(rows);
      SmithForm s = smith_normal_form(m);
      CAPTURE(trial);
      CHECK(as_ll(s.factors) == oracle::invariant_factors(rows));
      for (std::size_t k = 0; k + 1 < s.factors.size(); ++k) CHECK(s.factors[k + 1] % s.factors[k] == 0);
      CHECK(is_diagonal_form(s.left * m * s.right, s.factors));
      CHECK(abs(determinant(s.left)) == 1);
      CHECK(abs(determinant(s.right)) == 1);
    }
  }

  TEST_CASE("entries beyond 64 bits") {
    IntMatrix m(2, 2);
    m(0, 0) = Integer("123456789012345678901234567890");
    m(0, 1) = 2;
    m(1, 0) = 4;
    m(1, 1) = Integer("98765432109876543210");
    SmithForm s = smith_normal_form(m);
    REQUIRE(s.rank() == 2);
    CHECK(s.factors[0] == 2);
    CHECK(s.factors[0] * s.factors[1] == abs(determinant(m)));
    CHECK(is_diagonal_form(s.left * m * s.right, s.factors));
  }

  TEST_CASE("determinant matches cofactor expansion") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int n = 0; n <= 6; ++n) {
      std::vector<std::vector<long long>> rows(n, std::vector<long long>(n));
      for (auto& row : rows)
        for (auto& x : row) x = entry(rng);
      CHECK(determinant(from_rows(rows)).get_si() == oracle::det_laplace(rows));
    }
  }
}
