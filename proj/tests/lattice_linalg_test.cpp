#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "toricalc/lattice_linalg.hpp"

using namespace toricalc;

namespace {

bool unimodular(const IntegerMatrix& u) {
  auto d = oracle::cofactor_det(u.row_list());
  return d == 1 || d == -1;
}

// Row-echelon, positive pivots, entries above each pivot in [0, pivot).
bool is_row_hermite(const IntegerMatrix& d) {
  std::size_t last_pivot_col = 0;
  bool seen_zero_row = false;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    std::size_t j = 0;
    while (j < d.cols() && d(i, j) == 0) ++j;
    if (j == d.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (i > 0 && j <= last_pivot_col) return false;
    if (d(i, j) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (d(k, j) < 0 || d(k, j) >= d(i, j)) return false;
    for (std::size_t k = i + 1; k < d.rows(); ++k)
      if (d(k, j) != 0) return false;
    last_pivot_col = j;
  }
  return true;
}

IntegerMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

} // namespace

TEST(Hnf, OneByOne) {
  auto h = hnf(IntegerMatrix{{2}});
  EXPECT_EQ(h.D, (IntegerMatrix{{2}}));
  EXPECT_EQ(h.U, (IntegerMatrix{{1}}));
  EXPECT_FALSE(h.V.has_value());
}

TEST(Hnf, Permutation) {
  IntegerMatrix m{{0, 1}, {1, 0}};
  auto h = hnf(m);
  EXPECT_EQ(h.D, IntegerMatrix::identity(2));
  EXPECT_EQ(h.U * m, h.D);
  EXPECT_TRUE(unimodular(h.U));
}

TEST(Hnf, DeterminantPreserved) {
  IntegerMatrix m{{2, 4}, {1, 3}};
  auto h = hnf(m);
  EXPECT_TRUE(is_row_hermite(h.D));
  EXPECT_EQ(h.U * m, h.D);
  EXPECT_TRUE(unimodular(h.U));
  EXPECT_EQ(abs(oracle::cofactor_det(m.row_list())), 2);
  EXPECT_EQ(oracle::cofactor_det(h.D.row_list()), 2);
}

TEST(Snf, Identity) {
  auto s = snf(IntegerMatrix::identity(3));
  EXPECT_EQ(s.D, IntegerMatrix::identity(3));
}

TEST(Snf, CoprimeDiagonal) {
  IntegerMatrix m{{2, 0}, {0, 3}};
  auto s = snf(m);
  EXPECT_EQ(s.D, (IntegerMatrix{{1, 0}, {0, 6}}));
  EXPECT_EQ(s.U * m * *s.V, s.D);
  EXPECT_TRUE(unimodular(s.U));
  EXPECT_TRUE(unimodular(*s.V));
}

TEST(Snf, RowVector) {
  IntegerMatrix m{{1, 1}};
  auto s = snf(m);
  EXPECT_EQ(s.D, (IntegerMatrix{{1, 0}}));
  EXPECT_EQ(s.U * m * *s.V, s.D);
}

TEST(Snf, Torsion) {
  EXPECT_EQ(invariant_factors(IntegerMatrix{{2, 2}}), std::vector<BigInt>{2});
  EXPECT_FALSE(rows_saturated(IntegerMatrix{{2, 2}}));
  EXPECT_TRUE(rows_saturated(IntegerMatrix{{1, 1, 0}, {0, 1, 1}}));
  EXPECT_FALSE(rows_saturated(IntegerMatrix{{1, 1}, {2, 2}}));
}

TEST(Kernel, SingleRow) {
  auto k = integer_kernel_basis(IntegerMatrix{{1, 1}});
  EXPECT_EQ(k, (IntegerMatrix{{1, -1}}));
}

TEST(Kernel, Trivial) {
  auto k = integer_kernel_basis(IntegerMatrix::identity(2));
  EXPECT_EQ(k.rows(), 0u);
  EXPECT_EQ(k.cols(), 2u);
}

TEST(Kernel, SquareNormals) {
  IntegerMatrix m{{1, -1, 0, 0}, {0, 0, 1, -1}};
  auto k = integer_kernel_basis(m);
  EXPECT_EQ(k, (IntegerMatrix{{1, 1, 0, 0}, {0, 0, 1, 1}}));
  EXPECT_TRUE(is_zero((m * k.transpose()).row(0)));
  EXPECT_TRUE(rows_saturated(k));
}

TEST(Kernel, ZeroRowMatrix) {
  auto k = integer_kernel_basis(IntegerMatrix(0, 3));
  EXPECT_EQ(k, IntegerMatrix::identity(3));
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = random_matrix(rng, 4, 4, -6, 6);
    EXPECT_EQ(determinant(m), oracle::cofactor_det(m.row_list()));
  }
}

TEST(NormalFormProperties, RandomMatrices) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 5;
    auto m = random_matrix(rng, r, c, -5, 5);

    auto h = hnf(m);
    EXPECT_TRUE(is_row_hermite(h.D));
    EXPECT_EQ(h.U * m, h.D);
    EXPECT_TRUE(unimodular(h.U));
    EXPECT_EQ(hnf(m).D, h.D) << "hnf must be deterministic";

    auto s = snf(m);
    EXPECT_EQ(s.U * m * *s.V, s.D);
    EXPECT_TRUE(unimodular(s.U));
    EXPECT_TRUE(unimodular(*s.V));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) EXPECT_EQ(s.D(i, j), 0);
    const std::size_t diag = std::min(r, c);
    for (std::size_t i = 0; i < diag; ++i) {
      EXPECT_GE(s.D(i, i), 0);
      if (i + 1 < diag && s.D(i, i) != 0)
        EXPECT_TRUE(mpz_divisible_p(s.D(i + 1, i + 1).get_mpz_t(), s.D(i, i).get_mpz_t()));
      if (s.D(i, i) == 0 && i + 1 < diag) EXPECT_EQ(s.D(i + 1, i + 1), 0);
    }

    auto k = integer_kernel_basis(m);
    EXPECT_EQ(k.rows(), c - rank(m));
    if (k.rows() > 0) {
      auto prod = m * k.transpose();
      for (std::size_t i = 0; i < prod.rows(); ++i) EXPECT_TRUE(is_zero(prod.row(i)));
      EXPECT_TRUE(rows_saturated(k));
      EXPECT_TRUE(is_row_hermite(k));
    }
  }
}

TEST(Vectors, Primitive) {
  EXPECT_EQ(primitive(to_int_vector({4, -6, 0})), to_int_vector({2, -3, 0}));
  EXPECT_EQ(primitive(to_int_vector({0, 0})), to_int_vector({0, 0}));
  RatVector q{BigRat(1, 2), BigRat(1, 3)};
  EXPECT_EQ(primitive(q), to_int_vector({3, 2}));
}

TEST(Solve, SingularAndRegular) {
  IntegerMatrix b{{2, 1}, {1, 1}};
  auto x = solve(b, RatVector{BigRat(3), BigRat(2)});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 1);
  EXPECT_EQ((*x)[1], 1);
  EXPECT_FALSE(solve(IntegerMatrix{{1, 1}, {2, 2}}, RatVector{BigRat(1), BigRat(2)}));
}
