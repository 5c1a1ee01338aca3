#include <gtest/gtest.h>

#include <random>

#include "cxd/field.hpp"

using namespace cxd;

namespace {

// Permutation matrix sending e_{r*m+s} (basis of A (x) B, dims n, m) to e_{s*n+r}.
Matrix commutation(int p, int n, int m) {
  Matrix k(p, n * m, n * m);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < m; ++s) k.set(s * n + r, r * m + s, 1);
  return k;
}

Matrix random_small(std::mt19937_64& rng, int p, int maxdim) {
  std::uniform_int_distribution<int> d(0, maxdim), e(0, p - 1);
  Matrix m(p, d(rng), d(rng));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.set(r, c, Elem(e(rng)));
  return m;
}

}  // namespace

TEST(PrimeField, RejectsEvenAndComposite) {
  EXPECT_THROW(PrimeField(2), std::invalid_argument);
  EXPECT_THROW(PrimeField(9), std::invalid_argument);
  PrimeField f(7);
  for (Elem a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_EQ(f.centered(6), -1);
}

TEST(Kronecker, IdentityTimesIdentity) {
  EXPECT_EQ(kronecker(Matrix::identity(3, 2), Matrix::identity(3, 3)), Matrix::identity(3, 6));
}

TEST(Kronecker, HandExpansion) {
  Matrix a = Matrix::from_rows(3, {{1, 2}, {0, 1}});
  Matrix b = Matrix::from_rows(3, {{1}, {1}});
  EXPECT_EQ(kronecker(a, b), Matrix::from_rows(3, {{1, 2}, {1, 2}, {0, 1}, {0, 1}}));
}

TEST(Kronecker, SwappedFactorsAgreeUpToCommutationMatrices) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    Matrix a = random_small(rng, 3, 2), b = random_small(rng, 3, 2);
    Matrix lhs = commutation(3, a.rows(), b.rows()) * kronecker(a, b);
    Matrix rhs = kronecker(b, a) * commutation(3, a.cols(), b.cols());
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Kronecker, AssociativeOnFlatIndices) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    Matrix a = random_small(rng, 3, 3), b = random_small(rng, 3, 3), c = random_small(rng, 3, 3);
    // Row-major flattening makes the canonical reindexing the identity permutation.
    EXPECT_EQ(kronecker(kronecker(a, b), c), kronecker(a, kronecker(b, c)));
  }
}

TEST(Kronecker, RankIsMultiplicative) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    Matrix a = random_small(rng, 3, 3), b = random_small(rng, 3, 3);
    EXPECT_EQ(rank(kronecker(a, b)), rank(a) * rank(b));
  }
}

TEST(Invertible, Examples) {
  EXPECT_TRUE(is_invertible(Matrix::identity(3, 4)));
  EXPECT_FALSE(is_invertible(Matrix::zero(3, 2, 2)));
  EXPECT_FALSE(is_invertible(Matrix::from_rows(5, {{1, 2}, {2, 4}})));
  EXPECT_EQ(rank(Matrix::from_rows(5, {{1, 2}, {2, 4}})), 1);
  EXPECT_FALSE(is_invertible(Matrix::zero(3, 2, 3)));
  EXPECT_TRUE(is_invertible(Matrix(3, 0, 0)));
}

TEST(Invertible, InverseRoundTrip) {
  std::mt19937_64 rng(3);
  int found = 0;
  for (int t = 0; t < 200; ++t) {
    Matrix a(5, 3, 3);
    std::uniform_int_distribution<int> e(0, 4);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) a.set(r, c, Elem(e(rng)));
    if (!is_invertible(a)) {
      EXPECT_THROW(inverse(a), std::domain_error);
      EXPECT_EQ(determinant(a), 0u);
      continue;
    }
    ++found;
    EXPECT_NE(determinant(a), 0u);
    EXPECT_EQ(inverse(a) * a, Matrix::identity(5, 3));
  }
  EXPECT_GT(found, 50);
}

TEST(DirectSum, Examples) {
  Matrix one = Matrix::from_rows(3, {{1}}), two = Matrix::from_rows(3, {{2}});
  EXPECT_EQ(block_direct_sum({one, two}), Matrix::from_rows(3, {{1, 0}, {0, 2}}));
  EXPECT_EQ(block_direct_sum({two}), two);
  Matrix empty = block_direct_sum({}, 3);
  EXPECT_EQ(empty.rows(), 0);
  EXPECT_EQ(empty.cols(), 0);
  Matrix z = Matrix::from_rows(3, {{0}});
  EXPECT_EQ(block_direct_sum({two, z, one}), Matrix::from_rows(3, {{2, 0, 0}, {0, 0, 0}, {0, 0, 1}}));
}

TEST(Kernel, SpansNullSpace) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    Matrix a = random_small(rng, 3, 4);
    Matrix k = kernel_basis(a);
    EXPECT_EQ(k.cols(), a.cols() - rank(a));
    EXPECT_TRUE((a * k).is_zero());
    EXPECT_EQ(rank(k), k.cols());
  }
}

TEST(Json, RoundTrip) {
  Matrix a = Matrix::from_rows(7, {{1, 2, 3}, {4, 5, 6}});
  EXPECT_EQ(matrix_from_json(to_json(a), 7), a);
  EXPECT_EQ(to_json(a)["entries"][1][2], 6);
}
