#include <gtest/gtest.h>

#include "cxd/witt.hpp"

using namespace cxd;

namespace {

Matrix d(int p, std::vector<std::vector<long long>> rows) { return Matrix::from_rows(p, rows); }

Sheaves over(int p) { return Sheaves(Monoidal(default_assignment(), p)); }

}  // namespace

TEST(Witt, SquaresModP) {
  EXPECT_TRUE(is_square(1, 3));
  EXPECT_FALSE(is_square(2, 3));
  EXPECT_TRUE(is_square(4, 5));
  EXPECT_FALSE(is_square(2, 5));
  EXPECT_EQ(least_nonsquare(3), 2);
  EXPECT_EQ(least_nonsquare(5), 2);
  EXPECT_EQ(least_nonsquare(7), 3);
}

TEST(Witt, HyperbolicPlaneIsZero) {
  EXPECT_EQ(witt_reduce(d(3, {{1, 0}, {0, -1}})), witt_zero(3));
  EXPECT_EQ(witt_reduce(d(3, {{0, 1}, {1, 0}})).dim(), 0);
  // -1 is a square mod 5, so <1,1> is hyperbolic there but anisotropic mod 3.
  EXPECT_EQ(witt_reduce(d(5, {{1, 0}, {0, 1}})).dim(), 0);
  EXPECT_EQ(witt_reduce(d(3, {{1, 0}, {0, 1}})).dim(), 2);
}

TEST(Witt, FieldOfThreeIsCyclicOfOrderFour) {
  WittTable t = witt_classify(3, 4);
  EXPECT_EQ(t.classes.size(), 4u);
  EXPECT_TRUE(t.cyclic());
  WittClass one = witt_reduce(d(3, {{1}}));
  WittClass x = one;
  int order = 1;
  while (x != witt_zero(3)) {
    x = witt_add(x, one);
    ++order;
  }
  EXPECT_EQ(order, 4);
}

TEST(Witt, FieldOfFiveHasExponentTwo) {
  WittTable t = witt_classify(5, 4);
  EXPECT_EQ(t.classes.size(), 4u);
  EXPECT_EQ(t.exponent(), 2);
  EXPECT_FALSE(t.cyclic());
}

TEST(Witt, TableIsAGroup) {
  for (int p : {3, 5, 7}) {
    WittTable t = witt_classify(p, 3);
    std::size_t n = t.classes.size();
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(t.add[0][i], int(i));
      bool has_inverse = false;
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(t.add[i][j], t.add[j][i]);
        has_inverse |= t.add[i][j] == 0;
        for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(t.add[t.add[i][j]][k], t.add[i][t.add[j][k]]);
      }
      EXPECT_TRUE(has_inverse) << p << " " << t.classes[i].label();
    }
  }
}

TEST(Witt, NegationIsAdditiveInverse) {
  Rng rng(1);
  for (int t = 0; t < 30; ++t) {
    int p = t % 2 ? 3 : 5;
    WittClass a = witt_reduce(random_nondegenerate_form(rng, p, int(rng() % 3) + 1));
    EXPECT_EQ(witt_add(a, witt_neg(a)), witt_zero(p));
  }
}

TEST(Witt, InvariantsAgreeWithExhaustiveCongruence) {
  for (int p : {3, 5}) {
    std::vector<Matrix> forms;
    for (int n = 1; n <= 2; ++n) {
      int total = 1;
      for (int i = 0; i < n * n; ++i) total *= p;
      for (int code = 0; code < total; ++code) {
        Matrix m(p, n, n);
        int c = code;
        for (int i = 0; i < n * n; ++i, c /= p) m.set(i / n, i % n, Elem(c % p));
        if (m == m.transpose() && is_invertible(m)) forms.push_back(m);
      }
    }
    // Same dim: congruent exactly when the discriminants agree.
    for (const auto& a : forms)
      for (const auto& b : forms) {
        if (a.rows() != b.rows()) continue;
        bool same_disc = is_square(determinant(a), p) == is_square(determinant(b), p);
        EXPECT_EQ(congruent_exhaustive(a, b), same_disc);
      }
    // Reduction lands on a form congruent to its canonical representative.
    for (const auto& a : forms) {
      WittClass c = witt_reduce(a);
      if (c.dim() > 0) {
        EXPECT_TRUE(congruent_exhaustive(c.rep, c.canonical())) << c.label();
      }
    }
  }
}

TEST(Witt, DegenerateOrNonSymmetricRejected) {
  EXPECT_THROW(witt_reduce(d(3, {{1, 1}, {1, 1}})), std::invalid_argument);
  EXPECT_THROW(witt_reduce(d(3, {{1, 1}, {0, 1}})), std::invalid_argument);
  Sheaves s;
  EXPECT_THROW(transfer_witt(s, FiniteMap::to_point(1), {d(3, {{0}})}), std::invalid_argument);
}

TEST(Witt, TransferIsOrthogonalSum) {
  Rng rng(2);
  for (int p : {3, 5}) {
    Sheaves s = over(p);
    for (int t = 0; t < 40; ++t) {
      int n = int(rng() % 3) + 1;
      std::vector<Matrix> grams;
      for (int x = 0; x < n; ++x) grams.push_back(random_nondegenerate_form(rng, p, int(rng() % 3) + 1));
      EXPECT_EQ(transfer_witt(s, FiniteMap::to_point(n), grams), orthogonal_sum_witt(p, grams));
    }
  }
}

TEST(Witt, ProductIsKronecker) {
  Rng rng(3);
  for (int p : {3, 5}) {
    Sheaves s = over(p);
    for (int t = 0; t < 40; ++t) {
      Matrix a = random_nondegenerate_form(rng, p, int(rng() % 3) + 1);
      Matrix b = random_nondegenerate_form(rng, p, int(rng() % 3) + 1);
      EXPECT_EQ(product_witt(s, a, b), witt_reduce(kronecker(a, b)));
      EXPECT_EQ(product_witt(s, a, b), witt_mul(witt_reduce(a), witt_reduce(b)));
    }
  }
}

TEST(Witt, ProjectionFormulaExhaustiveAtThree) {
  Sheaves s;
  std::vector<Matrix> forms;
  for (int n = 1; n <= 2; ++n) {
    int total = 1;
    for (int i = 0; i < n * n; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      Matrix m(3, n, n);
      int c = code;
      for (int i = 0; i < n * n; ++i, c /= 3) m.set(i / n, i % n, Elem(c % 3));
      if (m == m.transpose() && is_invertible(m)) forms.push_back(m);
    }
  }
  for (int nx = 1; nx <= 2; ++nx) {
    FiniteMap f = FiniteMap::to_point(nx);
    std::vector<std::size_t> idx(nx, 0);
    for (;;) {
      std::vector<Matrix> x;
      for (auto i : idx) x.push_back(forms[i]);
      for (const auto& y : forms) {
        auto [lhs, rhs] = projection_formula_sides(s, f, x, y);
        EXPECT_EQ(lhs, rhs);
      }
      int i = nx - 1;
      while (i >= 0 && idx[i] == forms.size() - 1) idx[i--] = 0;
      if (i < 0) break;
      ++idx[i];
    }
  }
}

TEST(Witt, TableJson) {
  auto j = witt_classify(3, 4).to_json();
  EXPECT_EQ(j["size"], 4);
  EXPECT_EQ(j["classes"][0]["label"], "0");
}
