#include <gtest/gtest.h>

#include "cxd/complex.hpp"

using namespace cxd;

namespace {

Complex disc(int p, int top) {
  return Complex::make(p, top - 1, {1, 1}, {Matrix::from_rows(p, {{1}})});
}

}  // namespace

TEST(Validate, Examples) {
  EXPECT_TRUE(validate(Complex::make(3, 0, {2, 1, 3}, {Matrix(3, 2, 1), Matrix(3, 1, 3)})));
  Complex bad = Complex::make(3, 0, {1, 1, 1}, {Matrix::identity(3, 1), Matrix::identity(3, 1)});
  EXPECT_FALSE(validate(bad));
  EXPECT_TRUE(validate(Complex::zero(3)));
  EXPECT_THROW(Complex::make(3, 0, {1, 2}, {Matrix(3, 2, 1)}), std::invalid_argument);
}

TEST(Suspend, NegatesDifferential) {
  Complex t = suspend(disc(3, 1));
  EXPECT_EQ(t.min_degree, 1);
  EXPECT_EQ(t.max_degree(), 2);
  EXPECT_EQ(t.d(2), Matrix::from_rows(3, {{2}}));
  Complex z = suspend(Complex::make(3, 0, {1, 2}, {Matrix(3, 1, 2)}));
  EXPECT_EQ(z.dims, (std::vector<int>{1, 2}));
  EXPECT_TRUE(z.d(2).is_zero());
}

TEST(Suspend, RoundTripsOnRandomComplexes) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Complex a = random_complex(s, 3, 3);
    EXPECT_TRUE(same(desuspend(suspend(a)), a));
    EXPECT_TRUE(same(suspend(desuspend(a)), a));
    Complex tt = suspend(suspend(a));
    for (int n = a.min_degree + 1; n <= a.max_degree(); ++n) EXPECT_EQ(tt.d(n + 2), a.d(n));
  }
}

TEST(Random, DeterministicValidAndVaried) {
  bool saw_zero = false, saw_nonzero = false;
  for (std::uint64_t s = 0; s < 100; ++s) {
    Complex a = random_complex(s, 3, 3), b = random_complex(s, 3, 3);
    EXPECT_TRUE(same(a, b));
    EXPECT_TRUE(validate(a));
    for (const auto& d : a.diffs) (d.is_zero() ? saw_zero : saw_nonzero) = true;
  }
  EXPECT_TRUE(saw_zero);
  EXPECT_TRUE(saw_nonzero);
}

TEST(ChainMapSpace, Scalars) {
  auto u = share(Complex::unit(3));
  auto basis = chain_map_space(u, u);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], ChainMap::identity(u));
}

TEST(ChainMapSpace, DiscToPoint) {
  // Disc with its source end in degree 0: projecting onto degree 0 is a chain map.
  auto a = share(disc(3, 0));
  auto b = share(Complex::unit(3));
  auto basis = chain_map_space(a, b);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0].comp(0), Matrix::from_rows(3, {{1}}));
  EXPECT_TRUE(basis[0].comp(-1).is_zero());
  // A map into the disc would have to land in the kernel of d_0, which is zero.
  EXPECT_EQ(chain_map_space(b, a).size(), 0u);
  // With the disc one degree higher nothing survives either way.
  EXPECT_EQ(chain_map_space(share(disc(3, 1)), b).size(), 0u);
}

TEST(ChainMapSpace, MatchesBruteForceOnTinyComplexes) {
  // Enumerate all degree-0 families of matrices with dims <= 1 over F_3 and count chain maps.
  for (std::uint64_t s = 0; s < 60; ++s) {
    auto a = share(random_complex(s, 3, 1));
    auto b = share(random_complex(s + 1000, 3, 1));
    std::vector<int> slots;
    for (int n = a->min_degree; n <= a->max_degree(); ++n)
      if (a->dim(n) && b->dim(n)) slots.push_back(n);
    int total = 1;
    for (std::size_t t = 0; t < slots.size(); ++t) total *= 3;
    int count = 0;
    for (int code = 0; code < total; ++code) {
      ChainMap f(a, b, 0);
      int c = code;
      for (int n : slots) {
        f.set_comp(n, Matrix::from_rows(3, {{c % 3}}));
        c /= 3;
      }
      if (is_chain_map(f)) ++count;
    }
    int dim = int(chain_map_space(a, b).size());
    int expect = 1;
    for (int t = 0; t < dim; ++t) expect *= 3;
    EXPECT_EQ(count, expect);
  }
}

TEST(ChainMapSpace, BasisElementsCommute) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    auto a = share(random_complex(s, 3, 3));
    auto b = share(random_complex(s + 7, 3, 3));
    for (const auto& f : chain_map_space(a, b)) EXPECT_TRUE(is_chain_map(f));
  }
}

TEST(Compose, IdentityAndClosure) {
  Rng rng(9);
  for (int t = 0; t < 40; ++t) {
    auto a = share(random_complex(rng, {}, 3));
    auto b = share(random_complex(rng, {}, 3));
    auto c = share(random_complex(rng, {}, 3));
    ChainMap f = random_chain_map(rng, a, b), g = random_chain_map(rng, b, c);
    EXPECT_EQ(compose(ChainMap::identity(b), f), f);
    EXPECT_EQ(compose(f, ChainMap::identity(a)), f);
    EXPECT_TRUE(is_chain_map(compose(g, f)));
    if (!same(*a, *c)) {
      EXPECT_THROW(compose(f, g), std::invalid_argument);
    }
  }
}

TEST(ChainMap, SuspensionOfMapsAndInverse) {
  Rng rng(4);
  for (int t = 0; t < 30; ++t) {
    auto a = share(random_complex(rng, {}, 3));
    ChainMap f = random_chain_map(rng, a, a);
    ChainMap tf = suspend(f);
    EXPECT_TRUE(is_chain_map(tf));
    EXPECT_EQ(desuspend(tf), f);
    if (is_iso(f)) {
      EXPECT_EQ(compose(inverse(f), f), ChainMap::identity(a));
    }
  }
}

TEST(Json, ComplexAndMapRoundTrip) {
  Rng rng(2);
  auto a = share(random_complex(rng, {}, 3));
  auto b = share(random_complex(rng, {}, 3));
  ChainMap f = random_chain_map(rng, a, b);
  EXPECT_TRUE(same(Complex::from_json(a->to_json()), *a));
  EXPECT_EQ(ChainMap::from_json(f.to_json()), f);
}
