#include <gtest/gtest.h>

#include "cxd/duality.hpp"
#include "cxd/site_diagrams.hpp"

using namespace cxd;

namespace {

ComplexBounds small() {
  ComplexBounds b;
  b.max_len = 2;
  b.max_dim = 2;
  return b;
}

Matrix sym_matrix(Rng& rng, int p, int n) {
  Matrix m = random_matrix(rng, p, n, n);
  return m + m.transpose();
}

Matrix nondegenerate_sym(Rng& rng, int p, int n) {
  for (;;) {
    Matrix m = sym_matrix(rng, p, n);
    if (is_invertible(m)) return m;
  }
}

}  // namespace

TEST(Duality, UnitDualityIsLinearDualWithPlusSign) {
  Sheaves s;
  Duality d = make_duality(s, {s.unit(1)});
  SheafComplex a;
  a.stalks = {Complex::concentrated(3, 0, 3)};
  Objs da = d.D({a});
  EXPECT_EQ(da[0][0].dim(0), 3);
  EXPECT_EQ(d.bid({a})[0][0].comp(0), Matrix::identity(3, 3));
}

TEST(Duality, EqOneOnRandomObjectsAndAnyK) {
  Sheaves s;
  Rng rng(1);
  for (int t = 0; t < 40; ++t) {
    int n = int(rng() % 3) + 1;
    Duality d(s, {random_sheaf(rng, n, small())});
    Objs a{random_sheaf(rng, n, small())};
    EXPECT_TRUE(eq1_sides(d, a).holds());
    EXPECT_TRUE(duality_triangle_left(d, a).holds());
    EXPECT_TRUE(duality_triangle_right(d, a).holds());
  }
}

TEST(Duality, StrongForDualizingK) {
  Sheaves s;
  Rng rng(2);
  for (int t = 0; t < 40; ++t) {
    int n = int(rng() % 3) + 1;
    Duality d = make_duality(s, {random_dualizing(rng, n)});
    EXPECT_TRUE(is_strong_at(d, {random_sheaf(rng, n, small())}));
  }
  // A two-dimensional K is not dualizing: the bidual of the unit is 1 -> [[1,K],K], of dimension 4.
  SheafComplex k;
  k.stalks = {Complex::concentrated(3, 0, 2)};
  Duality d(s, {k});
  EXPECT_FALSE(is_strong_at(d, {s.unit(1)}));
}

TEST(DP, IdentityAndComposition) {
  Sheaves s;
  Rng rng(3);
  Duality d = make_duality(s, {random_dualizing(rng, 2)});
  DPFunctor id = identity_dp(d);
  Objs a{random_sheaf(rng, 2, small())};
  EXPECT_TRUE(check_dp(id, a));
  FiniteMap f = random_finite_map(rng, 3, 3, 2);
  DPFunctor pf = pullback_dp(s, f, d.K()[0]);
  DPFunctor c = compose_dp(pf, id);
  EXPECT_EQ(c.phi(a), pf.phi(a));
  EXPECT_EQ(compose_dp(identity_dp(pf.tgt), pf).phi(a), pf.phi(a));
  EXPECT_THROW(compose_dp(pf, pf), std::invalid_argument);
}

TEST(DP, PullbackPushforwardProduct) {
  Sheaves s;
  Rng rng(4);
  for (int t = 0; t < 30; ++t) {
    FiniteMap f = random_finite_map(rng, 3);
    SheafComplex k = random_dualizing(rng, f.ntgt()), m = random_dualizing(rng, f.ntgt());
    EXPECT_TRUE(check_dp(pullback_dp(s, f, k), {random_sheaf(rng, f.ntgt(), small())}));
    EXPECT_TRUE(check_dp(pushforward_dp(s, f, k), {random_sheaf(rng, f.nsrc(), small())}));
    EXPECT_TRUE(check_dp(product_dp(s, k, m), {random_sheaf(rng, f.ntgt(), small()), random_sheaf(rng, f.ntgt(), small())}));
  }
}

TEST(DP, IotaRespectsComposition) {
  Sheaves s;
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    int n = int(rng() % 3) + 1;
    SheafComplex k = random_dualizing(rng, n, 3, 0, 0);
    auto scalar = [&](const SheafComplex& src) {
      std::vector<ChainMap> v;
      for (const auto& c : src.stalks) v.push_back(random_chain_map(rng, share(c), share(c)));
      return SheafMap(3, v);
    };
    SheafMap iota = scalar(k), kappa = scalar(k);
    Duality d(s, {k});
    DPFunctor a = I_iota(d, {iota});
    DPFunctor b = I_iota(a.tgt, {kappa});
    DPFunctor ab = I_iota(d, {compose(kappa, iota)});
    Objs x{random_sheaf(rng, n, small())};
    EXPECT_EQ(compose_dp(b, a).phi(x), ab.phi(x));
    EXPECT_EQ(I_iota(d, {identity_of(k)}).phi(x), identity_dp(d).phi(x));
  }
}

TEST(DPMorphism, AllCasesHold) {
  Sheaves s;
  Rng rng(6);
  for (int t = 0; t < 12; ++t) {
    FiniteMap f = random_finite_map(rng, 2), g = random_finite_map(rng, 2, f.ntgt());
    SheafComplex kz = random_dualizing(rng, g.ntgt()), ky = random_dualizing(rng, f.ntgt()),
                 my = random_dualizing(rng, f.ntgt());
    CommSquare sq = random_cartesian_square(rng, 2);
    SheafComplex kq = random_dualizing(rng, sq.f.ntgt());
    std::vector<DPMorphismCase> cases = {ea_case(s, g, f, kz), eb_case(s, g, f, kz), eps_case(s, sq, kq),
                                         fp_case(s, f, ky, my), q_case(s, f, ky, my)};
    for (const auto& c : cases) {
      Objs a;
      for (int n : c.object_bases) a.push_back(random_sheaf(rng, n, small()));
      EXPECT_TRUE(check_dp(c.F, a)) << c.name;
      EXPECT_TRUE(check_dp(c.G, a)) << c.name;
      EXPECT_TRUE(check_dp_morphism(c.rho, c.F, c.G, a)) << c.name;
    }
  }
}

TEST(Forms, SymmetricExactlyWhenGramIsSymmetric) {
  Sheaves s;
  Rng rng(7);
  Duality d(s, {s.unit(1)});
  for (int t = 0; t < 20; ++t) {
    int n = int(rng() % 3) + 1;
    Matrix g = random_matrix(rng, 3, n, n);
    EXPECT_EQ(is_symmetric(d, form_from_grams(s, {g})), g == g.transpose());
  }
}

TEST(Forms, IdentityTransferIsIdentity) {
  Sheaves s;
  Rng rng(8);
  SymmetricForm f = form_from_grams(s, {nondegenerate_sym(rng, 3, 2)});
  SymmetricForm g = transfer_form(identity_dp(Duality(s, {s.unit(1)})), f);
  EXPECT_EQ(g.psi, f.psi);
}

TEST(Forms, PushforwardToPointIsOrthogonalSum) {
  Sheaves s;
  Rng rng(9);
  FiniteMap f = FiniteMap::to_point(2);
  Matrix g1 = nondegenerate_sym(rng, 3, 1), g2 = nondegenerate_sym(rng, 3, 2);
  SymmetricForm out = transfer_form(pushforward_dp(s, f, s.unit(1)), form_from_grams(s, {g1, g2}));
  EXPECT_EQ(grams_of(out)[0], block_direct_sum({g1, g2}, 3));
}

TEST(Forms, ProductIsKroneckerUpToReordering) {
  Sheaves s;
  Rng rng(10);
  for (int t = 0; t < 10; ++t) {
    Matrix g1 = nondegenerate_sym(rng, 3, int(rng() % 2) + 1), g2 = nondegenerate_sym(rng, 3, int(rng() % 2) + 1);
    SymmetricForm a = form_from_grams(s, {g1}), b = form_from_grams(s, {g2});
    SymmetricForm pair{{a.A[0], b.A[0]}, {a.psi[0], b.psi[0]}};
    DPFunctor prod = compose_dp(I_iota(Duality(s, {s.tensor(s.unit(1), s.unit(1))}), {s.lunit(s.unit(1))}),
                                product_dp(s, s.unit(1), s.unit(1)));
    SymmetricForm out = transfer_form(prod, pair);
    EXPECT_TRUE(is_symmetric(prod.tgt, out));
    EXPECT_EQ(grams_of(out)[0], kronecker(g1, g2));
  }
}

TEST(Forms, NonSymmetricInputRejected) {
  Sheaves s;
  SymmetricForm f = form_from_grams(s, {Matrix::from_rows(3, {{0, 1}, {0, 0}})});
  EXPECT_THROW(transfer_form(identity_dp(Duality(s, {s.unit(1)})), f), std::invalid_argument);
}
