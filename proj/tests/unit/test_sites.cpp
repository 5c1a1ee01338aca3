#include <gtest/gtest.h>

#include <cctype>

#include "cxd/site_diagrams.hpp"
#include "cxd/sites.hpp"

using namespace cxd;

namespace {

SheafComplex stalks(std::vector<Complex> cs) {
  SheafComplex s;
  s.stalks = std::move(cs);
  return s;
}

}  // namespace

TEST(FiniteMap, FibersAndComposition) {
  FiniteMap f = FiniteMap::make(4, 2, {1, 0, 1, 1});
  EXPECT_EQ(f.fiber(1), (std::vector<int>{0, 2, 3}));
  EXPECT_EQ(f.fiber(0), (std::vector<int>{1}));
  FiniteMap g = FiniteMap::to_point(2);
  FiniteMap h = compose(g, f);
  EXPECT_EQ(h.map, (std::vector<int>(4, 0)));
  EXPECT_THROW(compose(f, f), std::invalid_argument);
  EXPECT_THROW(FiniteMap::make(1, 1, {2}), std::invalid_argument);
  EXPECT_EQ(FiniteMap::from_json(f.to_json()), f);
}

TEST(Pushforward, FiberSumOfDimensions) {
  // Stalks of dims 1 and 2 over a two-point fiber push to a single stalk of dim 3.
  Sheaves s;
  SheafComplex a = stalks({Complex::concentrated(3, 0, 1), Complex::concentrated(3, 0, 2)});
  SheafComplex pa = s.pushforward(FiniteMap::to_point(2), a);
  ASSERT_EQ(pa.size(), 1);
  EXPECT_EQ(pa[0].dim(0), 3);
  EXPECT_EQ(pa[0].total_dim(), 3);
}

TEST(Pushforward, EmptyFiberGivesZero) {
  Sheaves s;
  SheafComplex a = stalks({Complex::concentrated(3, 1, 2)});
  SheafComplex pa = s.pushforward(FiniteMap::make(1, 2, {1}), a);
  EXPECT_EQ(pa[0].total_dim(), 0);
  EXPECT_EQ(pa[1].dim(1), 2);
}

TEST(Sheaves, BaseMismatchThrows) {
  Sheaves s;
  SheafComplex a = s.unit(2);
  EXPECT_THROW(s.pullback(FiniteMap::to_point(3), a), std::invalid_argument);
  EXPECT_THROW(s.tensor(a, s.unit(1)), std::invalid_argument);
}

TEST(ProjectionFormula, QIsInvertibleOnTwoPointFiber) {
  Sheaves s;
  FiniteMap f = FiniteMap::to_point(2);
  SheafComplex a = stalks({Complex::concentrated(3, 0, 1), Complex::concentrated(3, 0, 1)});
  SheafComplex b = stalks({Complex::concentrated(3, 0, 2)});
  SheafMap q = s.q(f, a, b);
  ASSERT_EQ(q.size(), 1);
  EXPECT_EQ(q[0].comp(0).rows(), 4);
  EXPECT_EQ(q[0].comp(0).cols(), 4);
  EXPECT_TRUE(q.is_iso());
}

TEST(BaseChange, CartesianSquaresHaveInvertibleEps) {
  Sheaves s;
  Rng rng(11);
  ComplexBounds cb;
  cb.max_len = 2;
  cb.max_dim = 2;
  for (int t = 0; t < 30; ++t) {
    CommSquare q = random_cartesian_square(rng, 3);
    ASSERT_TRUE(q.cartesian);
    SheafComplex a = random_sheaf(rng, q.g.nsrc(), cb);
    EXPECT_TRUE(s.eps(q, a).is_iso());
    SheafComplex b = random_sheaf(rng, q.f.ntgt(), cb);
    EXPECT_NO_THROW(s.gam(q, b));
    EXPECT_TRUE(base_change(s, q, b).gam.has_value());
  }
}

TEST(BaseChange, EmptyCornerBreaksEpsAndGam) {
  Sheaves s;
  CommSquare q = empty_corner_square();
  EXPECT_FALSE(q.cartesian);
  SheafComplex one = s.unit(1);
  EXPECT_FALSE(s.eps(q, one).is_iso());
  EXPECT_THROW(s.gam(q, one), AssumptionViolated);
  EXPECT_FALSE(base_change(s, q, one).gam.has_value());
}

TEST(BaseChange, NonCommutingSquareRejected) {
  FiniteMap f = FiniteMap::make(1, 2, {0}), g = FiniteMap::make(1, 2, {1});
  FiniteMap id = FiniteMap::identity(1);
  EXPECT_THROW(CommSquare::make(f, g, id, id), std::invalid_argument);
}

TEST(Transforms, RegistryCoversNames) {
  Sheaves s;
  Rng rng(3);
  FiniteMap f = random_finite_map(rng, 3, 2, 2);
  ComplexBounds cb;
  cb.max_len = 2;
  cb.max_dim = 1;
  SiteContext c{{f}, std::nullopt, {random_sheaf(rng, 2, cb), random_sheaf(rng, 2, cb)}};
  EXPECT_EQ(transform(s, "q", c), s.q(f, c.objs[0], c.objs[1]));
  EXPECT_THROW(transform(s, "nope", c), std::invalid_argument);
  EXPECT_FALSE(transform_names().empty());
}

TEST(Json, RoundTrips) {
  Sheaves s;
  Rng rng(4);
  ComplexBounds cb;
  SheafComplex a = random_sheaf(rng, 3, cb);
  EXPECT_TRUE(same(SheafComplex::from_json(a.to_json()), a));
  FiniteMap f = random_finite_map(rng, 3, 3, 2);
  SheafMap e = s.eta(f, random_sheaf(rng, 2, cb));
  EXPECT_EQ(SheafMap::from_json(e.to_json()), e);
  CommSquare q = random_cartesian_square(rng, 3);
  CommSquare r = CommSquare::from_json(q.to_json());
  EXPECT_EQ(r.fbar, q.fbar);
  EXPECT_EQ(r.cartesian, q.cartesian);
}

class SiteDiagramTest : public ::testing::TestWithParam<std::string> {};

TEST_P(SiteDiagramTest, Holds) {
  const SiteDiagramInfo* info = find_site_diagram(GetParam());
  ASSERT_NE(info, nullptr);
  Sheaves s;
  Rng rng(23);
  int trials = info->weight >= 2 ? 6 : 12, nonzero = 0;
  for (int t = 0; t < trials; ++t) {
    SiteContext c = random_site_context(rng, *info, SiteBounds{});
    SheafSides sides = site_diagram(s, info->id, c);
    ASSERT_TRUE(sides.holds()) << info->id << " trial " << t;
    for (int x = 0; x < sides.lhs.size(); ++x)
      if (!sides.lhs[x].is_zero()) {
        ++nonzero;
        break;
      }
  }
  // Guards against caps so small that both legs are always zero.
  EXPECT_GE(nonzero, 2) << info->id;
}

INSTANTIATE_TEST_SUITE_P(Catalogue, SiteDiagramTest, ::testing::ValuesIn([] {
                           std::vector<std::string> ids;
                           for (const auto& d : site_diagram_catalogue()) ids.push_back(d.id);
                           return ids;
                         }()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& ch : s)
                             if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           return s;
                         });

TEST(SiteDiagram, BadInputs) {
  Sheaves s;
  EXPECT_THROW(site_diagram(s, "nope", {}), std::invalid_argument);
  EXPECT_THROW(site_diagram(s, "Happ0", {}), std::invalid_argument);
}
