#include <gtest/gtest.h>

#include "cxd/diagrams.hpp"
#include "cxd/monoidal.hpp"

using namespace cxd;

namespace {

std::vector<Complex> objects(Rng& rng, int n, int max_len, int max_dim) {
  ComplexBounds b;
  b.max_len = max_len;
  b.max_dim = max_dim;
  std::vector<Complex> v;
  for (int t = 0; t < n; ++t) v.push_back(random_complex(rng, b, 3));
  return v;
}

Complex point(int p, int deg) { return Complex::concentrated(p, deg, 1); }

}  // namespace

TEST(Tensor, DimensionsAndSquareZero) {
  Monoidal m;
  Rng rng(1);
  for (int t = 0; t < 60; ++t) {
    auto o = objects(rng, 2, 3, 3);
    Complex ab = m.tensor(o[0], o[1]);
    EXPECT_TRUE(validate(ab));
    if (ab.len() == 0) continue;
    EXPECT_EQ(ab.total_dim(), o[0].total_dim() * o[1].total_dim());
    Complex h = m.hom(o[0], o[1]);
    EXPECT_TRUE(validate(h));
    EXPECT_EQ(h.total_dim(), o[0].total_dim() * o[1].total_dim());
  }
}

TEST(Tensor, UnitIsNeutral) {
  Monoidal m;
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    Complex a = objects(rng, 1, 3, 3)[0];
    EXPECT_TRUE(same(m.tensor(m.unit(), a), a));
    EXPECT_TRUE(same(m.tensor(a, m.unit()), a));
    // [1, A] has the differentials of A up to a sign per degree.
    Complex h = m.hom(m.unit(), a);
    ASSERT_EQ(h.dims, a.dims);
    for (int n = a.min_degree + 1; n <= a.max_degree(); ++n)
      EXPECT_TRUE(h.d(n) == a.d(n) || h.d(n) == -a.d(n));
  }
}

TEST(Hom, SignOnSmallExample) {
  // A = F in degree 1, B = F -> F in degrees 1, 0; [A,B]_0 -> [A,B]_{-1} is post-composition with d^B_1,
  // carrying the second hom sign at (1, 1).
  Monoidal m;
  Complex a = point(3, 1);
  Complex b = Complex::make(3, 0, {1, 1}, {Matrix::from_rows(3, {{1}})});
  Complex h = m.hom(a, b);
  EXPECT_EQ(h.min_degree, -1);
  EXPECT_EQ(h.d(0), Matrix::identity(3, 1).scaled(m.eps(Sym::Hom2, 1, 1)));
}

TEST(Structural, AllCertifiedOnRandomObjects) {
  Monoidal m;
  Rng rng(3);
  for (int t = 0; t < 15; ++t) {
    auto o = objects(rng, 4, 2, 2);
    for (const auto& name : Monoidal::structural_names()) {
      std::size_t n = name == "exch" || name == "dd" ? 4 : name == "assoc" || name == "assoc_inv" ? 3
                      : name.find("unit") != std::string::npos ? 1 : 2;
      std::vector<Complex> args(o.begin(), o.begin() + n);
      EXPECT_NO_THROW(m.structural(name, args)) << name;
    }
  }
  EXPECT_THROW(m.structural("nope", {}), std::invalid_argument);
}

TEST(Structural, InversesAreInverse) {
  Monoidal m;
  Rng rng(4);
  for (int t = 0; t < 15; ++t) {
    auto o = objects(rng, 3, 3, 2);
    ChainMap f = m.assoc(o[0], o[1], o[2]);
    EXPECT_EQ(compose(m.assoc_inv(o[0], o[1], o[2]), f), identity_of(f.source()));
    ChainMap g = m.th1(o[0], o[1]);
    EXPECT_EQ(compose(g, m.th1_inv(o[0], o[1])), identity_of(g.target()));
    ChainMap h = m.tp2(o[0], o[1]);
    EXPECT_EQ(compose(h, m.tp2_inv(o[0], o[1])), identity_of(h.target()));
  }
}

TEST(Structural, MutatedSignIsCaught) {
  SignAssignment s = default_assignment();
  s[Sym::Tp1] = s[Sym::Tp1].flipped();
  s[Sym::Tp1].linear[1] ^= 1;  // now (-1)^{i+j}-free in j: breaks the chain condition
  Monoidal m = Monoidal::unchecked(s);
  Complex a = Complex::make(3, 0, {1, 1}, {Matrix::from_rows(3, {{1}})});
  bool threw = false;
  try {
    m.tp1(a, a);
  } catch (const std::logic_error& e) {
    threw = true;
    EXPECT_NE(std::string(e.what()).find("left shift map"), std::string::npos);
  }
  EXPECT_TRUE(threw);
  EXPECT_THROW(Monoidal{s}, std::invalid_argument);
}

class DiagramTest : public ::testing::TestWithParam<std::string> {};

TEST_P(DiagramTest, HoldsWithDefaultSigns) {
  const std::string id = GetParam();
  const DiagramInfo& info = diagram_info(id);
  Monoidal m;
  Rng rng(17);
  bool heavy = id == "dd_literal" || id == "pentagon" || id[0] == 'D' || id == "P.shift";
  int trials = heavy ? 8 : 25;
  for (int t = 0; t < trials; ++t) {
    std::vector<Complex> o;
    if (id == "bid_scalar") {
      o = {point(3, int(rng() % 7) - 3), point(3, int(rng() % 7) - 3)};
    } else {
      o = objects(rng, info.arity, heavy ? 2 : 3, 2);
    }
    Sides s = diagram(m, id, o, rng);
    ASSERT_TRUE(s.holds()) << id << " trial " << t;
  }
}

INSTANTIATE_TEST_SUITE_P(Catalogue, DiagramTest, ::testing::ValuesIn([] {
                           std::vector<std::string> ids;
                           for (const auto& d : diagram_catalogue()) ids.push_back(d.id);
                           return ids;
                         }()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& ch : s)
                             if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           return s;
                         });

TEST(Diagram, ArityAndIdErrors) {
  Monoidal m;
  Rng rng(0);
  EXPECT_THROW(diagram(m, "D4", {m.unit()}, rng), std::invalid_argument);
  EXPECT_THROW(diagram(m, "D99", {}, rng), std::invalid_argument);
}

TEST(Adjunction, MateOfIdentityIsIdentity) {
  // With H = H' = Id and both adjunctions equal, the mate of the identity is the identity.
  Monoidal m;
  Rng rng(5);
  auto o = objects(rng, 2, 2, 2);
  auto adj = m.tensor_hom_adjunction(o[0]);
  auto id = identity_functor<Complex, ChainMap>();
  NatTransT<Complex, ChainMap> a = [&](const Complex& x) { return identity_of(adj.left.obj(x)); };
  auto b = mate(a, adj, adj, id, id);
  Complex y = o[1];
  EXPECT_EQ(b(y), identity_of(adj.right.obj(y)));
  auto back = mate_back(b, adj, adj, id, id);
  EXPECT_EQ(back(y), a(y));
}
