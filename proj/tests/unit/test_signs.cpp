#include <gtest/gtest.h>

#include "cxd/signs.hpp"

using namespace cxd;

TEST(SignExpr, Evaluation) {
  SignAssignment s = default_assignment();
  EXPECT_EQ(s.eps(Sym::C, 1, 1), -1);
  EXPECT_EQ(s.eps(Sym::Ath, 0, 0), 1);
  EXPECT_EQ(s.eps(Sym::Ath, 2, 0), -1);
  EXPECT_EQ(s.eps(Sym::Ath, 3, 0), -1);
  EXPECT_EQ(s.eps(Sym::Ath, -1, 0), -1);  // (-1)(-2)/2 = 1
  for (Sym x : kAllSyms) EXPECT_EQ(s[x].eval(0, 0, 0, 0), s[x].global);
}

TEST(SignExpr, ParseAndPrintRoundTrip) {
  for (const char* t : {"1", "-1", "(-1)^{i}", "-(-1)^{i+j+1}", "(-1)^{ij}", "(-1)^{i(i-1)/2}", "-(-1)^{j(j-1)/2+ik+l}"}) {
    SignExpr e = SignExpr::parse(t);
    EXPECT_EQ(SignExpr::parse(e.to_string()), e) << t;
  }
  EXPECT_EQ(SignExpr::parse("(-1)^{i*i}"), SignExpr::parse("(-1)^i"));
  EXPECT_EQ(SignExpr::parse("(-1)^{2}"), SignExpr::one());
  EXPECT_EQ(SignExpr::parse("(-1)^{i+j+1}").to_string(), "-(-1)^{i+j}");
  EXPECT_THROW(SignExpr::parse("(-1)^{x}"), std::invalid_argument);
  EXPECT_THROW(SignExpr::parse("2"), std::invalid_argument);
  EXPECT_THROW(SignExpr::parse("(-1)^{i(j-1)/2}"), std::invalid_argument);
}

TEST(DefaultAssignment, ParameterFlipsTouchOnlyDocumentedSymbols) {
  SignAssignment base = default_assignment(1, 1);
  SignAssignment a = default_assignment(-1, 1);
  SignAssignment b = default_assignment(1, -1);
  for (Sym x : kAllSyms) {
    bool in_a = x == Sym::Tp1 || x == Sym::Tp2 || x == Sym::Th2;
    EXPECT_EQ(a[x] == base[x], !in_a) << sym_name(x);
    EXPECT_EQ(b[x] == base[x], x != Sym::Ath) << sym_name(x);
  }
  EXPECT_EQ(base[Sym::Hom2].to_string(), "-(-1)^{i+j}");
  EXPECT_THROW(default_assignment(0, 1), std::invalid_argument);
}

TEST(Table, HasTwentyTwoRows) {
  EXPECT_EQ(equation_table().size(), 22u);
  EXPECT_EQ(equation_table()[13].id, "Table2.row14");
  EXPECT_EQ(equation_table().back().id, "Table2.bid");
}

TEST(Table, DefaultAssignmentPassesEveryRow) {
  TableReport r = verify_table(default_assignment(1, 1));
  for (const auto& row : r.rows) EXPECT_TRUE(row.pass) << row.id;
}

TEST(Table, FlippingAthKeepsEveryRow) {
  EXPECT_TRUE(verify_table(default_assignment(1, -1)).all_pass());
}

// With tp1 = -1 constant, the three tp1 factors of row 15 leave a residual -1 that no
// associator can absorb; the same happens for tp2 in row 17.
TEST(Table, FlippingTheShiftParameterBreaksRows15And17) {
  for (int b : {1, -1}) {
    TableReport r = verify_table(default_assignment(-1, b));
    for (const auto& row : r.rows) {
      bool expected_fail = row.row == 15 || row.row == 17;
      EXPECT_EQ(row.pass, !expected_fail) << row.id;
    }
  }
}

TEST(Table, SymmetryForcedToPlusOneBreaksRow6) {
  SignAssignment s = default_assignment();
  s[Sym::C] = SignExpr::one();
  RowReport r = verify_equation(equation_table()[5], s);
  EXPECT_FALSE(r.pass);
  // Residual (-1)^j: the counterexample has odd j.
  EXPECT_NE(r.counterexample[1] % 2, 0);
}

TEST(Table, BothShiftSignsPlusOneBreakRow14) {
  SignAssignment s = default_assignment();
  s[Sym::Tp1] = SignExpr::one();
  s[Sym::Tp2] = SignExpr::one();
  EXPECT_FALSE(verify_equation(equation_table()[13], s).pass);
}

TEST(Table, WindowAgreesWithWiderWindow) {
  std::vector<SignAssignment> probes = {default_assignment(1, 1), default_assignment(-1, 1), default_assignment(1, -1)};
  for (Sym x : kAllSyms) {
    SignAssignment s = default_assignment();
    s[x] = s[x].flipped();
    probes.push_back(s);
  }
  SignAssignment odd = default_assignment();
  odd[Sym::Asso] = SignExpr::parse("(-1)^{i(i-1)/2+jk}");
  probes.push_back(odd);
  for (const auto& s : probes) {
    TableReport narrow = verify_table(s, -4, 3), wide = verify_table(s, -8, 7);
    for (std::size_t r = 0; r < narrow.rows.size(); ++r) EXPECT_EQ(narrow.rows[r].pass, wide.rows[r].pass);
  }
}

TEST(Table, GlobalFlipsInvisibleToTheTable) {
  for (Sym x : kAllSyms) {
    SignAssignment s = default_assignment();
    s[x] = s[x].flipped();
    // A global flip of the adjunction sign is exactly the b parameter; th1 and th2 occur in no row.
    bool invisible = x == Sym::Ath || x == Sym::Th1 || x == Sym::Th2;
    EXPECT_EQ(verify_table(s).all_pass(), invisible) << sym_name(x);
  }
}

TEST(Search, AbFamilyYieldsOnlyTheUnshiftedHalf) {
  auto hits = search(ab_family());
  ASSERT_EQ(hits.size(), 2u);
  EXPECT_EQ(hits[0].choice, (std::vector<std::string>{"a=+1", "b=+1"}));
  EXPECT_EQ(hits[1].choice, (std::vector<std::string>{"a=+1", "b=-1"}));
  EXPECT_EQ(hits[1].assignment, default_assignment(1, -1));
}

TEST(Search, AssociatorFlipFamily) {
  Family f;
  f.base = default_assignment();
  f.knobs.push_back({"asso", {{"+1", {}}, {"-1", {{Sym::Asso, SignExpr::minus_one()}}}}});
  auto hits = search(f);
  // A constant associator sign cancels in rows 2-4 and 15-17 but not in the pentagon or hexagon.
  ASSERT_EQ(hits.size(), 1u);
  SignAssignment s = default_assignment();
  s[Sym::Asso] = SignExpr::minus_one();
  TableReport r = verify_table(s);
  for (const auto& row : r.rows) EXPECT_EQ(row.pass, row.row != 5 && row.row != 9) << row.id;
}

TEST(Search, EmptyFamilyAndCap) {
  EXPECT_TRUE(search(Family{}).empty());
  Family big;
  big.base = default_assignment();
  for (int k = 0; k < 20; ++k) big.knobs.push_back({"k", {{"x", {}}, {"y", {}}}});
  EXPECT_THROW(search(big, 1000), std::length_error);
}

TEST(Overrides, ApplyAndJson) {
  SignAssignment s = default_assignment();
  apply_override(s, "tp1=-1");
  EXPECT_EQ(s[Sym::Tp1], SignExpr::minus_one());
  EXPECT_THROW(apply_override(s, "nope=1"), std::invalid_argument);
  EXPECT_EQ(SignAssignment::from_json(s.to_json()), s);
}
