#include <gtest/gtest.h>

#include <set>

#include "cxd/harness.hpp"

using namespace cxd;

namespace {

CheckParams few(int trials = 3) {
  CheckParams p;
  p.trials = trials;
  return p;
}

// Report without timings, for comparing runs.
nlohmann::json stable(const RunSummary& s) {
  nlohmann::json j = s.to_json();
  j.erase("millis");
  j.erase("workers");
  for (auto& d : j["diagrams"]) d.erase("millis");
  return j;
}

}  // namespace

TEST(Registry, AuditIsClean) {
  AuditResult r = audit_registry();
  EXPECT_TRUE(r.ok()) << r.to_json().dump();
}

TEST(Registry, IdsAreUnique) {
  std::set<std::string> seen;
  for (const auto& d : registry()) EXPECT_TRUE(seen.insert(d.id).second) << d.id;
  EXPECT_EQ(find_diagram("no-such-id"), nullptr);
}

TEST(Runner, UnknownIdThrows) { EXPECT_THROW(run_diagram("no-such-id", 1, few()), std::invalid_argument); }

TEST(Runner, ZeroTrialsIsVacuousPass) {
  CheckReport r = run_diagram("EQ1", 1, few(0));
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.trials, 0);
  EXPECT_EQ(r.note, "no trials");
}

TEST(Runner, EqOnePasses) {
  CheckReport r = run_diagram("EQ1", 5, few(20));
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.passed, 20);
}

TEST(Runner, TrialSeedsDependOnEveryInput) {
  EXPECT_NE(trial_seed(1, "EQ1", 0), trial_seed(2, "EQ1", 0));
  EXPECT_NE(trial_seed(1, "EQ1", 0), trial_seed(1, "D4", 0));
  EXPECT_NE(trial_seed(1, "EQ1", 0), trial_seed(1, "EQ1", 1));
  EXPECT_EQ(trial_seed(1, "EQ1", 3), trial_seed(1, "EQ1", 3));
}

TEST(Runner, DeterministicAcrossWorkerCounts) {
  std::vector<std::string> ids = {"D4", "Happ1", "P.pullback", "W.transfer", "Table2.row14"};
  SignAssignment bad = default_assignment();
  bad[Sym::Th2] = bad[Sym::Th2].flipped();
  RunSummary a = run_all(11, few(4), bad, ids, 1);
  RunSummary b = run_all(11, few(4), bad, ids, 3);
  EXPECT_EQ(stable(a), stable(b));
  EXPECT_FALSE(a.all_pass());
}

TEST(Runner, EveryGroupPassesWithDefaultSigns) {
  RunSummary s = run_all(3, few(2));
  for (const auto& r : s.reports) EXPECT_TRUE(r.pass()) << r.id << " " << r.to_json().dump();
}

TEST(Runner, CorruptedShiftSignsFailRowFourteen) {
  SignAssignment s = default_assignment();
  apply_override(s, "tp1=1");
  apply_override(s, "tp2=1");
  CheckReport r = run_diagram("Table2.row14", 1, few(), s);
  ASSERT_FALSE(r.pass());
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_NE(r.failures[0].detail.find("counterexample"), std::string::npos);
}

TEST(Replay, ReproducesRecordedFailures) {
  SignAssignment s = default_assignment();
  s[Sym::Th1] = s[Sym::Th1].flipped();
  RunSummary run = run_all(9, few(4), s, {"D8"});
  ASSERT_FALSE(run.all_pass());
  nlohmann::json doc = nlohmann::json::parse(run.to_json().dump());
  auto results = replay(doc);
  ASSERT_FALSE(results.empty());
  for (const auto& r : results) EXPECT_TRUE(r.reproduced) << r.id << " " << r.now;

  // The recorded instance fails on its own, through the public entry point.
  const auto& f = run.reports[0].failures[0];
  EXPECT_EQ(evaluate_instance("D8", f.instance, run.params, s).status, TrialStatus::Fail);
  EXPECT_EQ(evaluate_instance("D8", f.instance, run.params, default_assignment()).status, TrialStatus::Pass);
}

TEST(Replay, TamperedInstanceDiverges) {
  SignAssignment s = default_assignment();
  s[Sym::Th1] = s[Sym::Th1].flipped();
  nlohmann::json doc = run_all(9, few(4), s, {"D8"}).to_json();
  doc["diagrams"][0]["failures"][0]["instance"]["aux"] = 12345;
  bool diverged = false;
  for (const auto& r : replay(doc)) diverged |= !r.reproduced;
  EXPECT_TRUE(diverged);
}

TEST(Replay, RejectsOtherSchemas) {
  nlohmann::json doc = run_all(1, few(1), default_assignment(), {"EQ1"}).to_json();
  doc["schema"] = "something-else/9";
  EXPECT_THROW(replay(doc), std::invalid_argument);
}

TEST(Report, JsonRoundTrip) {
  RunSummary s = run_all(4, few(2), default_assignment(), {"D12", "M.q"});
  RunSummary t = RunSummary::from_json(s.to_json());
  EXPECT_EQ(t.to_json(), s.to_json());
  EXPECT_EQ(s.to_json()["schema"], kReportSchema);
}

TEST(Mutation, EverySymbolFlipIsDetected) {
  // Cheap witnesses: the sign table, then the diagrams that see the shift adjunction signs
  // and the bidual sign.
  std::vector<std::string> witnesses;
  for (const auto& d : registry())
    if (d.group == "signs") witnesses.push_back(d.id);
  for (const char* id : {"D4", "D5", "D8", "D9", "MON.P.shift", "W.product"}) witnesses.push_back(id);
  for (Sym x : kAllSyms) {
    SignAssignment s = default_assignment();
    s[x] = s[x].flipped();
    RunSummary r = run_all(2, few(6), s, witnesses);
    EXPECT_FALSE(r.all_pass()) << sym_name(x);
  }
}

TEST(Workers, EnvironmentOverride) {
  setenv("CXD_WORKERS", "3", 1);
  EXPECT_EQ(worker_count(), 3);
  setenv("CXD_WORKERS", "zero", 1);
  EXPECT_GE(worker_count(), 1);
  unsetenv("CXD_WORKERS");
}
