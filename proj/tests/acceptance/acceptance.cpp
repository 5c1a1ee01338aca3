// One PASS/FAIL line per acceptance criterion, each against its wall-clock budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <string>
#include <thread>

#include "cxd/harness.hpp"
#include "cxd/witt.hpp"

using namespace cxd;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

CheckParams with_trials(int n) {
  CheckParams p;
  p.trials = n;
  return p;
}

// Runs the ids and reports the first failing one.
Verdict registry_run(const std::vector<std::string>& ids, int trials, std::uint64_t seed = 20240601) {
  RunSummary s = run_all(seed, with_trials(trials), default_assignment(), ids);
  Verdict v;
  int n = 0;
  for (const auto& r : s.reports) {
    n += r.passed;
    if (!r.pass() && v.ok) {
      v.ok = false;
      v.detail = r.id + " failed " + std::to_string(r.failed) + "/" + std::to_string(r.trials) +
                 (r.failures.empty() ? "" : ": " + r.failures[0].detail);
    }
    if (r.skipped > 0 && v.ok) {
      v.ok = false;
      v.detail = r.id + " skipped " + std::to_string(r.skipped) + " trials: " + r.note;
    }
  }
  if (v.ok) v.detail = std::to_string(ids.size()) + " checks, " + std::to_string(n) + " passing trials";
  return v;
}

Verdict sign_table() {
  Verdict v;
  int passing = 0;
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) {
    TableReport r = verify_table(default_assignment(a, b));
    if (r.all_pass()) {
      ++passing;
      continue;
    }
    v.ok = false;
    for (const auto& row : r.rows)
      if (!row.pass) v.detail += " (a,b)=(" + std::to_string(a) + "," + std::to_string(b) + "):" + row.id;
  }
  v.detail = std::to_string(passing) + "/4 assignments satisfy all 22 rows" + (v.ok ? "" : ";" + v.detail);
  return v;
}

Verdict full_registry() {
  RunSummary s = run_all(1, CheckParams{}, default_assignment());
  Verdict v;
  int fails = 0;
  for (const auto& r : s.reports)
    if (!r.pass()) {
      ++fails;
      v.detail += " " + r.id;
    }
  AuditResult a = audit_registry();
  v.ok = fails == 0 && a.ok();
  v.detail = std::to_string(s.reports.size()) + " diagrams, " + std::to_string(fails) + " failing" + v.detail +
             (a.ok() ? ", coverage audit clean" : ", coverage audit drift " + a.to_json().dump());
  return v;
}

std::vector<Matrix> all_forms(int p, int maxdim) {
  std::vector<Matrix> out;
  for (int n = 1; n <= maxdim; ++n) {
    int total = 1;
    for (int i = 0; i < n * n; ++i) total *= p;
    for (int code = 0; code < total; ++code) {
      Matrix m(p, n, n);
      int c = code;
      for (int i = 0; i < n * n; ++i, c /= p) m.set(i / n, i % n, Elem(c % p));
      if (m == m.transpose() && is_invertible(m)) out.push_back(m);
    }
  }
  return out;
}

// Every x on |X| in {1, 2} and every y, each form of dimension <= 2 over F_3, split across workers.
Verdict projection_exhaustive() {
  std::vector<Matrix> forms = all_forms(3, 2);
  std::vector<std::pair<std::vector<Matrix>, Matrix>> cases;
  for (const auto& y : forms) {
    for (const auto& a : forms) {
      cases.push_back({{a}, y});
      for (const auto& b : forms) cases.push_back({{a, b}, y});
    }
  }
  int workers = worker_count();
  std::vector<std::future<std::pair<int, std::string>>> parts;
  for (int w = 0; w < workers; ++w)
    parts.push_back(std::async(std::launch::async, [&, w] {
      Sheaves s;
      int bad = 0;
      std::string first;
      for (std::size_t i = std::size_t(w); i < cases.size(); i += std::size_t(workers)) {
        auto [l, r] = projection_formula_sides(s, FiniteMap::to_point(int(cases[i].first.size())), cases[i].first, cases[i].second);
        if (l != r && bad++ == 0) first = l.label() + " vs " + r.label();
      }
      return std::pair{bad, first};
    }));
  Verdict v;
  int bad = 0;
  for (auto& f : parts) {
    auto [b, first] = f.get();
    bad += b;
    if (b && v.detail.empty()) v.detail = first;
  }
  v.ok = bad == 0;
  v.detail = std::to_string(cases.size()) + " projection cases, " + std::to_string(bad) + " failing" +
             (v.detail.empty() ? "" : ": " + v.detail);
  return v;
}

Verdict witt() {
  Verdict v;
  std::string d;
  WittTable t3 = witt_classify(3, 4), t5 = witt_classify(5, 4);
  WittClass one = witt_reduce(Matrix::identity(3, 1));
  int one_order = 0;
  for (std::size_t i = 0; i < t3.classes.size(); ++i)
    if (t3.classes[i] == one) one_order = t3.order[i];
  bool tables = t3.classes.size() == 4 && one_order == 4 && t5.classes.size() == 4 && t5.exponent() == 2;
  d = "|W(F_3)|=" + std::to_string(t3.classes.size()) + " ord<1>=" + std::to_string(one_order) +
      ", |W(F_5)|=" + std::to_string(t5.classes.size()) + " exp=" + std::to_string(t5.exponent());
  Verdict r = registry_run({"W.F3", "W.F5", "W.transfer", "W.product"}, 300);
  Verdict pf = projection_exhaustive();
  v.ok = tables && r.ok && pf.ok;
  v.detail = d + "; " + r.detail + "; " + pf.detail;
  return v;
}

// Flip each symbol; look for a failure in the sign table, then the monoidal diagrams, then the
// rest of the registry, and replay the first failing report.
Verdict mutation() {
  Verdict v;
  std::vector<std::vector<std::string>> stages(3);
  for (const auto& d : registry()) stages[d.group == "signs" ? 0 : d.group == "monoidal" ? 1 : 2].push_back(d.id);
  std::string found;
  for (Sym x : kAllSyms) {
    SignAssignment s = default_assignment();
    s[x] = s[x].flipped();
    std::string hit;
    for (const auto& ids : stages) {
      RunSummary r = run_all(77, with_trials(10), s, ids);
      if (r.all_pass()) continue;
      // Keep only failing reports; replay must reproduce every recorded counterexample.
      RunSummary failing = r;
      failing.reports.clear();
      for (const auto& rep : r.reports)
        if (!rep.pass()) failing.reports.push_back(rep);
      bool reproduced = true;
      for (const auto& rr : replay(failing.to_json())) reproduced = reproduced && rr.reproduced;
      hit = failing.reports[0].id + (reproduced ? "" : " (replay diverged)");
      if (!reproduced) v.ok = false;
      break;
    }
    if (hit.empty()) {
      v.ok = false;
      hit = "undetected";
    }
    found += " " + sym_name(x) + "->" + hit;
  }
  v.detail = "flips:" + found;
  return v;
}

struct Criterion {
  int n;
  const char* what;
  double budget_s;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  std::vector<std::string> triangles = {"MON.triangle_l",    "MON.triangle_r",    "ADJ.pull_push.l", "ADJ.pull_push.r",
                                        "ADJ.push_shriek.l", "ADJ.push_shriek.r", "DUAL.triangle_l", "DUAL.triangle_r",
                                        "EQ1"};
  std::vector<Criterion> cs = {
      {1, "sign table for all four (a,b)", 1, sign_table},
      {2, "tensor and hom closure on 1000 pairs", 5, [] { return registry_run({"VALID.tensor_hom"}, 1000); }},
      {3, "tp1/tp2 square anticommutes on 200 instances", 5, [] { return registry_run({"MON.row14"}, 200); }},
      {4, "adjunction triangles and EQ1 on 200 instances", 30, [&] { return registry_run(triangles, 200); }},
      {5, "mate cross-checks on 100 instances", 30,
       [] { return registry_run({"X.fh_mate", "X.fg_mate", "X.q_fg", "X.qh_ff", "X.rr_sh"}, 100); }},
      {6, "check-all with defaults", 60, full_registry},
      {7, "invertibility ledger", 10,
       [] { return registry_run({"INV.bid", "INV.q", "INV.eps_cartesian", "INV.eps_counterexample"}, 200); }},
      {8, "Witt oracle", 30, witt},
      {9, "mutation sensitivity with replay", 60, mutation},
  };
  int failures = 0;
  for (const auto& c : cs) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = s < c.budget_s;
    bool ok = v.ok && in_time;
    failures += !ok;
    std::printf("%s  criterion %d  %-46s %7.2fs / %4.0fs  %s%s\n", ok ? "PASS" : "FAIL", c.n, c.what, s, c.budget_s,
                v.detail.c_str(), in_time ? "" : " [over budget]");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failing\n", failures, cs.size());
  return failures ? 1 : 0;
}
