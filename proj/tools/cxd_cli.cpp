#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cxd/harness.hpp"
#include "cxd/witt.hpp"

using namespace cxd;
using nlohmann::json;

namespace {

struct SignOptions {
  std::vector<std::string> flips;
  std::vector<std::string> sets;

  void attach(CLI::App* app) {
    app->add_option("--flip", flips, "negate the global sign of a symbol (T 1tens 2tens tp1 tp2 asso c ath 1hom 2hom th1 th2)");
    app->add_option("--set", sets, "override a symbol, e.g. tp1=-1 or ath=-(-1)^{i(i-1)/2}");
  }
  SignAssignment apply(SignAssignment s) const {
    for (const auto& f : flips) s[sym_from_name(f)] = s[sym_from_name(f)].flipped();
    for (const auto& o : sets) apply_override(s, o);
    return s;
  }
  bool any() const { return !flips.empty() || !sets.empty(); }
};

struct RunOptions {
  std::uint64_t seed = 1;
  CheckParams params;
  int a = 1, b = 1;
  std::string out;
  bool json_stdout = false;
  int workers = 0;
  SignOptions signs;

  void attach(CLI::App* app) {
    app->add_option("--seed", seed, "base seed");
    app->add_option("--p", params.p, "field characteristic (odd prime)");
    app->add_option("--max-dim", params.max_dim, "largest dimension in any degree");
    app->add_option("--max-len", params.max_len, "largest number of nonzero degrees");
    app->add_option("--max-set", params.max_set, "largest finite set");
    app->add_option("--trials", params.trials, "trials per diagram");
    app->add_option("--a", a, "sign parameter a of the assignment")->check(CLI::IsMember({-1, 1}));
    app->add_option("--b", b, "sign parameter b of the assignment")->check(CLI::IsMember({-1, 1}));
    app->add_option("--out", out, "write the JSON report here");
    app->add_flag("--json", json_stdout, "print the JSON report instead of the table");
    app->add_option("--workers", workers, "worker threads (default: CXD_WORKERS or all cores)");
    signs.attach(app);
  }
  SignAssignment assignment() const { return signs.apply(default_assignment(a, b)); }
};

void print_reports(const RunSummary& s) {
  for (const auto& r : s.reports) {
    std::printf("%s  %-24s %3d/%-3d %9.1f ms", r.pass() ? "PASS" : "FAIL", r.id.c_str(), r.passed, r.trials, r.millis);
    if (!r.note.empty()) std::printf("  (%s)", r.note.c_str());
    std::printf("\n");
    for (const auto& f : r.failures)
      std::printf("      trial %d seed %llu: %s\n", f.trial, static_cast<unsigned long long>(f.trial_seed), f.detail.c_str());
  }
  int fails = 0;
  for (const auto& r : s.reports) fails += !r.pass();
  std::printf("%s: %zu diagrams, %d failing, %.0f ms on %d workers\n", fails ? "FAIL" : "PASS", s.reports.size(), fails,
              s.millis, s.workers);
}

int emit(const RunSummary& s, const RunOptions& o) {
  json j = s.to_json();
  if (!o.out.empty()) std::ofstream(o.out) << j.dump(2) << "\n";
  if (o.json_stdout)
    std::cout << j.dump(2) << "\n";
  else
    print_reports(s);
  return s.all_pass() ? 0 : 1;
}

int verify_signs(int a, int b, bool all, const SignOptions& so, bool as_json) {
  std::vector<std::pair<int, int>> combos;
  if (all)
    combos = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  else
    combos = {{a, b}};
  json out = json::array();
  bool ok = true;
  auto t0 = std::chrono::steady_clock::now();
  for (auto [ca, cb] : combos) {
    SignAssignment s = so.apply(default_assignment(ca, cb));
    TableReport rep = verify_table(s);
    ok = ok && rep.all_pass();
    json j = rep.to_json();
    j["a"] = ca;
    j["b"] = cb;
    j["signs"] = s.to_json();
    out.push_back(j);
    if (!as_json) {
      std::printf("assignment a=%+d b=%+d\n", ca, cb);
      const auto& table = equation_table();
      for (std::size_t r = 0; r < rep.rows.size(); ++r) {
        const RowReport& row = rep.rows[r];
        std::printf("  %s  %-14s %s", row.pass ? "PASS" : "FAIL", row.id.c_str(), row.reason.c_str());
        if (!row.pass) std::printf("  counterexample %s", row.to_json(table[r].vars)["counterexample"].dump().c_str());
        std::printf("\n");
      }
    }
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (as_json)
    std::cout << json{{"schema", kReportSchema}, {"kind", "verify-signs"}, {"all_pass", ok}, {"millis", ms}, {"assignments", out}}.dump(2)
              << "\n";
  else
    std::printf("%s: sign table, %zu assignment(s), %.1f ms\n", ok ? "PASS" : "FAIL", combos.size(), ms);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of commutative diagrams over finite fields"};
  app.require_subcommand(1);

  RunOptions check_opts;
  std::string id;
  auto* check = app.add_subcommand("check", "run one registry diagram");
  check->add_option("--id", id, "diagram id (see `list`)")->required();
  check_opts.attach(check);

  RunOptions all_opts;
  std::string group;
  auto* check_all = app.add_subcommand("check-all", "run every registry diagram");
  check_all->add_option("--group", group, "only this group: signs monoidal sites duality invertibility witt");
  all_opts.attach(check_all);

  int va = 1, vb = 1;
  bool vjson = false;
  SignOptions vsigns;
  auto* vs = app.add_subcommand("verify-signs", "evaluate the sign compatibility table");
  auto* opt_a = vs->add_option("--a", va, "sign parameter a")->check(CLI::IsMember({-1, 1}));
  auto* opt_b = vs->add_option("--b", vb, "sign parameter b")->check(CLI::IsMember({-1, 1}));
  vs->add_flag("--json", vjson, "JSON output");
  vsigns.attach(vs);

  int wp = 3, wmax = 4;
  bool wjson = false;
  auto* witt = app.add_subcommand("witt", "classify W(F_p) from diagonal forms");
  witt->add_option("--p", wp, "odd prime")->check(CLI::Range(3, 1000));
  witt->add_option("--maxdim", wmax, "largest diagonal form used")->check(CLI::Range(1, 8));
  witt->add_flag("--json", wjson, "JSON output");

  std::string report_path;
  auto* rep = app.add_subcommand("replay", "re-evaluate the failures and verdicts of a saved report");
  rep->add_option("report", report_path, "report JSON")->required()->check(CLI::ExistingFile);

  auto* audit = app.add_subcommand("audit", "compare the registry with the coverage map");
  auto* list = app.add_subcommand("list", "print registry ids");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      if (!find_diagram(id)) {
        std::fprintf(stderr, "unknown diagram id: %s\n", id.c_str());
        return 2;
      }
      return emit(run_all(check_opts.seed, check_opts.params, check_opts.assignment(), {id}, check_opts.workers), check_opts);
    }
    if (*check_all) {
      std::vector<std::string> ids;
      if (!group.empty()) {
        for (const auto& d : registry())
          if (d.group == group) ids.push_back(d.id);
        if (ids.empty()) {
          std::fprintf(stderr, "no diagrams in group %s\n", group.c_str());
          return 2;
        }
      }
      return emit(run_all(all_opts.seed, all_opts.params, all_opts.assignment(), ids, all_opts.workers), all_opts);
    }
    if (*vs) return verify_signs(va, vb, !*opt_a && !*opt_b, vsigns, vjson);
    if (*witt) {
      WittTable t = witt_classify(wp, wmax);
      if (wjson)
        std::cout << t.to_json().dump(2) << "\n";
      else
        std::cout << t.to_string();
      return 0;
    }
    if (*rep) {
      std::ifstream in(report_path);
      json doc = json::parse(in);
      bool ok = true;
      for (const auto& r : replay(doc)) {
        ok = ok && r.reproduced;
        if (r.trial >= 0)
          std::printf("%s  %s trial %d\n      was: %s\n      now: %s\n", r.reproduced ? "REPRODUCED" : "DIVERGED  ", r.id.c_str(),
                      r.trial, r.original.c_str(), r.now.c_str());
        else
          std::printf("%s  %s  %s\n", r.reproduced ? "SAME      " : "DIVERGED  ", r.id.c_str(), r.now.c_str());
      }
      return ok ? 0 : 1;
    }
    if (*audit) {
      AuditResult r = audit_registry();
      std::cout << r.to_json().dump(2) << "\n";
      return r.ok() ? 0 : 1;
    }
    if (*list) {
      for (const auto& d : registry()) std::printf("%-14s %-24s %s\n", d.group.c_str(), d.id.c_str(), d.anchor.c_str());
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
