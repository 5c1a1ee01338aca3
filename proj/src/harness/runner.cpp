#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "cxd/harness.hpp"

namespace cxd {

using nlohmann::json;

namespace {

constexpr std::size_t kKeptFailures = 3;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

const char* status_name(TrialStatus s) {
  switch (s) {
    case TrialStatus::Pass: return "pass";
    case TrialStatus::Fail: return "fail";
    default: return "skipped";
  }
}

struct TrialResult {
  json instance;
  TrialOutcome outcome;
  double millis = 0;
};

TrialResult run_trial(const DiagramSpec& d, const CheckContext& ctx, const CheckParams& params, std::uint64_t seed, int t) {
  TrialResult r;
  auto t0 = std::chrono::steady_clock::now();
  try {
    Rng rng(trial_seed(seed, d.id, t));
    r.instance = d.generate(rng, params);
    r.outcome = d.evaluate(ctx, r.instance);
  } catch (const std::exception& e) {
    r.outcome = {TrialStatus::Fail, std::string("trial threw: ") + e.what()};
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

int trials_for(const DiagramSpec& d, const CheckParams& p) { return d.exhaustive ? std::min(p.trials, 1) : p.trials; }

CheckReport merge(const DiagramSpec& d, std::uint64_t seed, std::vector<TrialResult>& rs) {
  CheckReport r;
  r.id = d.id;
  r.group = d.group;
  r.seed = seed;
  r.trials = int(rs.size());
  std::string skip_reason;
  for (int t = 0; t < int(rs.size()); ++t) {
    auto& x = rs[t];
    r.millis += x.millis;
    switch (x.outcome.status) {
      case TrialStatus::Pass: ++r.passed; break;
      case TrialStatus::Skipped:
        ++r.skipped;
        if (skip_reason.empty()) skip_reason = x.outcome.detail;
        break;
      case TrialStatus::Fail:
        ++r.failed;
        if (r.failures.size() < kKeptFailures)
          r.failures.push_back({t, trial_seed(seed, d.id, t), std::move(x.instance), x.outcome.detail});
        break;
    }
  }
  if (r.trials == 0) r.note = "no trials";
  else if (d.exhaustive) r.note = "exhaustive";
  if (!skip_reason.empty()) r.note += (r.note.empty() ? "" : "; ") + std::to_string(r.skipped) + " skipped: " + skip_reason;
  return r;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, const std::string& id, int trial) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : id) h = (h ^ c) * 1099511628211ULL;
  return splitmix(splitmix(seed ^ h) + std::uint64_t(trial));
}

nlohmann::json CheckReport::to_json() const {
  json f = json::array();
  for (const auto& x : failures)
    f.push_back({{"trial", x.trial}, {"trial_seed", x.trial_seed}, {"detail", x.detail}, {"instance", x.instance}});
  const DiagramSpec* d = find_diagram(id);
  json j{{"id", id},         {"group", group},     {"verdict", pass() ? "PASS" : "FAIL"},
         {"seed", seed},     {"trials", trials},   {"passed", passed},
         {"failed", failed}, {"skipped", skipped}, {"millis", millis},
         {"failures", f}};
  if (d) j["anchor"] = d->anchor;
  if (!note.empty()) j["note"] = note;
  if (!first_instance.is_null()) j["instance"] = first_instance;
  return j;
}

CheckReport CheckReport::from_json(const nlohmann::json& j) {
  CheckReport r;
  r.id = j.at("id");
  r.group = j.value("group", "");
  r.seed = j.at("seed");
  r.trials = j.at("trials");
  r.passed = j.at("passed");
  r.failed = j.at("failed");
  r.skipped = j.value("skipped", 0);
  r.millis = j.value("millis", 0.0);
  r.note = j.value("note", "");
  if (j.contains("instance")) r.first_instance = j["instance"];
  for (const auto& f : j.at("failures")) r.failures.push_back({f.at("trial"), f.at("trial_seed"), f.at("instance"), f.at("detail")});
  return r;
}

bool RunSummary::all_pass() const {
  for (const auto& r : reports)
    if (!r.pass()) return false;
  return true;
}

nlohmann::json RunSummary::to_json() const {
  json ds = json::array();
  int passes = 0;
  for (const auto& r : reports) {
    ds.push_back(r.to_json());
    passes += r.pass();
  }
  return {{"schema", kReportSchema},
          {"seed", seed},
          {"params", params.to_json()},
          {"signs", signs.to_json()},
          {"workers", workers},
          {"millis", millis},
          {"verdict", all_pass() ? "PASS" : "FAIL"},
          {"summary", {{"total", reports.size()}, {"pass", passes}, {"fail", int(reports.size()) - passes}}},
          {"diagrams", ds}};
}

RunSummary RunSummary::from_json(const nlohmann::json& j) {
  if (j.value("schema", "") != std::string(kReportSchema))
    throw std::invalid_argument("unsupported report schema: " + j.value("schema", std::string("(none)")));
  RunSummary s;
  s.seed = j.at("seed");
  s.params = CheckParams::from_json(j.at("params"));
  s.signs = SignAssignment::from_json(j.at("signs"));
  s.workers = j.value("workers", 1);
  s.millis = j.value("millis", 0.0);
  for (const auto& d : j.at("diagrams")) s.reports.push_back(CheckReport::from_json(d));
  return s;
}

int worker_count() {
  if (const char* env = std::getenv("CXD_WORKERS")) {
    try {
      int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

RunSummary run_all(std::uint64_t seed, const CheckParams& params, const SignAssignment& signs,
                   const std::vector<std::string>& ids, int workers) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<const DiagramSpec*> specs;
  if (ids.empty()) {
    for (const auto& d : registry()) specs.push_back(&d);
  } else {
    for (const auto& id : ids) {
      const DiagramSpec* d = find_diagram(id);
      if (!d) throw std::invalid_argument("unknown diagram id: " + id);
      specs.push_back(d);
    }
  }

  RunSummary out;
  out.seed = seed;
  out.params = params;
  out.signs = signs;
  out.workers = workers > 0 ? workers : worker_count();

  CheckContext ctx(signs, params.p);
  std::vector<std::vector<TrialResult>> results(specs.size());
  std::vector<std::pair<int, int>> tasks;
  for (int i = 0; i < int(specs.size()); ++i) {
    results[i].resize(std::size_t(trials_for(*specs[i], params)));
    for (int t = 0; t < int(results[i].size()); ++t) tasks.emplace_back(i, t);
  }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();) {
      auto [i, t] = tasks[k];
      results[i][t] = run_trial(*specs[i], ctx, params, seed, t);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int w = 1; w < out.workers; ++w) pool.emplace_back(work);
    work();
  }

  for (std::size_t i = 0; i < specs.size(); ++i) {
    json first = specs.size() == 1 && !results[i].empty() ? results[i][0].instance : json();
    out.reports.push_back(merge(*specs[i], seed, results[i]));
    out.reports.back().first_instance = std::move(first);
  }
  out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

CheckReport run_diagram(const std::string& id, std::uint64_t seed, const CheckParams& params, const SignAssignment& signs) {
  return run_all(seed, params, signs, {id}).reports.at(0);
}

TrialOutcome evaluate_instance(const std::string& id, const nlohmann::json& instance, const CheckParams& params,
                               const SignAssignment& signs) {
  const DiagramSpec* d = find_diagram(id);
  if (!d) throw std::invalid_argument("unknown diagram id: " + id);
  CheckContext ctx(signs, params.p);
  try {
    return d->evaluate(ctx, instance);
  } catch (const std::exception& e) {
    return {TrialStatus::Fail, std::string("trial threw: ") + e.what()};
  }
}

std::vector<ReplayResult> replay(const nlohmann::json& doc) {
  RunSummary s = RunSummary::from_json(doc);
  std::vector<ReplayResult> out;
  std::vector<std::string> ids;
  for (const auto& r : s.reports) {
    const DiagramSpec* d = find_diagram(r.id);
    if (!d) throw std::invalid_argument("unknown diagram id in report: " + r.id);
    ids.push_back(r.id);
    for (const auto& f : r.failures) {
      ReplayResult x{r.id, f.trial, false, f.detail, ""};
      // The stored instance must be the one the seed draws, and must fail the same way.
      Rng rng(f.trial_seed);
      bool same_instance = f.trial_seed == trial_seed(r.seed, r.id, f.trial) && d->generate(rng, s.params) == f.instance;
      TrialOutcome o = evaluate_instance(r.id, f.instance, s.params, s.signs);
      x.now = std::string(status_name(o.status)) + ": " + o.detail;
      if (!same_instance) x.now += " (instance does not match its seed)";
      x.reproduced = same_instance && o.status == TrialStatus::Fail && o.detail == f.detail;
      out.push_back(x);
    }
  }
  RunSummary again = run_all(s.seed, s.params, s.signs, ids);
  for (std::size_t i = 0; i < s.reports.size(); ++i) {
    const CheckReport &a = s.reports[i], &b = again.reports[i];
    auto tally = [](const CheckReport& r) {
      return std::string(r.pass() ? "PASS" : "FAIL") + " passed=" + std::to_string(r.passed) + " failed=" +
             std::to_string(r.failed) + " skipped=" + std::to_string(r.skipped);
    };
    out.push_back({a.id, -1, tally(a) == tally(b), tally(a), tally(b)});
  }
  return out;
}

}  // namespace cxd
