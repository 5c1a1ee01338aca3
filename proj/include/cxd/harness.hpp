#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cxd/diagrams.hpp"
#include "cxd/sites.hpp"

namespace cxd {

inline constexpr const char* kReportSchema = "cxd-report/1";

struct CheckParams {
  int p = 3;
  int max_dim = 3;
  int max_len = 3;
  int max_set = 3;
  int trials = 25;
  nlohmann::json to_json() const;
  static CheckParams from_json(const nlohmann::json& j);
};

// Everything a trial evaluates against. Signs may be corrupted, so the monoidal structure is
// built unchecked; structural maps that stop being chain maps throw during evaluation.
class CheckContext {
 public:
  CheckContext(const SignAssignment& signs, int p);
  CheckContext(const CheckContext&) = delete;
  CheckContext& operator=(const CheckContext&) = delete;
  const SignAssignment& signs() const { return signs_; }
  const Monoidal& monoidal() const { return s_.mon(); }
  const Sheaves& sheaves() const { return s_; }
  int p() const { return p_; }

 private:
  SignAssignment signs_;
  int p_;
  Sheaves s_;
};

enum class TrialStatus { Pass, Fail, Skipped };

struct TrialOutcome {
  TrialStatus status = TrialStatus::Pass;
  std::string detail;  // why it failed or was skipped
};

struct DiagramSpec {
  std::string id;
  std::string group;   // monoidal, signs, sites, duality, invertibility, witt
  std::string anchor;  // what is being compared
  // Instance as JSON, drawn from the trial's own generator.
  std::function<nlohmann::json(Rng&, const CheckParams&)> generate;
  std::function<TrialOutcome(const CheckContext&, const nlohmann::json&)> evaluate;
  // True when one trial covers the whole finite space; later trials are skipped.
  bool exhaustive = false;
};

const std::vector<DiagramSpec>& registry();
// nullptr when absent.
const DiagramSpec* find_diagram(const std::string& id);

// Ids the registry must cover, by group, independent of the builders above.
const std::vector<std::pair<std::string, std::string>>& coverage_map();
struct AuditResult {
  std::vector<std::string> missing;  // in the coverage map, not registered
  std::vector<std::string> extra;    // registered, not in the coverage map
  bool ok() const { return missing.empty() && extra.empty(); }
  nlohmann::json to_json() const;
};
AuditResult audit_registry();

// Deterministic seed of one trial.
std::uint64_t trial_seed(std::uint64_t seed, const std::string& id, int trial);

struct FailureRecord {
  int trial = 0;
  std::uint64_t trial_seed = 0;
  nlohmann::json instance;
  std::string detail;
};

struct CheckReport {
  std::string id;
  std::string group;
  std::uint64_t seed = 0;
  int trials = 0;
  int passed = 0;
  int skipped = 0;
  std::vector<FailureRecord> failures;  // first few, in trial order
  int failed = 0;
  std::string note;  // "no trials", "exhaustive", skip reasons
  double millis = 0;
  nlohmann::json first_instance;  // summary of trial 0
  bool pass() const { return failed == 0; }
  nlohmann::json to_json() const;
  static CheckReport from_json(const nlohmann::json& j);
};

struct RunSummary {
  std::uint64_t seed = 0;
  CheckParams params;
  SignAssignment signs;
  std::vector<CheckReport> reports;  // registry order
  double millis = 0;
  int workers = 1;
  bool all_pass() const;
  nlohmann::json to_json() const;
  static RunSummary from_json(const nlohmann::json& j);
};

// Worker count from CXD_WORKERS, else the hardware concurrency, at least 1.
int worker_count();

// Throws std::invalid_argument on an unknown id.
CheckReport run_diagram(const std::string& id, std::uint64_t seed, const CheckParams& params,
                        const SignAssignment& signs = default_assignment());
// Runs the given ids (all when empty) over a pool of (id, trial) tasks.
RunSummary run_all(std::uint64_t seed, const CheckParams& params, const SignAssignment& signs = default_assignment(),
                   const std::vector<std::string>& ids = {}, int workers = 0);

// One trial evaluated from its serialized instance.
TrialOutcome evaluate_instance(const std::string& id, const nlohmann::json& instance, const CheckParams& params,
                               const SignAssignment& signs);

struct ReplayResult {
  std::string id;
  int trial = 0;
  bool reproduced = false;
  std::string original, now;
};
// Re-evaluates every recorded failure, then re-runs each listed diagram from its seed and
// compares verdicts. Accepts a RunSummary document or a single CheckReport wrapped the same way.
std::vector<ReplayResult> replay(const nlohmann::json& report);

}  // namespace cxd
