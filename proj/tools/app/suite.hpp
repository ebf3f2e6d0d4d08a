#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wedgelab/budget.hpp"

namespace wedgelab::app {

enum class Status { Pass, Fail, Unknown };
std::string to_string(Status s);

enum class Tier { Fast, Full };

struct CriterionInfo {
  int id = 0;
  std::string key;    // short name accepted by --only
  std::string title;
  std::string tag;    // PAPER, DERIVED or TRIVIAL
};

const std::vector<CriterionInfo>& criteria();

/// Accepts an id ("12") or a key ("excf").
std::optional<int> find_criterion(std::string_view name);

struct CriterionResult {
  CriterionInfo info;
  Status status = Status::Unknown;
  std::string detail;
  double millis = 0;
};

struct SuiteOptions {
  Tier tier = Tier::Fast;
  std::vector<int> only;  // empty runs everything
  Budgets budgets = Budgets::defaults();
  /// Replaces one value of the crossed-pairing wedge by the identity.
  bool inject_wedge_fault = false;
  /// Time of a separate fast-tier run, checked by the performance criterion.
  std::optional<double> fast_tier_millis;
  std::function<void(const CriterionResult&)> on_result;
};

struct SuiteReport {
  std::vector<CriterionResult> results;
  double millis = 0;

  /// False on any Fail; Unknown is fatal only in the full tier.
  bool ok(Tier tier) const;
};

SuiteReport run_suite(const SuiteOptions& opts);

/// "[PASS] 12 excf  ..." with optional timing.
std::string format_result(const CriterionResult& r, bool timing);

/// Envelope of the performance criterion in milliseconds.
double tier_limit_millis(Tier tier);

}  // namespace wedgelab::app
