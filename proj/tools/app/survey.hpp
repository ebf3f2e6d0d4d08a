#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "record.hpp"
#include "wedgelab/budget.hpp"
#include "wedgelab/group.hpp"

namespace wedgelab::app {

struct SurveyOptions {
  std::string family;  // "holder" or "abelian-rank2"
  std::uint64_t min_order = 1;
  std::uint64_t max_order = 100;
  unsigned jobs = 1;
  bool timing = true;
  Budgets budgets = Budgets::defaults();
};

/// Families accepted by run_survey.
const std::vector<std::string>& survey_families();

/// One row per group in the family, in parameter order. Rows never throw:
/// failures and budget exhaustion become unknown verdicts with a note.
std::vector<ResultRecord> run_survey(const SurveyOptions& opts);

/// Order, abelianization, centre and fingerprint hash of `g`.
ResultRecord describe_group(const GroupPtr& g, const std::string& name, const Budgets& budgets);

}  // namespace wedgelab::app
