#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace wedgelab::app {

inline constexpr int kSchemaVersion = 1;

struct Verdict {
  std::string answer = "unknown";  // yes, no, unknown
  std::string certificate;

  bool operator==(const Verdict&) const = default;
};

/// One row of CLI output: a group or functor group with its invariants.
struct ResultRecord {
  std::string group;
  std::string functor;
  std::string params;
  std::uint64_t order = 0;
  std::vector<std::uint64_t> abelian_invariants;
  std::vector<std::uint64_t> center_invariants;
  std::string fingerprint;
  std::optional<Verdict> has_ai;
  std::optional<Verdict> tau_iso_ktilde;
  std::optional<double> millis;
  std::string note;

  bool operator==(const ResultRecord&) const = default;
};

nlohmann::ordered_json to_json(const ResultRecord& r);
ResultRecord record_from_json(const nlohmann::json& j);

/// {"schema_version": 1, "records": [...]}
std::string records_to_json(const std::vector<ResultRecord>& rows);
std::vector<ResultRecord> records_from_json(const std::string& text);

std::string csv_header();
std::string to_csv_row(const ResultRecord& r);
ResultRecord record_from_csv_row(const std::string& line);
std::string records_to_csv(const std::vector<ResultRecord>& rows);

/// Aligned plain-text table.
std::string records_to_table(const std::vector<ResultRecord>& rows);

std::string join_invariants(const std::vector<std::uint64_t>& f);
std::vector<std::uint64_t> split_invariants(const std::string& s);

}  // namespace wedgelab::app
