#include "record.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wedgelab::app {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const char* const kColumns[] = {"schema_version", "group",          "functor",        "params",
                                "order",          "abelian",        "center",         "fingerprint",
                                "has_ai",         "has_ai_cert",    "tau_iso_ktilde", "tau_iso_cert",
                                "timing_ms",      "note"};
constexpr std::size_t kNumColumns = std::size(kColumns);

ordered_json verdict_json(const std::optional<Verdict>& v) {
  if (!v) return nullptr;
  ordered_json j;
  j["answer"] = v->answer;
  j["certificate"] = v->certificate;
  return j;
}

std::optional<Verdict> verdict_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return Verdict{j.at("answer").get<std::string>(), j.at("certificate").get<std::string>()};
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  double v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw std::invalid_argument("bad number '" + s + "'");
  return v;
}

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cells.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cells.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.emplace_back();
    } else {
      cells.back() += c;
    }
  }
  return cells;
}

}  // namespace

std::string join_invariants(const std::vector<std::uint64_t>& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + std::to_string(f[i]);
  return out + "]";
}

std::vector<std::uint64_t> split_invariants(const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw std::invalid_argument("bad invariants '" + s + "'");
  std::vector<std::uint64_t> out;
  std::stringstream in(s.substr(1, s.size() - 2));
  std::string part;
  while (std::getline(in, part, ',')) out.push_back(std::stoull(part));
  return out;
}

ordered_json to_json(const ResultRecord& r) {
  ordered_json j;
  j["group"] = r.group;
  j["functor"] = r.functor;
  j["params"] = r.params;
  j["order"] = r.order;
  j["abelian_invariants"] = r.abelian_invariants;
  j["center_invariants"] = r.center_invariants;
  j["fingerprint"] = r.fingerprint;
  j["has_ai"] = verdict_json(r.has_ai);
  j["tau_iso_ktilde"] = verdict_json(r.tau_iso_ktilde);
  j["timing_ms"] = r.millis ? ordered_json(*r.millis) : ordered_json(nullptr);
  j["note"] = r.note;
  return j;
}

ResultRecord record_from_json(const json& j) {
  ResultRecord r;
  r.group = j.at("group").get<std::string>();
  r.functor = j.at("functor").get<std::string>();
  r.params = j.at("params").get<std::string>();
  r.order = j.at("order").get<std::uint64_t>();
  r.abelian_invariants = j.at("abelian_invariants").get<std::vector<std::uint64_t>>();
  r.center_invariants = j.at("center_invariants").get<std::vector<std::uint64_t>>();
  r.fingerprint = j.at("fingerprint").get<std::string>();
  r.has_ai = verdict_from(j.at("has_ai"));
  r.tau_iso_ktilde = verdict_from(j.at("tau_iso_ktilde"));
  if (!j.at("timing_ms").is_null()) r.millis = j.at("timing_ms").get<double>();
  r.note = j.at("note").get<std::string>();
  return r;
}

std::string records_to_json(const std::vector<ResultRecord>& rows) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["records"] = ordered_json::array();
  for (const auto& r : rows) doc["records"].push_back(to_json(r));
  return doc.dump(2) + "\n";
}

std::vector<ResultRecord> records_from_json(const std::string& text) {
  const json doc = json::parse(text);
  if (doc.at("schema_version").get<int>() != kSchemaVersion) throw std::invalid_argument("unsupported schema version");
  std::vector<ResultRecord> out;
  for (const auto& j : doc.at("records")) out.push_back(record_from_json(j));
  return out;
}

std::string csv_header() {
  std::string out;
  for (std::size_t i = 0; i < kNumColumns; ++i) out += (i ? "," : "") + std::string(kColumns[i]);
  return out;
}

std::string to_csv_row(const ResultRecord& r) {
  const std::vector<std::string> cells = {std::to_string(kSchemaVersion),
                                          r.group,
                                          r.functor,
                                          r.params,
                                          std::to_string(r.order),
                                          join_invariants(r.abelian_invariants),
                                          join_invariants(r.center_invariants),
                                          r.fingerprint,
                                          r.has_ai ? r.has_ai->answer : "",
                                          r.has_ai ? r.has_ai->certificate : "",
                                          r.tau_iso_ktilde ? r.tau_iso_ktilde->answer : "",
                                          r.tau_iso_ktilde ? r.tau_iso_ktilde->certificate : "",
                                          r.millis ? format_double(*r.millis) : "",
                                          r.note};
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + quote(cells[i]);
  return out;
}

ResultRecord record_from_csv_row(const std::string& line) {
  const auto c = split_csv(line);
  if (c.size() != kNumColumns) throw std::invalid_argument("expected " + std::to_string(kNumColumns) + " columns");
  if (std::stoi(c[0]) != kSchemaVersion) throw std::invalid_argument("unsupported schema version");
  ResultRecord r;
  r.group = c[1];
  r.functor = c[2];
  r.params = c[3];
  r.order = std::stoull(c[4]);
  r.abelian_invariants = split_invariants(c[5]);
  r.center_invariants = split_invariants(c[6]);
  r.fingerprint = c[7];
  if (!c[8].empty()) r.has_ai = Verdict{c[8], c[9]};
  if (!c[10].empty()) r.tau_iso_ktilde = Verdict{c[10], c[11]};
  if (!c[12].empty()) r.millis = parse_double(c[12]);
  r.note = c[13];
  return r;
}

std::string records_to_csv(const std::vector<ResultRecord>& rows) {
  std::string out = csv_header() + "\n";
  for (const auto& r : rows) out += to_csv_row(r) + "\n";
  return out;
}

std::string records_to_table(const std::vector<ResultRecord>& rows) {
  std::vector<std::vector<std::string>> cells = {
      {"group", "functor", "params", "order", "abelian", "center", "fingerprint", "has_ai", "tau~K~", "ms"}};
  for (const auto& r : rows) {
    auto verdict = [](const std::optional<Verdict>& v) {
      if (!v) return std::string("-");
      return v->certificate.empty() ? v->answer : v->answer + " (" + v->certificate + ")";
    };
    cells.push_back({r.group, r.functor.empty() ? "-" : r.functor, r.params.empty() ? "-" : r.params,
                     std::to_string(r.order), join_invariants(r.abelian_invariants),
                     join_invariants(r.center_invariants), r.fingerprint, verdict(r.has_ai),
                     verdict(r.tau_iso_ktilde), r.millis ? format_double(std::round(*r.millis * 10) / 10) : "-"});
  }
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  for (const auto& r : rows) {
    if (!r.note.empty()) out += r.group + ": " + r.note + "\n";
  }
  return out;
}

}  // namespace wedgelab::app
