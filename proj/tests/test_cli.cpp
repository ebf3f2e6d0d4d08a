#include <gtest/gtest.h>

#include <random>

#include "app/record.hpp"
#include "app/survey.hpp"
#include "wedgelab/constructors.hpp"

using namespace wedgelab;
using namespace wedgelab::app;

namespace {

ResultRecord random_record(std::mt19937& rng) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  const std::vector<std::string> words = {"holder:4,5,3", "a,b", "quote\"d", "", "line, with comma", "tau"};
  ResultRecord r;
  r.group = words[pick(words.size())];
  r.functor = words[pick(words.size())];
  r.params = words[pick(words.size())];
  r.order = rng();
  for (int i = pick(4); i > 0; --i) r.abelian_invariants.push_back(1 + rng() % 1000);
  for (int i = pick(3); i > 0; --i) r.center_invariants.push_back(1 + rng() % 50);
  r.fingerprint = pick(2) ? "" : "0123abcd";
  const std::vector<std::string> answers = {"yes", "no", "unknown"};
  if (pick(2)) r.has_ai = Verdict{answers[pick(3)], words[pick(words.size())]};
  if (pick(2)) r.tau_iso_ktilde = Verdict{answers[pick(3)], "epi2"};
  if (pick(2)) r.millis = std::uniform_real_distribution<double>(0, 1e5)(rng);
  r.note = words[pick(words.size())];
  return r;
}

}  // namespace

TEST(ResultRecord, JsonRoundTrip) {
  std::mt19937 rng(7);
  std::vector<ResultRecord> rows;
  for (int i = 0; i < 200; ++i) {
    const ResultRecord r = random_record(rng);
    EXPECT_EQ(record_from_json(nlohmann::json::parse(to_json(r).dump())), r);
    rows.push_back(r);
  }
  EXPECT_EQ(records_from_json(records_to_json(rows)), rows);
}

TEST(ResultRecord, CsvRoundTrip) {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const ResultRecord r = random_record(rng);
    EXPECT_EQ(record_from_csv_row(to_csv_row(r)), r);
  }
}

TEST(ResultRecord, SchemaVersion) {
  const auto j = nlohmann::json::parse(records_to_json({}));
  EXPECT_EQ(j.at("schema_version"), kSchemaVersion);
  EXPECT_TRUE(j.at("records").empty());
  EXPECT_EQ(csv_header().rfind("schema_version,", 0), 0u);
}

TEST(ResultRecord, Invariants) {
  EXPECT_EQ(join_invariants({4, 4}), "[4,4]");
  EXPECT_EQ(split_invariants("[4,4]"), (std::vector<std::uint64_t>{4, 4}));
  EXPECT_TRUE(split_invariants("[]").empty());
}

TEST(Survey, EmptyRange) {
  SurveyOptions o;
  o.family = "holder";
  o.min_order = 50;
  o.max_order = 40;
  EXPECT_TRUE(run_survey(o).empty());
}

TEST(Survey, HolderCriterionAgreesWithSearch) {
  SurveyOptions o;
  o.family = "holder";
  o.max_order = 100;
  o.timing = false;
  const auto rows = run_survey(o);
  ASSERT_FALSE(rows.empty());
  for (const auto& r : rows) {
    ASSERT_TRUE(r.has_ai) << r.group;
    EXPECT_EQ(r.has_ai->certificate, "criterion+search") << r.group;
    ASSERT_TRUE(r.tau_iso_ktilde) << r.group;
    EXPECT_EQ(r.tau_iso_ktilde->answer, r.has_ai->answer) << r.group;
  }
}

TEST(Survey, AbelianRankTwoFollowsSylowThree) {
  SurveyOptions o;
  o.family = "abelian-rank2";
  o.max_order = 100;
  o.timing = false;
  for (const auto& r : run_survey(o)) {
    ASSERT_TRUE(r.tau_iso_ktilde) << r.group;
    EXPECT_NE(r.tau_iso_ktilde->answer, "unknown") << r.group << " " << r.note;
    EXPECT_EQ(r.note.find("does not match"), std::string::npos) << r.group;
  }
}

TEST(Survey, OrderIndependentOfJobs) {
  SurveyOptions o;
  o.family = "holder";
  o.max_order = 60;
  o.timing = false;
  const auto serial = run_survey(o);
  o.jobs = 4;
  EXPECT_EQ(run_survey(o), serial);
}

TEST(Survey, DescribeGroup) {
  const auto r = describe_group(group_from_descriptor("abelian:4,4"), "abelian:4,4", Budgets::defaults());
  EXPECT_EQ(r.order, 16u);
  EXPECT_EQ(r.abelian_invariants, (std::vector<std::uint64_t>{4, 4}));
  EXPECT_EQ(r.center_invariants, (std::vector<std::uint64_t>{4, 4}));
  EXPECT_FALSE(r.fingerprint.empty());
}
