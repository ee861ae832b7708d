#include "mfpt/harness.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "test_util.hpp"

namespace mfpt {
namespace {

RunConfig config(std::vector<std::string> problems, std::vector<int> procs) {
  RunConfig cfg;
  for (const auto& p : problems) cfg.problems.push_back(parse_problem(p));
  for (int id : procs) cfg.procedures.push_back(*procedure_from_id(id));
  return cfg;
}

TEST(Harness, ProcedureIds) {
  for (int id = 1; id <= kProcedureCount; ++id) {
    auto p = procedure_from_id(id);
    ASSERT_TRUE(p);
    EXPECT_EQ(procedure_id(*p), id);
    EXPECT_NE(procedure_label(*p), "unknown");
  }
  EXPECT_FALSE(procedure_from_id(0));
  EXPECT_FALSE(procedure_from_id(13));
}

TEST(Harness, ConfigChecks) {
  RunConfig cfg;
  EXPECT_THROW(cfg.check(), ContractViolation);
  cfg = config({"tp1"}, {2});
  EXPECT_NO_THROW(cfg.check());
  cfg.reps = 0;
  EXPECT_THROW(cfg.check(), ContractViolation);
  cfg = config({"tp1"}, {2});
  cfg.precisions.clear();
  EXPECT_THROW(cfg.check(), ContractViolation);
}

TEST(Harness, EgthRowOnTp1) {
  auto cfg = config({"tp1"}, {9});
  cfg.oracle = true;
  auto rows = run_accuracy(cfg);
  ASSERT_EQ(rows.size(), 1u);
  const auto& r = rows[0];
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.problem, "tp1");
  EXPECT_EQ(r.m, 6u);
  EXPECT_GT(r.acc.ore, 2.955e-15);
  EXPECT_LT(r.acc.ore, 2.955e-11);
  ASSERT_TRUE(r.oracle_max_rel);
  EXPECT_LT(*r.oracle_max_rel, 1e-12);
  EXPECT_EQ(r.negative_entries, 0u);
  EXPECT_FALSE(r.compare);
}

TEST(Harness, SingleRowsCarryComparison) {
  auto cfg = config({"tp1"}, {9});
  cfg.precisions = {Precision::Double, Precision::Single};
  auto rows = run_accuracy(cfg);
  ASSERT_EQ(rows.size(), 2u);
  const auto& s = rows[1];
  EXPECT_EQ(s.precision, Precision::Single);
  ASSERT_TRUE(s.compare);
  EXPECT_GE(s.compare->aned, 6.3);
  EXPECT_LE(s.compare->aned, 8.5);
}

TEST(Harness, FailedCellDoesNotAbortSweep) {
  auto cfg = config({"tp44", "tp1"}, {1});
  cfg.precisions = {Precision::Single};
  auto rows = run_accuracy(cfg);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_FALSE(rows[0].ok);
  EXPECT_FALSE(rows[0].error.empty());
  EXPECT_TRUE(std::isnan(rows[0].acc.ore));
  EXPECT_TRUE(rows[1].ok);
}

// Inputs are loaded before any cell runs, so a bad path stops the sweep.
TEST(Harness, MissingFileIsAnInputError) {
  auto cfg = config({"tp1", "/nonexistent/x.mtx"}, {1, 2});
  EXPECT_THROW(run_accuracy(cfg), Error);
}

TEST(Harness, CsvHeaderAndNan) {
  auto cfg = config({"tp44"}, {1});
  cfg.precisions = {Precision::Single};
  std::ostringstream out;
  write_accuracy(out, run_accuracy(cfg), ReportFormat::Csv);
  const auto text = out.str();
  std::string header;
  for (const auto& c : accuracy_columns()) header += (header.empty() ? "" : ",") + c;
  EXPECT_EQ(text.substr(0, header.size()), header);
  EXPECT_NE(text.find("NaN"), std::string::npos);
}

TEST(Harness, JsonIsParseable) {
  auto cfg = config({"tp1", "tp44"}, {1, 9});
  cfg.precisions = {Precision::Double, Precision::Single};
  std::ostringstream out;
  write_accuracy(out, run_accuracy(cfg), ReportFormat::Json);
  auto j = nlohmann::json::parse(out.str());
  ASSERT_TRUE(j.contains("rows"));
  EXPECT_EQ(j["rows"].size(), 8u);
  EXPECT_EQ(j["schema_version"], kAccuracySchemaVersion);
  bool saw_null = false;
  for (const auto& row : j["rows"]) saw_null |= row["ore"].is_null();
  EXPECT_TRUE(saw_null);
}

TEST(Harness, MarkdownTable) {
  std::ostringstream out;
  write_accuracy(out, run_accuracy(config({"tp1"}, {2})), ReportFormat::Markdown);
  EXPECT_EQ(out.str().rfind("| problem", 0), 0u);
}

TEST(Harness, BenchRecords) {
  auto cfg = config({"tp1"}, {2, 9});
  cfg.reps = 2;
  auto recs = run_bench(cfg);
  ASSERT_EQ(recs.size(), 2u);
  for (const auto& r : recs) {
    EXPECT_TRUE(r.ok);
    EXPECT_GT(r.mean_seconds, 0.0);
    EXPECT_EQ(r.reps, 2);
  }
  std::ostringstream out;
  write_timing(out, recs, ReportFormat::Csv);
  EXPECT_NE(out.str().find("mean_seconds"), std::string::npos);
}

TEST(Harness, ReportsAreDeterministic) {
  auto cfg = config({"tp2", "gen:12:0.5:3"}, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  cfg.precisions = {Precision::Double, Precision::Single};
  std::ostringstream a, b;
  write_accuracy(a, run_accuracy(cfg), ReportFormat::Json);
  write_accuracy(b, run_accuracy(cfg), ReportFormat::Json);
  EXPECT_EQ(a.str(), b.str());
}

}  // namespace
}  // namespace mfpt
