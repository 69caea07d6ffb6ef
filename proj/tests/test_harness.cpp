#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "scv/error.hpp"
#include "scv/harness.hpp"

namespace scv {
namespace {

std::vector<std::string> required_cases() {
  std::vector<std::string> ids{"rv-d5",        "cor-5.2",        "thm-5.1",        "cor-5.3",
                               "pointcount",   "apery-ans",      "beukers-stienstra", "kilbourn",
                               "apery-beukers", "identity-3.1",  "identity-3.2",   "identity-3.3",
                               "identity-3.4", "prop-2.1",       "prop-2.2",       "thm-2.3",
                               "prop-2.4",     "prop-2.6",       "prop-2.7",       "lemma-2.8",
                               "lemma-2.9",    "cor-2.10",       "prop-2.12",      "prop-2.13",
                               "prop-2.14",    "prop-2.15",      "cor-2.16",       "cor-2.17",
                               "thm-2.18",     "prop-2.19",      "lemma-2.20",     "lemma-2.21",
                               "lemma-2.22"};
  for (const char* d : {"2", "3", "4", "6"}) {
    ids.push_back(std::string("thm-4.3-d") + d);
    ids.push_back(std::string("thm-4.4-d") + d);
    ids.push_back(std::string("cor-4.7-d") + d);
    ids.push_back(std::string("cor-4.8-d") + d);
    ids.push_back(std::string("d1-twist-d") + d);
  }
  const char* small[] = {"2", "3", "4", "6"};
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      ids.push_back(std::string("thm-4.5-d") + small[i] + "-d" + small[j]);
      ids.push_back(std::string("cor-4.9-d") + small[i] + "-d" + small[j]);
    }
  }
  for (const char* dr : {"d5-r2", "d8-r3", "d10-r3", "d12-r5"}) {
    ids.push_back(std::string("thm-4.6-") + dr);
    ids.push_back(std::string("cor-4.10-") + dr);
  }
  for (const char* d : {"3", "4", "5"}) ids.push_back(std::string("prop-4.2-d") + d);
  return ids;
}

CaseSpec spec(const std::string& name, std::uint64_t lo, std::uint64_t hi) {
  CaseSpec s;
  s.name = name;
  s.lo = lo;
  s.hi = hi;
  s.options.timing = false;
  return s;
}

std::string json_of(const Report& r) {
  std::ostringstream out;
  emit_report(r, ReportFormat::Json, out);
  return out.str();
}

TEST(Registry, EveryRequiredStatementHasACase) {
  const auto cases = list_cases();
  std::set<std::string> names;
  for (const auto& c : cases) {
    EXPECT_TRUE(names.insert(c.name).second) << "duplicate " << c.name;
    EXPECT_FALSE(c.statement.empty()) << c.name;
    EXPECT_LE(c.lo, c.hi) << c.name;
  }
  for (const auto& id : required_cases()) {
    EXPECT_TRUE(names.count(id)) << "missing case " << id;
    EXPECT_TRUE(find_case(id).has_value());
  }
  EXPECT_EQ(names.size(), required_cases().size());
  EXPECT_FALSE(find_case("thm-9.9").has_value());
}

TEST(RunCase, SpecExamples) {
  CaseSpec s = spec("rv-d5", 7, 7);
  s.options.mod_power = 3;
  const Report r = run_case(s);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0].p, 7u);
  EXPECT_EQ(r.records[0].modulus, 343u);
  EXPECT_EQ(r.records[0].status, Status::Pass);
  EXPECT_EQ(r.records[0].lhs, r.records[0].rhs);

  const Report thm43 = run_case(spec("thm-4.3-d2", 3, 499));
  EXPECT_EQ(thm43.summary().pass, 94u);
  EXPECT_TRUE(thm43.ok());

  const Report id32 = run_case(spec("identity-3.2", 1, 25));
  EXPECT_EQ(id32.summary().pass, 25u);
}

TEST(RunCase, RecordForEveryPrimeInRange) {
  const Report r = run_case(spec("thm-4.3-d3", 2, 40));
  std::vector<std::uint64_t> ps;
  for (const auto& rec : r.records) ps.push_back(rec.p);
  EXPECT_EQ(ps, (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}));
  EXPECT_EQ(r.records[1].status, Status::Skip);
  EXPECT_EQ(r.records[1].reason, "p divides d");
}

TEST(RunCase, FiveIsSkippedWhenItDividesD) {
  for (const char* name : {"rv-d5", "cor-5.2", "thm-5.1", "cor-5.3", "pointcount", "thm-4.6-d5-r2", "cor-4.10-d5-r2",
                           "prop-4.2-d5", "thm-4.6-d10-r3", "cor-4.10-d10-r3"}) {
    const Report r = run_case(spec(name, 5, 5));
    ASSERT_EQ(r.records.size(), 1u) << name;
    EXPECT_EQ(r.records[0].status, Status::Skip) << name;
    EXPECT_EQ(r.records[0].reason, "p divides d") << name;
  }
}

TEST(RunCase, EmptyRangeGivesAValidEmptyReport) {
  const Report r = run_case(spec("rv-d5", 24, 28));
  EXPECT_TRUE(r.records.empty());
  EXPECT_TRUE(r.ok());
  const auto j = nlohmann::json::parse(json_of(r));
  EXPECT_TRUE(j["records"].is_array());
  EXPECT_TRUE(j["records"].empty());
  EXPECT_EQ(j["summary"]["pass"], 0);
}

TEST(RunCase, GammaCapSkipsLargePrimes) {
  CaseSpec s = spec("thm-4.5-d2-d2", 53, 61);
  s.options.gamma_cap = 50;
  const Report r = run_case(s);
  ASSERT_EQ(r.records.size(), 3u);
  for (const auto& rec : r.records) {
    EXPECT_EQ(rec.status, Status::Skip);
    EXPECT_NE(rec.reason.find("cap"), std::string::npos);
  }
}

TEST(RunCase, EnumCapSkipsLargePrimes) {
  CaseSpec s = spec("pointcount", 11, 13);
  s.options.enum_cap = 11;
  const Report r = run_case(s);
  EXPECT_EQ(r.records[0].status, Status::Pass);
  EXPECT_EQ(r.records[1].status, Status::Skip);
}

TEST(RunCase, Errors) {
  try {
    run_case(spec("no-such-case", 3, 5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownCase);
  }
  CaseSpec s = spec("rv-d5", 7, 11);
  s.options.mod_power = 4;
  try {
    run_case(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadRange);
  }
  EXPECT_THROW(run_case(spec("rv-d5", 11, 7)), Error);
}

TEST(RunCase, LowerPrecisionIsAccepted) {
  CaseSpec s = spec("rv-d5", 7, 31);
  s.options.mod_power = 1;
  const Report r = run_case(s);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.records[0].modulus, 7u);
}

TEST(Report, JsonIsByteIdenticalAcrossRunsAndThreadCounts) {
  CaseSpec a = spec("thm-4.4-d4", 3, 200);
  CaseSpec b = a;
  b.options.threads = 4;
  const std::string first = json_of(run_case(a));
  EXPECT_EQ(first, json_of(run_case(a)));
  EXPECT_EQ(first, json_of(run_case(b)));
}

TEST(Report, JsonSchema) {
  const auto j = nlohmann::json::parse(json_of(run_case(spec("thm-4.6-d8-r3", 5, 17))));
  EXPECT_EQ(j["case"], "thm-4.6-d8-r3");
  EXPECT_TRUE(j["params"].is_object());
  EXPECT_EQ(j["elapsed_ms"], 0);
  ASSERT_EQ(j["records"].size(), 5u);
  const auto& skip = j["records"][1];
  EXPECT_EQ(skip["p"], 7);
  EXPECT_EQ(skip["status"], "skip");
  EXPECT_TRUE(skip.contains("reason"));
  const auto& pass = j["records"][4];
  EXPECT_EQ(pass["status"], "pass");
  EXPECT_FALSE(pass.contains("reason"));
  EXPECT_EQ(pass["p"], 17);
  EXPECT_EQ(pass["modulus"], 17 * 17 * 17);
  for (const char* key : {"p", "lhs", "rhs", "modulus", "status"}) EXPECT_TRUE(pass.contains(key)) << key;
  EXPECT_EQ(j["summary"]["pass"], 3);
  EXPECT_EQ(j["summary"]["skip"], 2);
  EXPECT_EQ(j["summary"]["fail"], 0);
}

TEST(Report, CsvFlattensRecords) {
  std::ostringstream out;
  emit_report(run_case(spec("prop-4.2-d3", 5, 13)), ReportFormat::Csv, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "case,p,lhs,rhs,modulus,status,reason");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].rfind("prop-4.2-d3,5,", 0), 0u);
  EXPECT_NE(rows[1].find(",pass,"), std::string::npos);
}

TEST(Report, UnwritablePathIsIoFailure) {
  try {
    emit_report(Report{}, ReportFormat::Json, std::string("/nonexistent-dir/report.json"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IoFailure);
  }
}

TEST(RunCases, SharedPoolKeepsOrder) {
  const std::vector<CaseSpec> specs{spec("thm-4.3-d2", 3, 60), spec("identity-3.1", 1, 4), spec("prop-2.1", 3, 13)};
  const auto reports = run_cases(specs, 3);
  ASSERT_EQ(reports.size(), 3u);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    EXPECT_EQ(reports[i].case_name, specs[i].name);
    EXPECT_EQ(json_of(reports[i]), json_of(run_case(specs[i])));
  }
}

TEST(ParseRange, Forms) {
  EXPECT_EQ(parse_range("7..97"), std::make_pair(std::uint64_t{7}, std::uint64_t{97}));
  EXPECT_EQ(parse_range("11"), std::make_pair(std::uint64_t{11}, std::uint64_t{11}));
  for (const char* bad : {"", "..5", "7..", "a..b", "7...9", "-3..5", "9..x"}) {
    try {
      parse_range(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::BadRange);
    }
  }
}

TEST(CalibrateTwist, UniqueAndStable) {
  EXPECT_EQ(calibrate_d1_twist(2), 1);
  for (std::uint64_t d : {2, 3, 4, 6}) {
    const int t = calibrate_d1_twist(d);
    EXPECT_GE(t, 1);
    EXPECT_LE(t, 4);
    EXPECT_EQ(t, calibrate_d1_twist(d, {53, 59, 61, 67, 71, 73, 79, 83, 89, 97}));
  }
}

TEST(CalibrateTwist, TooFewPrimesIsAmbiguous) {
  try {
    calibrate_d1_twist(2, {7});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AmbiguousTwist);
  }
}

TEST(CalibrateTwist, RejectsBadInput) {
  EXPECT_THROW(calibrate_d1_twist(5), Error);
  EXPECT_THROW(calibrate_d1_twist(3, {9}), Error);
  EXPECT_THROW(calibrate_d1_twist(3, {3}), Error);
}

}  // namespace
}  // namespace scv
