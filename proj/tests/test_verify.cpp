#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "qpoly/report_io.hpp"
#include "support.hpp"

using namespace qpoly;

namespace {

const QContext s_half = QContext::from_s(R("1/2"));

VerifyOptions only(std::vector<std::string> suites)
{
    VerifyOptions o;
    o.suites = std::move(suites);
    return o;
}

std::string render(const Json& doc, OutputFormat f)
{
    std::ostringstream os;
    write_document(os, doc, f);
    return os.str();
}

} // namespace

TEST(Verify, PolyfamiliesPassesByDefault)
{
    const auto report = run_verification(s_half, only({"polyfamilies"}));
    EXPECT_GT(report.records.size(), 50u);
    EXPECT_EQ(report.count(CheckStatus::Fail), 0u);
    EXPECT_EQ(exit_code_for(report), 0);
}

TEST(Verify, CanaryFails)
{
    const auto report = run_verification(s_half, only({"canary"}));
    ASSERT_EQ(report.records.size(), 1u);
    EXPECT_EQ(report.records[0].status, CheckStatus::Fail);
    EXPECT_EQ(exit_code_for(report), 1);
}

TEST(Verify, UnknownSuiteRejected)
{
    EXPECT_THROW(run_verification(s_half, only({"nonsense"})), DomainError);
    EXPECT_FALSE(is_known_suite("nonsense"));
    EXPECT_TRUE(is_known_suite("canary"));
}

TEST(Verify, DefaultRunsSixSuitesSortedAndUnique)
{
    const auto report = run_verification(s_half.with_omega(R("1/8")), VerifyOptions{});
    EXPECT_EQ(report.suites, default_suites());
    std::set<std::string> ids;
    for (std::size_t k = 0; k < report.records.size(); ++k) {
        ids.insert(report.records[k].id);
        if (k > 0) {
            EXPECT_LT(report.records[k - 1].id, report.records[k].id);
        }
    }
    EXPECT_EQ(ids.size(), report.records.size());
    EXPECT_EQ(report.count(CheckStatus::Fail), 0u);
    EXPECT_TRUE(report.ok());
}

TEST(Verify, HahnDiscrepanciesListedWithBothValues)
{
    const auto report = run_verification(s_half.with_omega(R("1/8")), only({"matrixelements"}));
    std::size_t rows = 0;
    for (const auto& r : report.records) {
        if (r.status == CheckStatus::DocumentedDiscrepancy) {
            ++rows;
            EXPECT_NE(r.id.find("/hahn/"), std::string::npos) << r.id;
            EXPECT_FALSE(r.lhs.empty());
            EXPECT_FALSE(r.rhs.empty());
            EXPECT_NE(r.lhs, r.rhs);
        }
    }
    EXPECT_GT(rows, 0u);
    EXPECT_EQ(report.count(CheckStatus::Fail), 0u);
}

TEST(Verify, ExponentConflictIsDocumented)
{
    const auto report = run_verification(s_half, only({"qseries"}));
    bool found = false;
    for (const auto& r : report.records) {
        if (r.id == "qseries/exp-pair-shifted-form") {
            found = true;
            EXPECT_EQ(r.status, CheckStatus::DocumentedDiscrepancy);
        }
        if (r.id == "qseries/exp-pair") {
            EXPECT_EQ(r.status, CheckStatus::Pass);
        }
    }
    EXPECT_TRUE(found);
}

TEST(Verify, Deterministic)
{
    VerifyOptions o;
    o.seed = 99;
    const QContext c = QContext::from_s(R("3/4"), R("1/3"));
    const std::string a = render(report_json(c, run_verification(c, o)), OutputFormat::Json);
    const std::string b = render(report_json(c, run_verification(c, o)), OutputFormat::Json);
    EXPECT_EQ(a, b);
    EXPECT_NE(a.find("\"seed\": 99"), std::string::npos);
}

TEST(Tables, PolyRowForPhi2)
{
    TableOptions o;
    o.nmax = 2;
    const QContext c = QContext::from_q(R("1/2"));
    const Json doc = table_json(c, build_table(c, TableKind::Poly, o));
    EXPECT_EQ(doc["kind"], "poly");
    EXPECT_EQ(doc["context"]["q"], "1/2");
    EXPECT_TRUE(doc["context"]["s"].is_null());
    EXPECT_EQ(doc["rows"][2]["coeffs"], Json::array({"1/2", "-3/2", "1"}));
}

TEST(Tables, PositionRowC2)
{
    TableOptions o;
    o.nmax = 2;
    const Json doc = table_json(s_half, build_table(s_half, TableKind::Position, o));
    ASSERT_EQ(doc["rows"].size(), 3u);
    // (x^2 - 1)/[2]_q with [2]_q = 5/4
    EXPECT_EQ(doc["rows"][2]["coeffs"], Json::array({"-4/5", "0", "4/5"}));
}

TEST(Tables, GenfunOrderZero)
{
    TableOptions o;
    o.order = 0;
    const Json doc = table_json(s_half, build_table(s_half, TableKind::Genfun, o));
    ASSERT_EQ(doc["rows"].size(), 1u);
    EXPECT_EQ(doc["rows"][0]["coefficient"], "1");
}

TEST(Tables, MatelAndHahnShapes)
{
    TableOptions o;
    o.nmax = 2;
    const QContext c = s_half.with_omega(R("1/8"));
    const Json matel = table_json(c, build_table(c, TableKind::Matel, o));
    EXPECT_EQ(matel["rows"].size(), 9u);
    for (const auto& row : matel["rows"]) {
        EXPECT_EQ(row["closed"], row["oracle"]);
    }
    const Json hahn = table_json(c, build_table(c, TableKind::Hahn, o));
    for (const auto& row : hahn["rows"]) {
        EXPECT_TRUE(row.contains("tol"));
    }
}

TEST(Serialization, CsvQuotesAndMirrorsRows)
{
    TableOptions o;
    o.nmax = 1;
    const Json doc = table_json(s_half, build_table(s_half, TableKind::Poly, o));
    const std::string csv = render(doc, OutputFormat::Csv);
    EXPECT_NE(csv.find("family,n,variable,coeffs\n"), std::string::npos);
    EXPECT_NE(csv.find("q-gaussian,1,x,-1 1\n"), std::string::npos);
    EXPECT_EQ(detail::csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(detail::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(Serialization, TextSummaryLine)
{
    const QContext c = s_half;
    const auto report = run_verification(c, only({"canary"}));
    const std::string text = render(report_json(c, report), OutputFormat::Text);
    EXPECT_NE(text.find("fail  canary/deliberate-failure"), std::string::npos);
    EXPECT_NE(text.find("total 1, pass 0, fail 1, documented-discrepancy 0"), std::string::npos);
}
