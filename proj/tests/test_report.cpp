#include <catch2/catch_amalgamated.hpp>

#include <string>

#include <selfco/kb.hpp>
#include <selfco/report.hpp>

using namespace selfco;

namespace {
const KnowledgeBase& kb() { return default_kb(); }
} // namespace

TEST_CASE("analyze documents are deterministic and round-trip")
{
	MapFacts mf;
	mf.double_zero = true;
	mf.kervaire_one = true;
	AnalysisReport r = analyze_self(kb(), DimPair::of(30, 16), GroupContext::z2(), mf);
	ReportDocument doc = report_analyze(r, mf);

	CHECK(doc.doc.at("schema_version") == "1");
	CHECK(doc.doc.at("query").at("m") == 30);
	CHECK(doc.doc.at("query").at("facts").at("kervaire_one") == true);
	CHECK(doc.doc.at("results").at("nielsen") == 0);
	CHECK(doc.doc.at("results").at("mcc") == 1);
	CHECK(doc.doc.at("results").at("seven_conditions").at("value") == "yes");
	CHECK(doc.exit_code == kExitDetermined);

	// Round trip: parse(dump(x)) == x, and dumping twice is bytewise stable.
	std::string once = doc.json();
	ReportDocument doc2 = report_analyze(r, mf);
	CHECK(doc2.json() == once);
	CHECK(ordered_json::parse(once) == doc.doc);

	// Provenance entries carry rule ids and human-readable notes.
	REQUIRE(doc.doc.at("provenance").is_array());
	REQUIRE_FALSE(doc.doc.at("provenance").empty());
	for (const auto& entry : doc.doc.at("provenance")) {
		CHECK(entry.contains("rule"));
		CHECK(entry.contains("note"));
		CHECK_FALSE(entry.at("rule").get<std::string>().empty());
		CHECK_FALSE(entry.at("note").get<std::string>().empty());
	}
}

TEST_CASE("undetermined analyses exit with the undetermined code")
{
	AnalysisReport r =
	    analyze_self(kb(), DimPair::of(30, 16), GroupContext::z2(), MapFacts{});
	ReportDocument doc = report_analyze(r, MapFacts{});
	CHECK(doc.exit_code == kExitUndetermined);
	CHECK(doc.doc.at("results").at("nielsen") == "unknown");
}

TEST_CASE("conditional verdicts carry their condition")
{
	ReportDocument doc = report_wecken(kb(), DimPair::of(24, 10));
	CHECK(doc.exit_code == kExitUndetermined);
	CHECK(doc.doc.at("results").at("wecken").at("value") == "conditional");
	CHECK(doc.doc.at("results").at("wecken").at("condition")
	      == "halvable([iota_9,nu^2_9])");
	CHECK(doc.text.find("halvable([iota_9,nu^2_9])") != std::string::npos);
}

TEST_CASE("ehp documents")
{
	ReportDocument doc = report_ehp(kb(), DimPair::of(30, 16));
	CHECK(doc.exit_code == kExitDetermined);
	CHECK(doc.doc.at("results").at("injective").at("value") == "no");
	CHECK(doc.doc.at("results").at("surjective").at("value") == "yes");
	CHECK(doc.doc.at("results").at("kernel").at("group") == "Z/2");
	CHECK(doc.doc.at("results").at("kernel").at("generator") == "[iota_15,iota_15]");
	CHECK(doc.text.find("pi_29(S^15) -> pi_30(S^16)") != std::string::npos);
}

TEST_CASE("pair documents")
{
	DimPair d = DimPair::of(30, 16);
	PairReport pr = analyze_pair(d, GroupContext::z2(), false);
	ReportDocument doc = report_pair(d, GroupContext::z2(), false, pr);
	CHECK(doc.exit_code == kExitDetermined);
	CHECK(doc.doc.at("results").at("rule") == "mcc_equals_nielsen");
}

TEST_CASE("table rendering")
{
	auto rows = table_rows(kb(), 2, 2, 2, 30);

	std::string csv = render_table_csv(rows);
	CHECK(csv.rfind("q,n,m,injective,surjective,kernel,wecken", 0) == 0);
	CHECK(csv.find("2,6,11,no,no,Z2([iota_5,eta_5]),fails") != std::string::npos);

	std::string md = render_table_md(rows);
	CHECK(md.find("fails iff n ≡ 2 (4), n ≥ 6") != std::string::npos);
	CHECK(md.find("| 6 | 11 | no | no | Z2([iota_5,eta_5]) | fails |") != std::string::npos);

	ReportDocument doc = report_table(rows, "json");
	CHECK(doc.doc.at("rows").size() == rows.size());
	CHECK(doc.doc.at("rows").at(2).at("n") == 6);

	// Range handling.
	CHECK_THROWS_AS(table_rows(kb(), 2, 1, 2, 30), DomainError);        // empty
	CHECK_THROWS_AS(table_rows(kb(), 1, 9, 2, 30), UnsupportedRange);   // q > 8
	auto stable = table_rows(kb(), -2, 0, 2, 10);                       // q <= 0 fine
	for (const TableRow& row : stable) CHECK(row.wecken.is_yes());
}

TEST_CASE("selftest over the bundled facts is clean")
{
	SelfTestResult r = run_selftest(kb());
	if (!r.ok())
		for (const std::string& f : r.failures) UNSCOPED_INFO(f);
	CHECK(r.ok());
	CHECK(r.checks > 100000);

	ReportDocument doc = report_selftest(r);
	CHECK(doc.exit_code == kExitDetermined);
	CHECK(doc.doc.at("results").at("ok") == true);
}
