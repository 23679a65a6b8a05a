#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <selfco/kb.hpp>
#include <selfco/selftest.hpp>

using namespace selfco;

namespace {

KnowledgeBase parse_fragment(const std::string& text)
{
	KnowledgeBase kb;
	parse_facts_into(kb, text, "<test>");
	return kb;
}

std::string replace_once(std::string text, const std::string& from, const std::string& to)
{
	size_t pos = text.find(from);
	REQUIRE(pos != std::string::npos);
	text.replace(pos, from.size(), to);
	return text;
}

} // namespace

TEST_CASE("well-formed records parse")
{
	KnowledgeBase kb = parse_fragment(
	    "# comment\n"
	    "\n"
	    "STEM\t3\tNU\t24\n"
	    "WPORDER\tNU\tj=4\t12\n"
	    "EXC\t5\t4\tY\tN\n"
	    "KI\t16\tY\n"
	    "HALVE\tETASQ\tj%4=1&j>=9\tY\tdiv4\n"
	    "CLASS\t4\t10\tN\tY\tC:NU\n");
	REQUIRE(kb.stems[3].has_value());
	CHECK(kb.stems[3]->generator == Generator::Nu);
	CHECK(kb.stems[3]->generator_order == ElemOrder::finite(24));
	CHECK(kb.wporder[Generator::Nu].size() == 1);
	CHECK(kb.exceptions.at({5, 4}).inj);
	CHECK_FALSE(kb.exceptions.at({5, 4}).surj);
	CHECK(kb.ki.at(16) == Truth::Yes);
	REQUIRE(kb.halve[Generator::EtaSq].size() == 1);
	CHECK(kb.halve[Generator::EtaSq][0].div4);
	const ClassCell& cell = kb.classification.at({4, 10});
	CHECK(cell.wec == 'C');
	CHECK(cell.cond_gen == Generator::Nu);
}

TEST_CASE("malformed records are rejected with the offending line")
{
	CHECK_THROWS_AS(parse_fragment("BOGUS\t1\n"), ParseError);
	CHECK_THROWS_AS(parse_fragment("STEM\t9\tnone\t0\n"), ParseError);
	CHECK_THROWS_AS(parse_fragment("STEM\t3\tNU\n"), ParseError);
	CHECK_THROWS_AS(parse_fragment("STEM\t3\tNU\t24\nSTEM\t3\tNU\t24\n"), ParseError);
	CHECK_THROWS_AS(parse_fragment("STEM\t4\tnone\t7\n"), ParseError);
	CHECK_THROWS_AS(parse_fragment("STEM\t3\tNU\t24\tNONTRIV\n"), ParseError);
	CHECK_THROWS_AS(parse_fragment("WPORDER\tNU\tj=4\tmaybe\n"), ParseError);
	CHECK_THROWS_AS(parse_fragment("WPORDER\tZETA\tj=4\t12\n"), ParseError);
	CHECK_THROWS_AS(parse_fragment("WPORDER\tNU\tj<4\t12\n"), ParseError);
	CHECK_THROWS_AS(parse_fragment("EXC\t5\t4\tY\n"), ParseError);
	CHECK_THROWS_AS(parse_fragment("EXC\t5\t4\tY\tQ\n"), ParseError);
	CHECK_THROWS_AS(parse_fragment("KI\t16\tMAYBE\n"), ParseError);
	CHECK_THROWS_AS(parse_fragment("HALVE\tNU\tj>=4\tOPEN\tdiv4\n"), ParseError);
	CHECK_THROWS_AS(parse_fragment("HALVE\tNU\tj>=4\tN\tdiv4\n"), ParseError);
	CHECK_THROWS_AS(parse_fragment("CLASS\t4\t10\tN\tY\tX\n"), ParseError);
	CHECK_THROWS_AS(parse_fragment("CLASS\t4\t10\tN\tY\tC:ZETA\n"), ParseError);
	CHECK_THROWS_AS(parse_fragment("CLASS\t4\t10\tN\tY\tH\nCLASS\t4\t10\tN\tY\tH\n"),
	                ParseError);

	try {
		parse_fragment("STEM\t3\tNU\t24\nKI\tsixteen\tY\n");
		FAIL("expected a parse error");
	} catch (const ParseError& e) {
		std::string msg = e.what();
		CHECK(msg.find("<test>:2") != std::string::npos);
	}
}

TEST_CASE("validation demands complete tables")
{
	// Remove one stem -> validation failure.
	std::string facts{embedded::kFacts};
	std::string cls{embedded::kClassification};
	std::string no_stem3 = replace_once(facts, "STEM\t3", "# STEM\t3");
	CHECK_THROWS_AS(load_kb_from_text(no_stem3, cls), ParseError);

	// Remove a classification cell -> grid coverage failure.
	std::string no_cell = replace_once(cls, "CLASS\t4\t10", "# CLASS\t4\t10");
	CHECK_THROWS_AS(load_kb_from_text(facts, no_cell), ParseError);

	// The bundled files themselves load cleanly.
	KnowledgeBase kb = load_kb_from_text(facts, cls);
	CHECK(kb.classification.size() == 1406);
}

TEST_CASE("fault injection: a flipped classification cell is caught and named")
{
	std::string cls{embedded::kClassification};
	std::string flipped = replace_once(cls, "CLASS\t4\t14\tY\tY\tH", "CLASS\t4\t14\tY\tY\tF");
	KnowledgeBase kb = load_kb_from_text(embedded::kFacts, flipped);
	SelfTestResult r = run_selftest(kb);
	REQUIRE_FALSE(r.ok());
	bool named = false;
	for (const std::string& f : r.failures)
		named |= f.find("grid.wecken") != std::string::npos
		         && f.find("q=4 n=14") != std::string::npos;
	CHECK(named);
}

TEST_CASE("fault injection: a corrupted generator order trips the divisibility invariant")
{
	std::string facts{embedded::kFacts};
	std::string corrupted = replace_once(facts, "STEM\t7\tSIGMA\t240", "STEM\t7\tSIGMA\t250");
	KnowledgeBase kb = load_kb_from_text(corrupted, embedded::kClassification);
	SelfTestResult r = run_selftest(kb);
	REQUIRE_FALSE(r.ok());
	bool named = false;
	for (const std::string& f : r.failures)
		named |= f.find("wp.divides") != std::string::npos
		         && f.find("SIGMA") != std::string::npos;
	CHECK(named);
}

TEST_CASE("facts directory override")
{
	namespace fs = std::filesystem;
	fs::path dir = fs::temp_directory_path() / "selfco_facts_override_test";
	fs::create_directories(dir);

	// Override only facts.tsv (classification stays embedded); change the
	// Kervaire record for n=128 from OPEN to Y and watch the verdict move.
	std::string facts{embedded::kFacts};
	std::string moved = replace_once(facts, "KI\t128\tOPEN", "KI\t128\tY");
	{
		std::ofstream out(dir / "facts.tsv", std::ios::binary);
		out << moved;
	}

	KnowledgeBase kb = load_kb_from_dir(dir.string());
	CHECK(strong_kervaire(kb, 128).is_yes());

	// The same directory through the environment variable.
	::setenv("WECKEN_FACTS_DIR", dir.string().c_str(), 1);
	KnowledgeBase env_kb = load_default_kb();
	::unsetenv("WECKEN_FACTS_DIR");
	CHECK(strong_kervaire(env_kb, 128).is_yes());

	// An empty override directory is an error, not a silent fallback.
	fs::path empty = fs::temp_directory_path() / "selfco_empty_override_test";
	fs::create_directories(empty);
	CHECK_THROWS_AS(load_kb_from_dir(empty.string()), ParseError);

	fs::remove_all(dir);
	fs::remove_all(empty);
}
