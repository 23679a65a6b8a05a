// Command-line front end for the selfco decision engine.
//
// Subcommands: analyze, pair, ehp, wecken, table, selftest.
// Exit codes:  0 all requested values determined
//              1 selftest failure
//              2 input or fact-base error (bad flags, scope errors,
//                contradictory supplied facts)
//             10 analysis ran but at least one value is open/unknown

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <selfco/selfco.hpp>

namespace {

using namespace selfco;

std::optional<bool> parse_tf(const std::string& s, const char* flag)
{
	if (s == "unset") return std::nullopt;
	if (s == "true") return true;
	if (s == "false") return false;
	throw ParseError(detail::cat("flag ", flag, " expects 'true' or 'false', got '",
	                             s, "'"));
}

GroupContext parse_group(const std::string& s)
{
	if (s == "trivial") return GroupContext::trivial();
	if (s == "z2") return GroupContext::z2();
	if (s == "other") return GroupContext::other();
	if (s.rfind("other:", 0) == 0) {
		const std::string num = s.substr(6);
		if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
			throw ParseError(detail::cat("bad group order in '", s, "'"));
		return GroupContext::other(std::stol(num));
	}
	throw ParseError(detail::cat("unknown group '", s,
	                             "' (expected trivial, z2, other, or other:N)"));
}

void emit(const ReportDocument& doc, const std::string& format)
{
	if (format == "json")
		std::cout << doc.json();
	else
		std::cout << doc.text;
}

struct FactFlags {
	std::string double_zero = "unset";
	std::string torsion_le_2 = "unset";
	std::string hopf_div_4 = "unset";
	std::string kervaire_one = "unset";
	std::string desusp_double_zero = "unset";
	std::string h0_zero = "unset";
	std::string boundary_zero = "unset";
	std::string e_boundary_zero = "unset";

	MapFacts to_facts() const
	{
		MapFacts mf;
		mf.double_zero = parse_tf(double_zero, "--double-zero");
		mf.torsion_le_2 = parse_tf(torsion_le_2, "--torsion-le-2");
		mf.hopf_half_even = parse_tf(hopf_div_4, "--hopf-div-4");
		mf.kervaire_one = parse_tf(kervaire_one, "--kervaire-one");
		mf.desusp_double_zero = parse_tf(desusp_double_zero, "--desusp-double-zero");
		mf.h0_of_class_zero = parse_tf(h0_zero, "--h0-zero");
		mf.boundary_zero = parse_tf(boundary_zero, "--boundary-zero");
		mf.e_boundary_zero = parse_tf(e_boundary_zero, "--e-boundary-zero");
		return mf;
	}
};

void add_fact_flags(CLI::App* sub, FactFlags& ff)
{
	sub->add_option("--double-zero", ff.double_zero,
	                "whether 2[f] = 0 in pi_m(S^n) (true/false)");
	sub->add_option("--torsion-le-2", ff.torsion_le_2,
	                "whether the torsion part of [f] has order <= 2 (true/false)");
	sub->add_option("--hopf-div-4", ff.hopf_div_4,
	                "whether the Hopf invariant H(f) is divisible by 4 (true/false)");
	sub->add_option("--kervaire-one", ff.kervaire_one,
	                "whether [f] has Kervaire invariant one (true/false)");
	sub->add_option("--desusp-double-zero", ff.desusp_double_zero,
	                "whether 2E^{-1}[f] = 0 for a chosen desuspension (true/false)");
	sub->add_option("--h0-zero", ff.h0_zero,
	                "whether the Hopf-James invariant h0[f] vanishes (true/false)");
	sub->add_option("--boundary-zero", ff.boundary_zero,
	                "override: the boundary obstruction vanishes (true/false)");
	sub->add_option("--e-boundary-zero", ff.e_boundary_zero,
	                "override: the suspended boundary obstruction vanishes (true/false)");
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"decision engine for sphere self-coincidence invariants,"
	             " Wecken conditions, and suspension kernels"};
	app.require_subcommand(1);

	int m = 0, n = 0;
	std::string group = "z2";
	std::string format = "text";
	std::string homotopic = "unset";
	FactFlags ff;
	int q_min = 1, q_max = 8, n_min = 2, n_max = 256;
	std::string table_format = "md";

	CLI::App* analyze = app.add_subcommand(
	    "analyze", "self-coincidence invariants of a map S^m -> S^n/G");
	analyze->add_option("--m", m, "source sphere dimension")->required();
	analyze->add_option("--n", n, "target sphere dimension")->required();
	analyze->add_option("--group", group, "deck group: trivial, z2, other, other:N");
	add_fact_flags(analyze, ff);
	analyze->add_option("--format", format, "output format: text or json")
	    ->check(CLI::IsMember({"text", "json"}));

	CLI::App* pair = app.add_subcommand(
	    "pair", "reduction rule for a pair of maps S^m -> S^n/G");
	pair->add_option("--m", m, "source sphere dimension")->required();
	pair->add_option("--n", n, "target sphere dimension")->required();
	pair->add_option("--group", group, "deck group: trivial, z2, other, other:N");
	pair->add_option("--homotopic", homotopic, "whether f_1 ~ f_2 (true/false)")
	    ->required();
	pair->add_option("--format", format, "output format: text or json")
	    ->check(CLI::IsMember({"text", "json"}));

	CLI::App* ehp = app.add_subcommand(
	    "ehp", "suspension E: pi_{m-1}(S^{n-1}) -> pi_m(S^n): injectivity,"
	           " surjectivity, kernel");
	ehp->add_option("--m", m, "target of the suspended class lives in pi_m")->required();
	ehp->add_option("--n", n, "even target sphere dimension")->required();
	ehp->add_option("--format", format, "output format: text or json")
	    ->check(CLI::IsMember({"text", "json"}));

	CLI::App* wecken = app.add_subcommand(
	    "wecken", "Wecken condition WeC(m,n) for coincidences of maps S^m -> S^n");
	wecken->add_option("--m", m, "source sphere dimension")->required();
	wecken->add_option("--n", n, "target sphere dimension")->required();
	wecken->add_option("--format", format, "output format: text or json")
	    ->check(CLI::IsMember({"text", "json"}));

	CLI::App* table = app.add_subcommand(
	    "table", "classification grid over a range of degrees of nonstability");
	table->add_option("--q-min", q_min, "smallest degree of nonstability (default 1)");
	table->add_option("--q-max", q_max, "largest degree of nonstability (default 8)");
	table->add_option("--n-min", n_min, "smallest target dimension (default 2)");
	table->add_option("--n-max", n_max, "largest target dimension (default 256)");
	table->add_option("--format", table_format, "output format: md, csv, or json")
	    ->check(CLI::IsMember({"md", "csv", "json"}));

	CLI::App* selftest = app.add_subcommand(
	    "selftest", "diff derived values against the bundled classification and"
	                " re-check all module invariants");
	selftest->add_option("--format", format, "output format: text or json")
	    ->check(CLI::IsMember({"text", "json"}));

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int rc = app.exit(e);
		return rc == 0 ? 0 : kExitInputError;
	}

	try {
		const KnowledgeBase& kb = default_kb();

		if (*analyze) {
			MapFacts mf = ff.to_facts();
			AnalysisReport r = analyze_self(kb, DimPair::of(m, n), parse_group(group), mf);
			ReportDocument doc = report_analyze(r, mf);
			emit(doc, format);
			return doc.exit_code;
		}
		if (*pair) {
			std::optional<bool> h = parse_tf(homotopic, "--homotopic");
			if (!h) throw ParseError("--homotopic requires a true/false value");
			DimPair d = DimPair::of(m, n);
			ReportDocument doc =
			    report_pair(d, parse_group(group), *h, analyze_pair(d, parse_group(group), *h));
			emit(doc, format);
			return doc.exit_code;
		}
		if (*ehp) {
			ReportDocument doc = report_ehp(kb, DimPair::of(m, n));
			emit(doc, format);
			return doc.exit_code;
		}
		if (*wecken) {
			ReportDocument doc = report_wecken(kb, DimPair::of(m, n));
			emit(doc, format);
			return doc.exit_code;
		}
		if (*table) {
			auto rows = table_rows(kb, q_min, q_max, n_min, n_max);
			ReportDocument doc = report_table(rows, table_format);
			std::cout << doc.text;
			return doc.exit_code;
		}
		if (*selftest) {
			ReportDocument doc = report_selftest(run_selftest(kb));
			emit(doc, format);
			return doc.exit_code;
		}
	} catch (const Error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitInputError;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitInputError;
	}
	return kExitInputError;
}
