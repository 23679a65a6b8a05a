#pragma once

// Report documents: every CLI mode renders through one of these builders so
// that JSON output is deterministic (insertion-ordered keys, schema_version
// pinned) and text output shares the same wording.

#include <string>
#include <vector>

#include <json.hpp>

#include "selfco/analyzer.hpp"
#include "selfco/core.hpp"
#include "selfco/ehp.hpp"
#include "selfco/selftest.hpp"
#include "selfco/table_view.hpp"
#include "selfco/wecken.hpp"

namespace selfco {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// Exit codes shared by the library selftest and the CLI.
inline constexpr int kExitDetermined = 0;
inline constexpr int kExitSelfTestFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitUndetermined = 10;

struct ReportDocument {
	ordered_json doc;
	std::string text;
	int exit_code = kExitDetermined;

	std::string json() const { return doc.dump(2) + "\n"; }
};

namespace report_detail {

inline std::string truth_str(Truth t)
{
	switch (t) {
	case Truth::Yes: return "yes";
	case Truth::No: return "no";
	case Truth::Open: return "open";
	default: return "conditional";
	}
}

inline bool truth_determined(Truth t) { return t == Truth::Yes || t == Truth::No; }

inline ordered_json verdict_json(const Verdict& v)
{
	ordered_json j;
	j["value"] = truth_str(v.value);
	if (v.value == Truth::Conditional) j["condition"] = v.condition;
	return j;
}

inline ordered_json count_json(const Count& c)
{
	if (c.determined()) return ordered_json(c == Count::zero() ? 0 : 1);
	return ordered_json("unknown");
}

struct ProvenanceSink {
	std::vector<Citation> items;

	void add(const Citation& c)
	{
		for (const Citation& seen : items)
			if (seen == c) return;
		items.push_back(c);
	}
	void add(const std::vector<Citation>& cs)
	{
		for (const Citation& c : cs) add(c);
	}

	ordered_json json() const
	{
		ordered_json arr = ordered_json::array();
		for (const Citation& c : items) {
			ordered_json e;
			e["rule"] = c.rule;
			e["note"] = c.note;
			arr.push_back(e);
		}
		return arr;
	}

	std::string text(const char* indent = "  ") const
	{
		std::string out;
		for (const Citation& c : items)
			out += detail::cat(indent, "[", c.rule, "] ", c.note, "\n");
		return out;
	}
};

inline ordered_json facts_json(const MapFacts& mf)
{
	ordered_json j = ordered_json::object();
	auto put = [&](const char* key, const std::optional<bool>& v) {
		if (v) j[key] = *v;
	};
	put("double_zero", mf.double_zero);
	put("torsion_le_2", mf.torsion_le_2);
	put("hopf_half_even", mf.hopf_half_even);
	put("kervaire_one", mf.kervaire_one);
	put("desusp_double_zero", mf.desusp_double_zero);
	put("h0_of_class_zero", mf.h0_of_class_zero);
	put("boundary_zero", mf.boundary_zero);
	put("e_boundary_zero", mf.e_boundary_zero);
	return j;
}

inline ordered_json kernel_json(const KernelDesc& k)
{
	ordered_json j;
	switch (k.kind) {
	case KernelDesc::Kind::Trivial:
		j["group"] = "0";
		break;
	case KernelDesc::Kind::Z2:
		j["group"] = "Z/2";
		j["generator"] = k.generator ? ordered_json(k.generator->label())
		                             : ordered_json("untabulated");
		break;
	default:
		j["group"] = "unknown";
		break;
	}
	return j;
}

inline std::string count_text(const Count& c) { return c.str(); }

} // namespace report_detail

// ------------------------------------------------------------------ analyze

inline ReportDocument report_analyze(const AnalysisReport& r, const MapFacts& mf)
{
	using namespace report_detail;
	ReportDocument out;
	ordered_json& j = out.doc;
	j["schema_version"] = kSchemaVersion;
	j["command"] = "analyze";
	j["query"]["m"] = r.dims.m;
	j["query"]["n"] = r.dims.n;
	j["query"]["q"] = r.dims.q;
	j["query"]["group"] = r.group.str();
	j["query"]["facts"] = facts_json(mf);

	ordered_json& res = j["results"];
	res["boundary_vanishes"] = truth_str(r.boundary_vanishes);
	res["e_boundary_vanishes"] = truth_str(r.e_boundary_vanishes);
	res["nielsen"] = count_json(r.nielsen);
	res["mcc"] = count_json(r.mcc);
	res["mc"] = count_json(r.mc);
	res["loose"] = verdict_json(r.loose);
	res["loose_by_small_deformation"] = verdict_json(r.loose_by_small_deformation);
	res["seven_conditions"] = verdict_json(r.seven_conditions);
	res["wecken"] = verdict_json(r.wecken);

	ProvenanceSink prov;
	prov.add(r.fired_rules);
	prov.add(r.loose.provenance);
	prov.add(r.loose_by_small_deformation.provenance);
	prov.add(r.seven_conditions.provenance);
	prov.add(r.wecken.provenance);
	j["provenance"] = prov.json();

	bool determined = r.fully_determined()
	                  && truth_determined(r.boundary_vanishes)
	                  && truth_determined(r.e_boundary_vanishes);
	out.exit_code = determined ? kExitDetermined : kExitUndetermined;

	out.text = detail::cat(
	    "self-coincidence analysis of maps S^", r.dims.m, " -> S^", r.dims.n,
	    "/G  (q = ", r.dims.q, ", deck group: ", r.group.str(), ")\n",
	    "  boundary invariant vanishes:           ", truth_str(r.boundary_vanishes), "\n",
	    "  suspended boundary vanishes:           ", truth_str(r.e_boundary_vanishes), "\n",
	    "  Nielsen number N#(f,f):                ", count_text(r.nielsen), "\n",
	    "  minimal coincidence-component count:   ", count_text(r.mcc), "\n",
	    "  minimal coincidence-point count:       ", count_text(r.mc), "\n",
	    "  pair is loose:                         ", truth_str(r.loose.value), "\n",
	    "  loose by small deformation:            ",
	    truth_str(r.loose_by_small_deformation.value), "\n",
	    "  all seven looseness obstructions part: ", truth_str(r.seven_conditions.value),
	    "\n",
	    "  Wecken condition WeC(", r.dims.m, ",", r.dims.n, "):            ",
	    truth_str(r.wecken.value),
	    r.wecken.value == Truth::Conditional
	        ? detail::cat("  [if ", r.wecken.condition, "]")
	        : std::string(),
	    "\n",
	    "provenance:\n", prov.text());
	return out;
}

// --------------------------------------------------------------------- pair

inline ReportDocument report_pair(DimPair d, const GroupContext& g, bool homotopic,
                                  const PairReport& r)
{
	using namespace report_detail;
	ReportDocument out;
	ordered_json& j = out.doc;
	j["schema_version"] = kSchemaVersion;
	j["command"] = "pair";
	j["query"]["m"] = d.m;
	j["query"]["n"] = d.n;
	j["query"]["group"] = g.str();
	j["query"]["homotopic"] = homotopic;

	const char* rule = r.rule == PairRule::MccEqualsNielsen
	                       ? "mcc_equals_nielsen"
	                       : "reduce_to_self_case";
	j["results"]["rule"] = rule;

	ProvenanceSink prov;
	prov.add(r.notes);
	j["provenance"] = prov.json();
	out.exit_code = kExitDetermined;

	out.text = detail::cat(
	    "pair analysis for (f_1,f_2): S^", d.m, " -> S^", d.n, "/G  (deck group: ",
	    g.str(), ", homotopic: ", homotopic ? "yes" : "no", ")\n",
	    r.rule == PairRule::MccEqualsNielsen
	        ? "  rule: MCC(f_1,f_2) = N#(f_1,f_2); the Nielsen number is sharp here\n"
	        : "  rule: homotopy-invariant; compute the self-pair (f_1,f_1) instead\n",
	    "provenance:\n", prov.text());
	return out;
}

// ---------------------------------------------------------------------- ehp

inline ReportDocument report_ehp(const KnowledgeBase& kb, DimPair d)
{
	using namespace report_detail;
	Verdict inj = e_injective(kb, d);
	Verdict surj = e_surjective(kb, d);
	KernelDesc ker = kernel_of_E(kb, d);

	ReportDocument out;
	ordered_json& j = out.doc;
	j["schema_version"] = kSchemaVersion;
	j["command"] = "ehp";
	j["query"]["m"] = d.m;
	j["query"]["n"] = d.n;
	j["query"]["q"] = d.q;
	j["results"]["injective"] = verdict_json(inj);
	j["results"]["surjective"] = verdict_json(surj);
	j["results"]["kernel"] = kernel_json(ker);

	ProvenanceSink prov;
	prov.add(inj.provenance);
	prov.add(surj.provenance);
	prov.add(ker.provenance);
	j["provenance"] = prov.json();

	bool determined = inj.determined() && surj.determined()
	                  && ker.kind != KernelDesc::Kind::Unknown;
	out.exit_code = determined ? kExitDetermined : kExitUndetermined;

	out.text = detail::cat(
	    "suspension E: pi_", d.m - 1, "(S^", d.n - 1, ") -> pi_", d.m, "(S^", d.n,
	    ")  (q = ", d.q, ")\n",
	    "  injective:  ", truth_str(inj.value), "\n",
	    "  surjective: ", truth_str(surj.value), "\n",
	    "  kernel:     ", table_detail::kernel_str(ker), "\n",
	    "provenance:\n", prov.text());
	return out;
}

// ------------------------------------------------------------------- wecken

inline ReportDocument report_wecken(const KnowledgeBase& kb, DimPair d)
{
	using namespace report_detail;
	Verdict w = wecken_condition(kb, d);

	ReportDocument out;
	ordered_json& j = out.doc;
	j["schema_version"] = kSchemaVersion;
	j["command"] = "wecken";
	j["query"]["m"] = d.m;
	j["query"]["n"] = d.n;
	j["query"]["q"] = d.q;
	j["results"]["wecken"] = verdict_json(w);

	ProvenanceSink prov;
	prov.add(w.provenance);
	j["provenance"] = prov.json();
	out.exit_code = w.determined() ? kExitDetermined : kExitUndetermined;

	out.text = detail::cat(
	    "Wecken condition WeC(", d.m, ",", d.n, ")  (q = ", d.q, "): ",
	    table_detail::wecken_str(w), "\n",
	    "provenance:\n", prov.text());
	return out;
}

// -------------------------------------------------------------------- table

inline ReportDocument report_table(const std::vector<TableRow>& rows,
                                   std::string_view format)
{
	using namespace report_detail;
	ReportDocument out;
	if (format == "json") {
		ordered_json& j = out.doc;
		j["schema_version"] = kSchemaVersion;
		j["command"] = "table";
		ordered_json arr = ordered_json::array();
		for (const TableRow& r : rows) {
			ordered_json e;
			e["q"] = r.q;
			e["n"] = r.n;
			e["m"] = r.m;
			e["injective"] = verdict_json(r.injective);
			e["surjective"] = verdict_json(r.surjective);
			e["kernel"] = kernel_json(r.kernel);
			e["wecken"] = verdict_json(r.wecken);
			arr.push_back(e);
		}
		j["rows"] = arr;
		out.text = out.json();
	} else if (format == "csv") {
		out.text = render_table_csv(rows);
	} else {
		out.text = render_table_md(rows);
	}
	out.exit_code = kExitDetermined;
	return out;
}

// ----------------------------------------------------------------- selftest

inline ReportDocument report_selftest(const SelfTestResult& r)
{
	ReportDocument out;
	ordered_json& j = out.doc;
	j["schema_version"] = kSchemaVersion;
	j["command"] = "selftest";
	j["results"]["checks"] = r.checks;
	j["results"]["failures"] = ordered_json(r.failures);
	j["results"]["ok"] = r.ok();
	out.exit_code = r.ok() ? kExitDetermined : kExitSelfTestFailed;

	if (r.ok()) {
		out.text = detail::cat("selftest: ", r.checks, " checks passed\n");
	} else {
		out.text = detail::cat("selftest: ", r.failures.size(), " of ", r.checks,
		                       " checks FAILED\n");
		for (const std::string& f : r.failures) out.text += detail::cat("  ", f, "\n");
	}
	return out;
}

} // namespace selfco
