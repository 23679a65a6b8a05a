#pragma once

// Default knowledge base: the fact files embedded at build time, overridable
// per file through the WECKEN_FACTS_DIR environment variable (a directory
// holding facts.tsv and/or classification.tsv).

#include "selfco/embedded_data.hpp"
#include "selfco/fact_file.hpp"

#include <cstdlib>
#include <string>

namespace selfco {

inline KnowledgeBase load_kb_from_dir(const std::string& dir)
{
	std::string facts{embedded::kFacts};
	std::string cls{embedded::kClassification};
	std::string facts_name = "<embedded facts>";
	std::string class_name = "<embedded classification>";
	bool any = false;

	std::string buf;
	if (facts_detail::read_file(dir + "/facts.tsv", buf)) {
		facts = buf;
		facts_name = dir + "/facts.tsv";
		any = true;
	}
	if (facts_detail::read_file(dir + "/classification.tsv", buf)) {
		cls = buf;
		class_name = dir + "/classification.tsv";
		any = true;
	}
	if (!any)
		throw ParseError(detail::cat("WECKEN_FACTS_DIR=", dir,
		                             " holds neither facts.tsv nor classification.tsv"));
	return load_kb_from_text(facts, cls, facts_name, class_name);
}

inline KnowledgeBase load_default_kb()
{
	if (const char* dir = std::getenv("WECKEN_FACTS_DIR"); dir && *dir)
		return load_kb_from_dir(dir);
	return load_kb_from_text(embedded::kFacts, embedded::kClassification,
	                         "<embedded facts>", "<embedded classification>");
}

inline const KnowledgeBase& default_kb()
{
	static const KnowledgeBase kb = load_default_kb();
	return kb;
}

} // namespace selfco
