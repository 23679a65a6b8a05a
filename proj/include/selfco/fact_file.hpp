#pragma once

// Tab-separated fact files and the immutable KnowledgeBase they populate.
// Two files feed the engine:
//   facts.tsv          STEM / WPORDER / EXC / KI / HALVE records (the
//                      knowledge the derivation layer reasons from)
//   classification.tsv CLASS records (an independent transcription of the
//                      classification table; the selftest diffs derived
//                      values against it)
// All data is immutable after loading; every consumer takes the base by
// const reference.

#include "selfco/condition.hpp"
#include "selfco/core.hpp"

#include <array>
#include <fstream>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace selfco {

// ---------------------------------------------------------------- tables

// Stable k-stem row: the cyclic generator the engine uses (absent for the
// trivial stems 4 and 5 and for the non-cyclic stem 8) and its order.
struct StemEntry {
	int stem_index = 0;
	std::optional<Generator> generator;
	ElemOrder generator_order = ElemOrder::unknown();
	bool group_is_trivial = false;
};

struct WpRule {
	Condition cond;
	ElemOrder order;
};

struct HalveRule {
	Condition cond;
	Truth verdict = Truth::Open; // Yes / No / Open
	bool div4 = false;
};

struct ExcEntry {
	bool inj = false, surj = false;
};

// One classification-table cell: E injective / E onto / Wecken verdict,
// verdict one of H(olds), F(ails), O(pen), C(onditional on halving the
// kernel generator cond_gen).
struct ClassCell {
	bool inj = false, surj = false;
	char wec = 'H';
	std::optional<Generator> cond_gen;
};

struct KnowledgeBase {
	std::array<std::optional<StemEntry>, 9> stems;          // index 0..8
	std::map<Generator, std::vector<WpRule>> wporder;       // first match wins
	std::map<std::pair<int, int>, ExcEntry> exceptions;     // key (q, n)
	std::map<int, Truth> ki;                                // absent n => No
	std::map<Generator, std::vector<HalveRule>> halve;      // first match wins
	std::map<std::pair<int, int>, ClassCell> classification; // key (q, n)
};

// ---------------------------------------------------------------- parsing

namespace facts_detail {

inline std::vector<std::string_view> split_tabs(std::string_view line)
{
	std::vector<std::string_view> out;
	size_t pos = 0;
	while (true) {
		size_t tab = line.find('\t', pos);
		if (tab == std::string_view::npos) {
			out.push_back(line.substr(pos));
			return out;
		}
		out.push_back(line.substr(pos, tab - pos));
		pos = tab + 1;
	}
}

inline ParseError err(std::string_view src, int lineno, const std::string& what)
{
	return ParseError(detail::cat(src, ":", lineno, ": ", what));
}

inline long parse_int(std::string_view tok, std::string_view src, int lineno)
{
	bool neg = !tok.empty() && tok[0] == '-';
	std::string_view digits = neg ? tok.substr(1) : tok;
	if (digits.empty() || digits.size() > 12)
		throw err(src, lineno, detail::cat("bad number '", tok, "'"));
	long v = 0;
	for (char ch : digits) {
		if (ch < '0' || ch > '9') throw err(src, lineno, detail::cat("bad number '", tok, "'"));
		v = v * 10 + (ch - '0');
	}
	return neg ? -v : v;
}

inline ElemOrder parse_order(std::string_view tok, std::string_view src, int lineno)
{
	if (tok == "INF") return ElemOrder::infinite();
	if (tok == "UNKNOWN") return ElemOrder::unknown();
	long v = parse_int(tok, src, lineno);
	if (v < 1) throw err(src, lineno, "order must be >= 1, INF or UNKNOWN");
	return ElemOrder::finite(v);
}

inline bool parse_yn(std::string_view tok, std::string_view src, int lineno)
{
	if (tok == "Y") return true;
	if (tok == "N") return false;
	throw err(src, lineno, detail::cat("expected Y or N, got '", tok, "'"));
}

inline Truth parse_yno(std::string_view tok, std::string_view src, int lineno)
{
	if (tok == "Y") return Truth::Yes;
	if (tok == "N") return Truth::No;
	if (tok == "OPEN") return Truth::Open;
	throw err(src, lineno, detail::cat("expected Y, N or OPEN, got '", tok, "'"));
}

inline Generator parse_gen(std::string_view tok, std::string_view src, int lineno)
{
	if (auto g = parse_generator(tok)) return *g;
	throw err(src, lineno, detail::cat("unknown generator '", tok, "'"));
}

} // namespace facts_detail

// Parse fact records from `text` into `kb`. Accepts every record type; the
// canonical layout keeps CLASS records in their own file, but the parser
// does not care. Unknown tags and malformed fields are rejected.
inline void parse_facts_into(KnowledgeBase& kb, std::string_view text,
                             std::string_view source_name)
{
	using namespace facts_detail;
	int lineno = 0;
	size_t pos = 0;
	while (pos <= text.size()) {
		size_t nl = text.find('\n', pos);
		std::string_view line = text.substr(pos, nl == std::string_view::npos
		                                             ? std::string_view::npos
		                                             : nl - pos);
		pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
		++lineno;
		if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
		if (line.empty() || line[0] == '#') continue;

		auto f = split_tabs(line);
		std::string_view tag = f[0];

		if (tag == "STEM") {
			if (f.size() != 4 && f.size() != 5)
				throw err(source_name, lineno, "STEM needs 3 or 4 fields");
			StemEntry e;
			e.stem_index = static_cast<int>(parse_int(f[1], source_name, lineno));
			if (e.stem_index < 0 || e.stem_index > 8)
				throw err(source_name, lineno, "stem index out of range 0..8");
			bool nontriv_flag = false;
			if (f.size() == 5) {
				if (f[4] != "NONTRIV")
					throw err(source_name, lineno, detail::cat("unknown STEM flag '", f[4], "'"));
				nontriv_flag = true;
			}
			if (f[2] == "none") {
				if (f[3] != "0")
					throw err(source_name, lineno, "generatorless stem must carry order 0");
				e.generator.reset();
				e.generator_order = ElemOrder::unknown();
				e.group_is_trivial = !nontriv_flag;
			} else {
				if (nontriv_flag)
					throw err(source_name, lineno, "NONTRIV is only valid with 'none'");
				e.generator = parse_gen(f[2], source_name, lineno);
				e.generator_order = parse_order(f[3], source_name, lineno);
				e.group_is_trivial = false;
			}
			if (kb.stems[e.stem_index])
				throw err(source_name, lineno, detail::cat("duplicate STEM ", e.stem_index));
			kb.stems[e.stem_index] = e;
		} else if (tag == "WPORDER") {
			if (f.size() != 4)
				throw err(source_name, lineno, "WPORDER needs 3 fields");
			Generator g = parse_gen(f[1], source_name, lineno);
			WpRule r{Condition::parse(f[2]), parse_order(f[3], source_name, lineno)};
			kb.wporder[g].push_back(std::move(r));
		} else if (tag == "EXC") {
			if (f.size() != 5)
				throw err(source_name, lineno, "EXC needs 4 fields");
			int q = static_cast<int>(parse_int(f[1], source_name, lineno));
			int n = static_cast<int>(parse_int(f[2], source_name, lineno));
			ExcEntry e{parse_yn(f[3], source_name, lineno), parse_yn(f[4], source_name, lineno)};
			if (!kb.exceptions.emplace(std::make_pair(q, n), e).second)
				throw err(source_name, lineno, detail::cat("duplicate EXC ", q, " ", n));
		} else if (tag == "KI") {
			if (f.size() != 3)
				throw err(source_name, lineno, "KI needs 2 fields");
			int n = static_cast<int>(parse_int(f[1], source_name, lineno));
			if (!kb.ki.emplace(n, parse_yno(f[2], source_name, lineno)).second)
				throw err(source_name, lineno, detail::cat("duplicate KI ", n));
		} else if (tag == "HALVE") {
			if (f.size() != 4 && f.size() != 5)
				throw err(source_name, lineno, "HALVE needs 3 or 4 fields");
			Generator g = parse_gen(f[1], source_name, lineno);
			HalveRule r;
			r.cond = Condition::parse(f[2]);
			r.verdict = parse_yno(f[3], source_name, lineno);
			if (f.size() == 5) {
				if (f[4] != "div4")
					throw err(source_name, lineno, detail::cat("unknown HALVE flag '", f[4], "'"));
				r.div4 = true;
			}
			if (r.div4 && r.verdict != Truth::Yes)
				throw err(source_name, lineno, "div4 requires verdict Y");
			kb.halve[g].push_back(std::move(r));
		} else if (tag == "CLASS") {
			if (f.size() != 6)
				throw err(source_name, lineno, "CLASS needs 5 fields");
			int q = static_cast<int>(parse_int(f[1], source_name, lineno));
			int n = static_cast<int>(parse_int(f[2], source_name, lineno));
			ClassCell cell;
			cell.inj = parse_yn(f[3], source_name, lineno);
			cell.surj = parse_yn(f[4], source_name, lineno);
			std::string_view w = f[5];
			if (w == "H" || w == "F" || w == "O") {
				cell.wec = w[0];
			} else if (w.substr(0, 2) == "C:") {
				cell.wec = 'C';
				cell.cond_gen = parse_gen(w.substr(2), source_name, lineno);
			} else {
				throw err(source_name, lineno, detail::cat("bad Wecken code '", w, "'"));
			}
			if (!kb.classification.emplace(std::make_pair(q, n), cell).second)
				throw err(source_name, lineno, detail::cat("duplicate CLASS ", q, " ", n));
		} else {
			throw err(source_name, lineno, detail::cat("unknown record tag '", tag, "'"));
		}
	}
}

// Structural checks on a loaded base. Throws ParseError on violation.
inline void validate_facts(const KnowledgeBase& kb)
{
	for (int k = 0; k <= 8; ++k) {
		if (!kb.stems[k]) throw ParseError(detail::cat("missing STEM record for stem ", k));
		const StemEntry& e = *kb.stems[k];
		bool want_gen = (k != 4 && k != 5 && k != 8);
		if (e.generator.has_value() != want_gen)
			throw ParseError(detail::cat("stem ", k, want_gen ? " must" : " must not",
			                             " carry a generator"));
		if (e.group_is_trivial != (k == 4 || k == 5))
			throw ParseError(detail::cat("stem ", k, " has wrong triviality flag"));
		if (e.generator && stem_of(*e.generator) != k)
			throw ParseError(detail::cat("stem ", k, " generator lives in the wrong stem"));
		if (e.generator && !e.generator_order.known())
			throw ParseError(detail::cat("stem ", k, " generator needs a known order"));
	}
	for (Generator g : kAllGenerators) {
		auto it = kb.wporder.find(g);
		if (it == kb.wporder.end() || it->second.empty())
			throw ParseError(detail::cat("no WPORDER rules for ", generator_token(g)));
	}
	for (const auto& [key, e] : kb.exceptions) {
		auto [q, n] = key;
		if (q < 1 || q > 8 || n < 2 || n % 2 != 0 || n >= q + 2)
			throw ParseError(detail::cat("EXC (", q, ",", n,
			                             ") outside the exceptional region (even n < q+2)"));
		(void)e;
	}
	for (const auto& [n, v] : kb.ki) {
		if (n < 2 || n % 2 != 0)
			throw ParseError(detail::cat("KI record at odd or tiny n=", n));
		(void)v;
	}
	for (const auto& [g, rules] : kb.halve) {
		if (g == Generator::Iota)
			throw ParseError("HALVE records must not cover IOTA (resolved through KI)");
		(void)rules;
	}
}

// Checks that the classification grid covers exactly q -2..8, even n 2..256,
// minus the cells where m = q + 2n - 3 < 1.
inline void validate_classification(const KnowledgeBase& kb)
{
	size_t expected = 0;
	for (int q = -2; q <= 8; ++q)
		for (int n = 2; n <= 256; n += 2) {
			if (q + 2 * n - 3 < 1) continue;
			++expected;
			if (!kb.classification.count({q, n}))
				throw ParseError(detail::cat("classification grid misses cell q=", q, " n=", n));
		}
	if (kb.classification.size() != expected)
		throw ParseError(detail::cat("classification grid has ", kb.classification.size(),
		                             " cells, expected ", expected,
		                             " (stray cells outside q -2..8, even n 2..256)"));
}

// ---------------------------------------------------------------- loading

inline KnowledgeBase load_kb_from_text(std::string_view facts_text,
                                       std::string_view class_text,
                                       std::string_view facts_name = "facts.tsv",
                                       std::string_view class_name = "classification.tsv")
{
	KnowledgeBase kb;
	parse_facts_into(kb, facts_text, facts_name);
	parse_facts_into(kb, class_text, class_name);
	validate_facts(kb);
	validate_classification(kb);
	return kb;
}

namespace facts_detail {

inline bool read_file(const std::string& path, std::string& out)
{
	std::ifstream in(path, std::ios::binary);
	if (!in) return false;
	std::ostringstream ss;
	ss << in.rdbuf();
	out = ss.str();
	return true;
}

} // namespace facts_detail

} // namespace selfco
