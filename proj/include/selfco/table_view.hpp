#pragma once

// Grid view over the suspension/Wecken classification: one row per
// (q, even n) cell, plus Markdown and CSV renderers.  JSON rendering lives
// in report.hpp with the other serializers.

#include <string>
#include <vector>

#include "selfco/core.hpp"
#include "selfco/ehp.hpp"
#include "selfco/fact_file.hpp"
#include "selfco/wecken.hpp"

namespace selfco {

struct TableRow {
	int q = 0, n = 0, m = 0;
	Verdict injective = Verdict::open({"table.unset", "not yet computed"});
	Verdict surjective = Verdict::open({"table.unset", "not yet computed"});
	KernelDesc kernel;
	Verdict wecken = Verdict::open({"table.unset", "not yet computed"});
};

namespace table_detail {

inline std::string kernel_str(const KernelDesc& k)
{
	switch (k.kind) {
	case KernelDesc::Kind::Trivial: return "0";
	case KernelDesc::Kind::Z2:
		return k.generator ? detail::cat("Z2(", k.generator->label(), ")")
		                   : std::string("Z2(untabulated)");
	default: return "unknown";
	}
}

inline std::string wecken_str(const Verdict& v)
{
	switch (v.value) {
	case Truth::Yes: return "holds";
	case Truth::No: return "fails";
	case Truth::Conditional: return detail::cat("conditional(", v.condition, ")");
	default: return "open";
	}
}

inline std::string yes_no(const Verdict& v)
{
	switch (v.value) {
	case Truth::Yes: return "yes";
	case Truth::No: return "no";
	default: return "open";
	}
}

// One-line description of each q-row of the classification, shown above the
// Markdown group.
inline std::string row_summary(int q)
{
	if (q <= 0)
		return "Stable range: E is injective and onto, and the Wecken condition holds.";
	switch (q) {
	case 1:
		return "E is onto; injective iff n ∈ {2, 4, 8}. The Wecken condition fails"
		       " iff n ∈ {16, 32, 64} (n = 128 open).";
	case 2:
		return "E is never onto; injective iff n ≡ 0 (4) or n = 2. The Wecken"
		       " condition fails iff n ≡ 2 (4), n ≥ 6.";
	case 3:
		return "E injective iff n ≡ 0 (4) or n ∈ {2, 6}; onto iff n ≡ 2 (4),"
		       " n ≥ 6. The Wecken condition fails iff n ≡ 2 (4), n ≥ 10.";
	case 4:
		return "E injective iff n ≡ 0 (8), n = 4 or n = 2^i-2; onto iff n ≡ 2 (4),"
		       " n ≥ 10. Wecken failure reduces to halving [iota_{n-1},nu_{n-1}] on the"
		       " conditional cells; open for n ≡ 4 (8), n ≥ 12.";
	case 5:
		return "E is injective (trivial kernel); never onto; the Wecken condition holds.";
	case 6:
		return "E is injective; onto iff n ≥ 4; the Wecken condition holds.";
	case 7:
		return "E injective iff n ≡ 6, 0 (8), n = 2^i-4 or n ∈ {2, 4}; onto iff"
		       " n ≥ 4. Wecken failure reduces to halving [iota_{n-1},nu^2_{n-1}] on"
		       " the conditional cells.";
	default:
		return "E injective iff n ≡ 0 (16) or n ∈ {2, 4, 8, 12}; onto iff"
		       " n ≡ 2, 4 (8), n ≥ 10, n ≠ 2^i-4. Wecken failure reduces to"
		       " halving [iota_{n-1},sigma_{n-1}] on the conditional cells; open elsewhere.";
	}
}

} // namespace table_detail

// Computes every (q, even n) cell of the requested window.  Cells whose
// source dimension m = q + 2n - 3 would drop below 1 are skipped.
inline std::vector<TableRow> table_rows(const KnowledgeBase& kb, int q_min, int q_max,
                                        int n_min, int n_max)
{
	if (q_max > 8)
		throw UnsupportedRange(detail::cat("table rows with q = ", q_max,
		                                   " lie outside the tabulated range (q <= 8)"));
	std::vector<TableRow> rows;
	int n_start = n_min + (n_min % 2 != 0 ? 1 : 0);
	for (int q = q_min; q <= q_max; ++q) {
		for (int n = std::max(2, n_start); n <= n_max; n += 2) {
			int m = q + 2 * n - 3;
			if (m < 1) continue;
			TableRow row;
			row.q = q;
			row.n = n;
			row.m = m;
			DimPair d = DimPair::of(m, n);
			row.injective = e_injective(kb, d);
			row.surjective = e_surjective(kb, d);
			row.kernel = kernel_of_E(kb, d);
			row.wecken = wecken_condition(kb, d);
			rows.push_back(std::move(row));
		}
	}
	if (rows.empty())
		throw DomainError(detail::cat("empty table range: q ", q_min, "..", q_max,
		                              ", n ", n_min, "..", n_max));
	return rows;
}

inline std::string render_table_csv(const std::vector<TableRow>& rows)
{
	using namespace table_detail;
	std::string out = "q,n,m,injective,surjective,kernel,wecken\n";
	for (const TableRow& r : rows)
		out += detail::cat(r.q, ",", r.n, ",", r.m, ",", yes_no(r.injective), ",",
		                   yes_no(r.surjective), ",", kernel_str(r.kernel), ",",
		                   wecken_str(r.wecken), "\n");
	return out;
}

inline std::string render_table_md(const std::vector<TableRow>& rows)
{
	using namespace table_detail;
	std::string out = "# Suspension and Wecken classification\n";
	int current_q = rows.empty() ? 0 : rows.front().q - 1;
	for (const TableRow& r : rows) {
		if (r.q != current_q) {
			current_q = r.q;
			std::string mexpr = r.q == 3 ? std::string("2n")
			                             : detail::cat("2n", r.q > 3 ? "+" : "-",
			                                           r.q > 3 ? r.q - 3 : 3 - r.q);
			out += detail::cat("\n## q = ", r.q, " (m = ", mexpr, ")\n\n",
			                   row_summary(r.q), "\n\n",
			                   "| n | m | E injective | E onto | ker E | WeC(m,n) |\n",
			                   "|---:|---:|:---|:---|:---|:---|\n");
		}
		out += detail::cat("| ", r.n, " | ", r.m, " | ", yes_no(r.injective), " | ",
		                   yes_no(r.surjective), " | ", kernel_str(r.kernel), " | ",
		                   wecken_str(r.wecken), " |\n");
	}
	return out;
}

} // namespace selfco
