#pragma once

// Suspension behaviour of E : pi_{m-1}(S^{n-1}) -> pi_m(S^n) for even n and
// degree of nonstability q = m - 2n + 3 <= 8. In the suspension-ladder range
// n >= q + 2 everything is derived from stable stems and Whitehead product
// orders; below it the exceptional (q, n) records decide.

#include "selfco/core.hpp"
#include "selfco/fact_file.hpp"
#include "selfco/homotopy.hpp"

namespace selfco {

// [iota_j, right_j]; the form every tabulated kernel generator takes.
struct WhiteheadProduct {
	int left_dim = 0;
	Generator right = Generator::Iota;
	std::optional<Verdict> halved; // filled in by the halvability module when consulted

	std::string label() const { return product_label(right, left_dim); }
};

struct KernelDesc {
	enum class Kind { Trivial, Z2, Unknown };

	Kind kind = Kind::Unknown;
	std::optional<WhiteheadProduct> generator; // Z2 only; absent = known Z2 of untabulated form
	std::vector<Citation> provenance;

	bool trivial() const { return kind == Kind::Trivial; }
};

namespace ehp_detail {

inline void check_scope(DimPair d)
{
	if (!d.n_even())
		throw DomainError(detail::cat("suspension analysis covers even n only, got n=", d.n));
	if (d.q > 8)
		throw UnsupportedRange(detail::cat("q = m-2n+3 = ", d.q,
		                                   " exceeds the tabulated range q <= 8"));
}

inline const ExcEntry& exceptional(const KnowledgeBase& kb, DimPair d)
{
	auto it = kb.exceptions.find({d.q, d.n});
	if (it == kb.exceptions.end())
		throw DomainError(detail::cat("no exceptional record for q=", d.q, ", n=", d.n));
	return it->second;
}

inline Generator stem_generator(const KnowledgeBase& kb, int k)
{
	const StemEntry& e = stem_entry(kb, k);
	if (!e.generator)
		throw DomainError(detail::cat("stem ", k, " has no tabulated generator"));
	return *e.generator;
}

} // namespace ehp_detail

// Is E : pi_{m-1}(S^{n-1}) -> pi_m(S^n) injective?
inline Verdict e_injective(const KnowledgeBase& kb, DimPair d)
{
	ehp_detail::check_scope(d);
	if (d.q <= 0)
		return Verdict::yes({"ehp.stable",
		                     detail::cat("m = ", d.m, " <= 2n-3 = ", 2 * d.n - 3,
		                                 ": E is injective by the Freudenthal theorem")});
	if (!d.in_suspension_range()) {
		const ExcEntry& e = ehp_detail::exceptional(kb, d);
		Citation c{"ehp.inj.exception",
		           detail::cat("low-dimension value for q=", d.q, ", n=", d.n,
		                       " (below the suspension-ladder range n >= q+2)")};
		return e.inj ? Verdict::yes(std::move(c)) : Verdict::no(std::move(c));
	}
	const StemEntry& src = stem_entry(kb, d.q - 1);
	if (!src.generator) {
		return Verdict::yes({"ehp.inj.trivial-stem",
		                     detail::cat("pi_", d.m - d.n + 1, "(S^", d.n - 1,
		                                 ") is the trivial stable ", d.q - 1,
		                                 "-stem: E has zero kernel")});
	}
	Generator g = *src.generator;
	ElemOrder ord = whitehead_order(kb, g, d.n - 1);
	if (!ord.known())
		throw DomainError(detail::cat("knowledge base has no order for ",
		                              product_label(g, d.n - 1)));
	if (ord.is_one())
		return Verdict::yes({"ehp.inj.whitehead",
		                     detail::cat(product_label(g, d.n - 1),
		                                 " = 0: the kernel of E, generated by this product, vanishes")});
	return Verdict::no({"ehp.inj.whitehead",
	                    detail::cat(product_label(g, d.n - 1), " has order ", ord.str(),
	                                ", generating a nonzero kernel of E")});
}

// Is E onto? Equivalently: does [iota_{n-1}, -] act injectively on the
// stable (q-2)-stem feeding the Hopf-invariant obstruction?
inline Verdict e_surjective(const KnowledgeBase& kb, DimPair d)
{
	ehp_detail::check_scope(d);
	if (d.q <= 1)
		return Verdict::yes({"ehp.surj.freudenthal",
		                     detail::cat("m = ", d.m, " <= 2n-2 = ", 2 * d.n - 2,
		                                 ": E is onto by the Freudenthal theorem")});
	if (!d.in_suspension_range()) {
		const ExcEntry& e = ehp_detail::exceptional(kb, d);
		Citation c{"ehp.surj.exception",
		           detail::cat("low-dimension value for q=", d.q, ", n=", d.n,
		                       " (below the suspension-ladder range n >= q+2)")};
		return e.surj ? Verdict::yes(std::move(c)) : Verdict::no(std::move(c));
	}
	const StemEntry& tgt = stem_entry(kb, d.q - 2);
	if (!tgt.generator) {
		return Verdict::yes({"ehp.surj.trivial-stem",
		                     detail::cat("pi_", d.m - d.n, "(S^", d.n - 1,
		                                 ") is the trivial stable ", d.q - 2,
		                                 "-stem: the Hopf-invariant obstruction group is zero")});
	}
	Generator g = *tgt.generator;
	ElemOrder prod = whitehead_order(kb, g, d.n - 1);
	if (!prod.known() || !tgt.generator_order.known())
		throw DomainError(detail::cat("knowledge base has no order for ",
		                              product_label(g, d.n - 1), " or its generator"));
	if (prod == tgt.generator_order)
		return Verdict::yes({"ehp.surj.order-match",
		                     detail::cat("#", product_label(g, d.n - 1), " = #",
		                                 generator_label(g), " = ", prod.str(),
		                                 ": [iota_", d.n - 1,
		                                 ",-] is injective on the ", d.q - 2,
		                                 "-stem, so every Hopf value lifts and E is onto")});
	return Verdict::no({"ehp.surj.order-drop",
	                    detail::cat("#", product_label(g, d.n - 1), " = ", prod.str(),
	                                " < #", generator_label(g), " = ",
	                                tgt.generator_order.str(), ": [iota_", d.n - 1,
	                                ",-] kills part of the ", d.q - 2,
	                                "-stem, so E is not onto")});
}

inline KernelDesc kernel_of_E(const KnowledgeBase& kb, DimPair d)
{
	Verdict inj = e_injective(kb, d);
	KernelDesc k;
	k.provenance = inj.provenance;
	if (inj.is_yes()) {
		k.kind = KernelDesc::Kind::Trivial;
		k.provenance.push_back({"ehp.kernel.trivial", "E injective: ker E = 0"});
		return k;
	}
	k.kind = KernelDesc::Kind::Z2;
	if (d.in_suspension_range()) {
		Generator g = ehp_detail::stem_generator(kb, d.q - 1);
		k.generator = WhiteheadProduct{d.n - 1, g, std::nullopt};
		k.provenance.push_back({"ehp.kernel.whitehead",
		                        detail::cat("ker E = Z/2 generated by ",
		                                    k.generator->label())});
	} else {
		k.provenance.push_back({"ehp.kernel.exceptional",
		                        detail::cat("ker E = Z/2 for q=", d.q, ", n=", d.n,
		                                    "; its generator is not a Whitehead product"
		                                    " of the tabulated form")});
	}
	return k;
}

// Does the second James-Hopf invariant h_0 vanish on all of
// pi_{m-1}(S^{n-1})? Meaningful only when E has a kernel there.
inline Verdict h0_range_vanishes(const KnowledgeBase& kb, DimPair d)
{
	if (kernel_of_E(kb, d).trivial())
		throw DomainError("h0_range_vanishes applies only when E has a nonzero kernel");
	if (d.q == 4 && d.n % 8 == 4 && d.n >= 12)
		return Verdict::no({"ehp.h0.nonzero",
		                    detail::cat("for m = 2n+1 with n = 4 (mod 8), n >= 12, h_0 maps pi_",
		                                d.m - 1, "(S^", d.n - 1,
		                                ") onto part of the 3-stem: it does not vanish")});
	if (d.q == 8 && (d.n == 6 || d.n == 10))
		return Verdict::open({"ehp.h0.open",
		                      detail::cat("whether h_0 vanishes on pi_", d.m - 1, "(S^",
		                                  d.n - 1, ") is undecided for m = 2n+5, n = ", d.n)});
	return Verdict::yes({"ehp.h0.vanishes",
	                     detail::cat("h_0 vanishes on pi_", d.m - 1, "(S^", d.n - 1,
	                                 ") (q <= 8 with nonzero kernel, away from the two"
	                                 " exceptional families)")});
}

// Symbolic facts about a homotopy class.
struct ElementFacts {
	std::optional<bool> is_zero;
	std::optional<bool> double_is_zero;
	std::optional<bool> h0_is_zero;
	std::optional<bool> h1_is_zero;
	std::string desc;
	std::vector<Citation> notes;
};

// Facts about del(E alpha) for alpha in pi_{m-1}(S^{n-1}), where del is the
// boundary map of the selfcoincidence fibration for (m, n). Needs no
// knowledge base: it applies the degree formula
//   del(E alpha) = chi(S^n) alpha + [iota_{n-1},iota_{n-1}] h_0(alpha) + (higher term),
// where the higher term drops for m <= 3n-5.
inline ElementFacts boundary_of_suspension(DimPair d, const ElementFacts& alpha)
{
	ElementFacts out;
	if (!d.n_even()) {
		out.is_zero = true;
		out.desc = "0";
		out.notes.push_back({"ehp.bdy.odd",
		                     detail::cat("chi(S^", d.n, ") = 0 for odd n: del(E alpha) = 0"
		                                 " regardless of alpha")});
		return out;
	}
	bool h1_gone = d.in_suspension_range() || alpha.h1_is_zero.value_or(false);
	if (alpha.h0_is_zero.value_or(false) && h1_gone) {
		out.is_zero = alpha.double_is_zero;
		out.desc = "2*alpha";
		out.notes.push_back({"ehp.bdy.double",
		                     detail::cat("h_0(alpha) = 0 and the higher term is absent",
		                                 d.in_suspension_range() ? " (m <= 3n-5)" : " (h_1(alpha) = 0)",
		                                 ": del(E alpha) = 2 alpha")});
		return out;
	}
	out.desc = detail::cat("2*alpha + ", product_label(Generator::Iota, d.n - 1),
	                       ".h0(alpha) + (higher term)");
	out.notes.push_back({"ehp.bdy.obstructed",
	                     "del(E alpha) carries the Whitehead correction term; undetermined"
	                     " without h_0(alpha) = 0"});
	return out;
}

} // namespace selfco
