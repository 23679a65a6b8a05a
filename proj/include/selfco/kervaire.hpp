#pragma once

// Existence of order-2 Kervaire-invariant-one classes (closed-world KI
// records) and halvability of the tabulated kernel generators.

#include "selfco/core.hpp"
#include "selfco/ehp.hpp"
#include "selfco/fact_file.hpp"

namespace selfco {

namespace kervaire_detail {

inline bool is_pow2(long v)
{
	return v > 0 && (v & (v - 1)) == 0;
}

} // namespace kervaire_detail

// Does the (2n-2)-stem carry an order-2 class with Kervaire invariant one?
inline Verdict strong_kervaire(const KnowledgeBase& kb, int n)
{
	if (n < 2 || n % 2 != 0)
		throw DomainError(detail::cat("Kervaire existence is asked for even n >= 2, got n=", n));
	if (auto it = kb.ki.find(n); it != kb.ki.end()) {
		switch (it->second) {
		case Truth::Yes:
			return Verdict::yes({"ki.exists",
			                     detail::cat("an order-2 class with Kervaire invariant one"
			                                 " exists on the ", 2 * n - 2, "-stem (n = ", n, ")")});
		case Truth::No:
			return Verdict::no({"ki.recorded",
			                    detail::cat("recorded: no order-2 Kervaire-invariant-one class"
			                                " for n = ", n)});
		default:
			break;
		}
		Verdict v = Verdict::open({"ki.open",
		                           detail::cat("existence of a Kervaire-invariant-one class on the ",
		                                       2 * n - 2, "-stem (n = ", n, ") is undecided")});
		if (n == 128)
			v.also({"ki.open.selfcoincidence",
			        "equivalently: the 126-stem carries no Kervaire-invariant-one class"
			        " exactly if some suspended class in pi_241(S^116) is loose but not"
			        " loose by small deformation"});
		return v;
	}
	if (n == 2 || n == 4 || n == 8)
		return Verdict::no({"ki.hopf-dim",
		                    detail::cat("n = ", n, ": the suspension is injective, no kernel"
		                                " class exists to be halved")});
	if (!kervaire_detail::is_pow2(n))
		return Verdict::no({"ki.browder",
		                    "Browder: the Kervaire invariant vanishes unless n is a power of two"});
	return Verdict::no({"ki.hhr",
	                    "Hill-Hopkins-Ravenel: the Kervaire invariant vanishes for n > 128"});
}

// Can the order-2 kernel generator p = [iota_j, g_j] be halved, i.e. written
// as 2x for some x in the same group?
inline Verdict halvable(const KnowledgeBase& kb, const WhiteheadProduct& p)
{
	int j = p.left_dim;
	if (j < min_base_dim(p.right))
		throw DomainError(detail::cat("halvable: base dimension ", j,
		                              " is below the least dimension carrying ",
		                              generator_label(p.right)));
	if (p.right == Generator::Iota) {
		if (j % 2 == 0)
			throw DomainError(detail::cat(p.label(),
			                              " has infinite order; halvability is asked of"
			                              " order-2 kernel generators"));
		Verdict v = strong_kervaire(kb, j + 1);
		v.also({"halve.kervaire",
		        detail::cat(p.label(), " can be halved exactly if an order-2"
		                    " Kervaire-invariant-one class exists for n = ", j + 1)});
		return v;
	}
	auto it = kb.halve.find(p.right);
	if (it != kb.halve.end()) {
		for (const HalveRule& r : it->second) {
			if (!r.cond.eval(j)) continue;
			switch (r.verdict) {
			case Truth::Yes: {
				Verdict v = Verdict::yes({"halve.table",
				                          detail::cat(p.label(), " = 2x is solvable")});
				if (r.div4)
					v.also({"halve.div4",
					        detail::cat(p.label(), " is divisible by 4 as well")});
				return v;
			}
			case Truth::No:
				return Verdict::no({"halve.never",
				                    detail::cat("no class x satisfies 2x = ", p.label())});
			default:
				return Verdict::open({"halve.open",
				                      detail::cat("whether ", p.label(),
				                                  " = 2x is solvable is undecided")});
			}
		}
	}
	return Verdict::open({"halve.no-fact",
	                      detail::cat("no halvability fact covers ", p.label())});
}

} // namespace selfco
