#pragma once

// Decides the Wecken condition WeC(m,n) for self-coincidences of maps
// S^m -> S^n: "every pair (f,f) with vanishing Nielsen number is loose by
// small deformation".  Verdicts: Yes = holds, No = fails, Open = undecided,
// Conditional = equivalent to a stated open halvability question.

#include "selfco/core.hpp"
#include "selfco/ehp.hpp"
#include "selfco/fact_file.hpp"
#include "selfco/kervaire.hpp"

namespace selfco {

namespace wecken_detail {

// n = 2^i - 4 for some i >= 4 (n = 12, 28, 60, 124, ...).
inline bool pow2_minus_4(int n)
{
	long v = static_cast<long>(n) + 4;
	return v >= 16 && (v & (v - 1)) == 0;
}

} // namespace wecken_detail

// `use_low_codim_rule` lets self-tests confirm the codimension-<=-5 shortcut
// never disagrees with the later stages; callers should leave it on.
inline Verdict wecken_condition_impl(const KnowledgeBase& kb, DimPair d,
                                     bool use_low_codim_rule = true)
{
	const int m = d.m, n = d.n, q = d.q;

	if (n % 2 != 0)
		return Verdict::yes({"wecken.odd-target",
		                     detail::cat("chi(S^", n, ") = 0: every self-map pair on an"
		                                 " odd sphere is loose by small deformation")});
	if (q <= 0)
		return Verdict::yes({"wecken.stable",
		                     detail::cat("m <= 2n-3: Nielsen number and minimum"
		                                 " coincidence counts coincide in the stable range")});
	if (n == 2 && m >= 2)
		return Verdict::yes({"wecken.target-s2",
		                     "for the target S^2 the Nielsen number decides looseness"
		                     " by small deformation in every source dimension"});
	if (use_low_codim_rule && m <= n + 5 && !(m == 11 && n == 6))
		return Verdict::yes({"wecken.low-codim",
		                     detail::cat("codimension m-n = ", m - n, " <= 5 and (m,n) != (11,6):"
		                                 " self-coincidence obstructions vanish together here")});
	if (q > 8)
		return Verdict::open({"wecken.range",
		                      detail::cat("degree of nonstability q = m-2n+3 = ", q,
		                                  " lies outside the tabulated range 1..8")});

	KernelDesc ker = kernel_of_E(kb, d);
	if (ker.trivial())
		return Verdict::yes({"wecken.injective",
		                     detail::cat("the suspension pi_", m - 1, "(S^", n - 1,
		                                 ") -> pi_", m, "(S^", n, ") is injective, so a"
		                                 " vanishing Nielsen number already forces the"
		                                 " small-deformation obstruction to vanish")})
		    .after(ker.provenance);

	switch (q) {
	case 1: {
		Verdict sk = strong_kervaire(kb, n);
		if (sk.is_yes())
			return Verdict::no({"wecken.q1.kervaire",
			                    detail::cat("an order-2 Kervaire-invariant-one class on the ",
			                                2 * n - 2, "-stem yields a self-map pair of S^", n,
			                                " with zero Nielsen number that is not loose by"
			                                " small deformation")})
			    .after(sk.provenance);
		if (sk.is_no())
			return Verdict::yes({"wecken.q1.no-kervaire",
			                     detail::cat("with no Kervaire-invariant-one class of order 2"
			                                 " on the ", 2 * n - 2, "-stem, every vanishing"
			                                 " Nielsen number comes with a small deformation")})
			    .after(sk.provenance);
		return Verdict::open({"wecken.q1.undecided",
		                      detail::cat("WeC(", m, ",", n, ") holds exactly if the ",
		                                  2 * n - 2, "-stem carries no order-2 class with"
		                                  " Kervaire invariant one, which is undecided")})
		    .after(sk.provenance);
	}
	case 2:
		if (n % 4 == 2 && n >= 6)
			return Verdict::no({"wecken.q2.fails",
			                    detail::cat("n = ", n, " = 2 mod 4, n >= 6: a class with"
			                                " vanishing Nielsen number but nonvanishing"
			                                " small-deformation obstruction exists in"
			                                " pi_", m, "(S^", n, ")")});
		return Verdict::yes({"wecken.q2.holds",
		                     detail::cat("for q = 2 the Wecken condition can only fail when"
		                                 " n = 2 mod 4 and n >= 6; n = ", n, " is exempt")});
	case 3:
		if (n % 4 == 2 && n >= 10)
			return Verdict::no({"wecken.q3.fails",
			                    detail::cat("n = ", n, " = 2 mod 4, n >= 10: a class with"
			                                " vanishing Nielsen number but nonvanishing"
			                                " small-deformation obstruction exists in"
			                                " pi_", m, "(S^", n, ")")});
		return Verdict::yes({"wecken.q3.holds",
		                     detail::cat("for q = 3 the Wecken condition can only fail when"
		                                 " n = 2 mod 4 and n >= 10; n = ", n, " is exempt")});
	case 5:
	case 6:
		return Verdict::yes({"wecken.q56",
		                     detail::cat("for q = ", q, " every class with vanishing Nielsen"
		                                 " number is loose by small deformation, for all"
		                                 " even n")});
	default:
		break;
	}

	// q in {4, 7, 8}: outside an explicit Holds region the question reduces to
	// halvability of the order-2 kernel generator, provided the suspension is
	// onto and the kernel class maps to zero under h0.
	if (q == 7) {
		bool critical = (n % 8 == 2 || n % 8 == 4) && n >= 10 && !wecken_detail::pow2_minus_4(n);
		if (!critical)
			return Verdict::yes({"wecken.q7.exempt",
			                     detail::cat("for q = 7 the Wecken condition can only fail"
			                                 " when n = 2 or 4 mod 8, n >= 10 and n+4 is not"
			                                 " a power of two; n = ", n, " is exempt")});
	}

	Verdict surj = e_surjective(kb, d);
	if (surj.is_yes()) {
		if (!ker.generator)
			return Verdict::open({"wecken.kernel-untabulated",
			                      "the kernel of the suspension is nontrivial but its"
			                      " generator is not tabulated, so the halvability"
			                      " reduction cannot be set up"})
			    .after(ker.provenance);
		Verdict h0 = h0_range_vanishes(kb, d);
		if (h0.is_yes()) {
			const WhiteheadProduct& p = *ker.generator;
			Verdict half = halvable(kb, p);
			Citation reduction{"wecken.halving",
			                   detail::cat("every class in pi_", m, "(S^", n, ") with zero"
			                               " Nielsen number desuspends, and its"
			                               " small-deformation obstruction vanishes exactly"
			                               " if it avoids the kernel class ", p.label(),
			                               "; this is possible for all such classes exactly"
			                               " if ", p.label(), " is NOT halvable")};
			if (half.is_yes())
				return Verdict::no({"wecken.halvable",
				                    detail::cat(p.label(), " = 2x is solvable, producing a"
				                                " class with vanishing Nielsen number that is"
				                                " not loose by small deformation")})
				    .after(half.provenance)
				    .after({reduction});
			if (half.is_no())
				return Verdict::yes({"wecken.not-halvable",
				                     detail::cat(p.label(), " = 2x has no solution, so the"
				                                 " small-deformation obstruction vanishes on"
				                                 " every class with zero Nielsen number")})
				    .after(half.provenance)
				    .after({reduction});
			return Verdict::conditional(detail::cat("halvable(", p.label(), ")"),
			                            {"wecken.conditional",
			                             detail::cat("WeC(", m, ",", n, ") fails exactly if ",
			                                         p.label(), " = 2x is solvable, which is"
			                                         " undecided")})
			    .after(half.provenance)
			    .after({reduction});
		}
		return Verdict::open({"wecken.h0-obstructed",
		                      detail::cat("the reduction to halvability needs the kernel"
		                                  " class of the suspension to die under h0, which ",
		                                  h0.is_no() ? "fails" : "is not known", " here")})
		    .after(h0.provenance);
	}
	return Verdict::open({"wecken.not-onto",
	                      detail::cat("the suspension pi_", m - 1, "(S^", n - 1, ") -> pi_",
	                                  m, "(S^", n, ") is not onto, so Nielsen-trivial"
	                                  " classes need not desuspend and the halvability"
	                                  " reduction does not apply")})
	    .after(surj.provenance);
}

inline Verdict wecken_condition(const KnowledgeBase& kb, DimPair d)
{
	return wecken_condition_impl(kb, d, true);
}

} // namespace selfco
