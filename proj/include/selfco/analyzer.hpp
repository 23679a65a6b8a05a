#pragma once

// Self-coincidence analyzer: derives the boundary obstructions of a map
// S^m -> S^n/G from caller-supplied facts about its homotopy class, then
// reports N#(f,f), MCC(f,f), MC(f,f), looseness, looseness by small
// deformation and the seven-conditions cluster, each with provenance.

#include <optional>
#include <string>
#include <vector>

#include "selfco/core.hpp"
#include "selfco/ehp.hpp"
#include "selfco/fact_file.hpp"
#include "selfco/kervaire.hpp"
#include "selfco/wecken.hpp"

namespace selfco {

enum class DeckGroup { Trivial, Z2, OtherNontrivial };

// The finite group G acting smoothly and freely on S^n.
struct GroupContext {
	DeckGroup kind = DeckGroup::Z2;
	std::optional<long> order; // 1 for Trivial, 2 for Z2, >= 3 or unknown otherwise

	static GroupContext trivial() { return {DeckGroup::Trivial, 1}; }
	static GroupContext z2() { return {DeckGroup::Z2, 2}; }
	static GroupContext other(std::optional<long> ord = std::nullopt)
	{
		if (ord && *ord < 3)
			throw DomainError(detail::cat("a deck group declared 'other' must have order"
			                              " >= 3 or unknown order, got ", *ord));
		return {DeckGroup::OtherNontrivial, ord};
	}

	std::string str() const
	{
		switch (kind) {
		case DeckGroup::Trivial: return "trivial";
		case DeckGroup::Z2: return "z2";
		default: return order ? detail::cat("other:", *order) : std::string("other");
		}
	}
};

// Caller-supplied predicates about the lifted class [f] in pi_m(S^n).
// Absent = unknown.  No field is ever guessed; contradictions error out.
struct MapFacts {
	std::optional<bool> double_zero;        // 2[f] = 0
	std::optional<bool> torsion_le_2;       // torsion part of [f] has order <= 2
	std::optional<bool> hopf_half_even;     // Hopf invariant H(f) = 0 mod 4
	std::optional<bool> kervaire_one;       // [f] has Kervaire invariant one
	std::optional<bool> desusp_double_zero; // [f] desuspends and 2 E^{-1}([f]) = 0
	std::optional<bool> h0_of_class_zero;   // h0([f]) = 0
	std::optional<bool> boundary_zero;      // direct override: the boundary of [f] vanishes
	std::optional<bool> e_boundary_zero;    // direct override: the suspended boundary vanishes
};

// Minimum-number value: 0, 1, or undetermined.
struct Count {
	enum class Kind { Zero, One, Unknown };
	Kind kind = Kind::Unknown;

	static Count zero() { return {Kind::Zero}; }
	static Count one() { return {Kind::One}; }
	static Count unknown() { return {Kind::Unknown}; }
	// Yes -> 0, No -> 1, otherwise undetermined.
	static Count zero_iff(Truth t)
	{
		if (t == Truth::Yes) return zero();
		if (t == Truth::No) return one();
		return unknown();
	}

	bool determined() const { return kind != Kind::Unknown; }
	bool operator==(const Count& o) const { return kind == o.kind; }
	bool operator!=(const Count& o) const { return !(*this == o); }
	std::string str() const
	{
		switch (kind) {
		case Kind::Zero: return "0";
		case Kind::One: return "1";
		default: return "unknown";
		}
	}
};

namespace analyzer_detail {

inline Truth tri(std::optional<bool> b)
{
	if (!b) return Truth::Open;
	return *b ? Truth::Yes : Truth::No;
}

inline Truth not3(Truth t)
{
	if (t == Truth::Yes) return Truth::No;
	if (t == Truth::No) return Truth::Yes;
	return Truth::Open;
}

inline Truth and3(Truth a, Truth b)
{
	if (a == Truth::No || b == Truth::No) return Truth::No;
	if (a == Truth::Yes && b == Truth::Yes) return Truth::Yes;
	return Truth::Open;
}

// A three-valued obstruction value together with the name of whatever
// determined it, for use in inconsistency reports.
struct Tracked {
	Truth v = Truth::Open;
	std::string origin;

	void set(Truth t, std::string from)
	{
		v = t;
		if (t != Truth::Open) origin = std::move(from);
	}
};

} // namespace analyzer_detail

// The two derived obstruction predicates: `boundary` is "the boundary of [f]
// vanishes" (equivalent to looseness by small deformation), `e_boundary` is
// "the suspended boundary vanishes" (equivalent to N#(f,f) = 0).
struct BoundaryFacts {
	analyzer_detail::Tracked boundary;
	analyzer_detail::Tracked e_boundary;
	std::vector<Citation> notes;
};

namespace analyzer_detail {

inline void note(BoundaryFacts& b, Citation c)
{
	b.notes.push_back(std::move(c));
}

// Effective Kervaire bit of [f] for the q=1 rule: the supplied fact when
// present (validated against the closed-world existence results), else
// derived where those results force it to vanish.
inline Truth effective_kervaire(const MapFacts& mf, int n, BoundaryFacts& out)
{
	bool pow2 = n > 0 && (n & (n - 1)) == 0;
	if (mf.kervaire_one) {
		if (*mf.kervaire_one) {
			if (!pow2)
				throw InconsistentFacts(
				    "kervaire_one=true",
				    detail::cat("Browder's theorem (n = ", n, " is not a power of two)"),
				    "the Kervaire invariant vanishes identically in this dimension");
			if (n > 128)
				throw InconsistentFacts(
				    "kervaire_one=true",
				    detail::cat("Hill-Hopkins-Ravenel (n = ", n, " exceeds 128)"),
				    "the Kervaire invariant vanishes identically in this dimension");
		}
		return tri(mf.kervaire_one);
	}
	if (!pow2) {
		note(out, {"bdy.q1.browder",
		           detail::cat("Browder: the Kervaire invariant of every class vanishes"
		                       " for n = ", n, " (not a power of two)")});
		return Truth::No;
	}
	if (n > 128) {
		note(out, {"bdy.q1.hhr",
		           detail::cat("Hill-Hopkins-Ravenel: the Kervaire invariant of every"
		                       " class vanishes for n = ", n, " > 128")});
		return Truth::No;
	}
	return Truth::Open;
}

// Condition "2[f] = [iota_n,iota_n] o h0([f])" for q=3, n = 0 mod 4 or
// n in {2,6}, evaluated from the supplied facts.
inline Truth criterion_vi(const MapFacts& mf, int n, BoundaryFacts& out)
{
	if (n == 2 || n == 6) {
		note(out, {"bdy.q3.small",
		           detail::cat("for n = ", n, " the group pi_", 2 * n, "(S^", n, ") has"
		                       " exponent 2 and the composite [iota_", n, ",iota_", n,
		                       "] o h0 vanishes, so 2[f] = [iota_", n, ",iota_", n,
		                       "] o h0([f]) holds for every class")});
		return Truth::Yes;
	}
	Truth d = tri(mf.double_zero), h = tri(mf.h0_of_class_zero);
	if (d == Truth::Yes && h == Truth::Yes) {
		note(out, {"bdy.q3.vi",
		           "2[f] = 0 and h0([f]) = 0: both sides of the criterion"
		           " 2[f] = [iota_n,iota_n] o h0([f]) vanish"});
		return Truth::Yes;
	}
	if (d == Truth::No && h == Truth::Yes) {
		note(out, {"bdy.q3.vi",
		           "h0([f]) = 0 but 2[f] != 0: the criterion"
		           " 2[f] = [iota_n,iota_n] o h0([f]) fails"});
		return Truth::No;
	}
	if (d == Truth::Yes && h == Truth::No) {
		note(out, {"bdy.q3.vi",
		           detail::cat("2[f] = 0 but h0([f]) != 0: composition with [iota_", n,
		                       ",iota_", n, "] is injective on the image of h0 for"
		                       " n = 0 mod 4, so the criterion fails")});
		return Truth::No;
	}
	if (d == Truth::No && h == Truth::No) {
		note(out, {"bdy.q3.vi",
		           "2[f] and [iota_n,iota_n] o h0([f]) are both nonzero; whether they"
		           " agree is not determined by these facts"});
		return Truth::Open;
	}
	note(out, {"bdy.q3.vi",
	           "evaluating 2[f] = [iota_n,iota_n] o h0([f]) needs both the 2[f] = 0"
	           " and the h0([f]) = 0 facts"});
	return Truth::Open;
}

} // namespace analyzer_detail

// Stage 1 of analyze_self: derive the two obstruction predicates from the
// supplied facts, apply overrides, and enforce every known consistency
// relation between them.
inline BoundaryFacts derive_boundary(const KnowledgeBase& kb, DimPair d, const MapFacts& mf)
{
	using namespace analyzer_detail;
	BoundaryFacts out;
	const int n = d.n, q = d.q;

	if (n % 2 != 0) {
		note(out, {"bdy.odd",
		           detail::cat("chi(S^", n, ") = 0: the boundary homomorphism is zero on"
		                       " all of pi_", d.m, "(S^", n, "), every class is loose by"
		                       " small deformation")});
		out.boundary.set(Truth::Yes, "derived: odd-dimensional target");
		out.e_boundary.set(Truth::Yes, "derived: odd-dimensional target");
	} else if (q > 8) {
		note(out, {"bdy.range",
		           detail::cat("degree of nonstability q = ", q, " lies outside the"
		                       " tabulated range 1..8; no derivation applies")});
	} else if (q == 1) {
		Truth dz = tri(mf.double_zero);
		note(out, {"bdy.q1.nielsen",
		           "for m = 2n-2 the suspended boundary of [f] is 2[f] up to sign, so"
		           " it vanishes exactly if 2[f] = 0"});
		out.e_boundary.set(dz, "derived from double_zero (q=1)");
		if (n == 2 || n == 4 || n == 8) {
			note(out, {"bdy.q1.hopf-dims",
			           detail::cat("for n = ", n, " the suspension is injective, so the"
			                       " boundary of [f] vanishes exactly if 2[f] = 0")});
			out.boundary.set(dz, "derived from double_zero (q=1, n in {2,4,8})");
		} else {
			Truth ki = effective_kervaire(mf, n, out);
			note(out, {"bdy.q1.kervaire",
			           "on classes with 2[f] = 0 the boundary vanishes exactly if the"
			           " Kervaire invariant of [f] is zero"});
			out.boundary.set(and3(dz, not3(ki)),
			                 "derived from double_zero and the Kervaire bit (q=1)");
		}
	} else if (q == 2) {
		Truth t = tri(mf.torsion_le_2);
		if (n == 4 || n == 8) {
			note(out, {"bdy.q2.excluded",
			           detail::cat("the q=2 torsion criterion is stated only for"
			                       " n != 4, 8; nothing is derived at n = ", n)});
		} else if (n % 4 == 2 && n >= 6) {
			note(out, {"bdy.q2.torsion",
			           "the suspended boundary of [f] vanishes exactly if the torsion"
			           " part of [f] has order at most 2"});
			out.e_boundary.set(t, "derived from torsion_le_2 (q=2)");
			note(out, {"bdy.q2.hopf",
			           detail::cat("for n = ", n, " = 2 mod 4 the boundary of [f]"
			                       " vanishes exactly if additionally the Hopf invariant"
			                       " H(f) is divisible by 4")});
			out.boundary.set(and3(t, tri(mf.hopf_half_even)),
			                 "derived from torsion_le_2 and hopf_half_even (q=2)");
		} else {
			note(out, {"bdy.q2.equal",
			           detail::cat("for n = ", n, " (n = 2 or n = 0 mod 4) the boundary"
			                       " and its suspension vanish together, exactly when the"
			                       " torsion part of [f] has order at most 2")});
			out.boundary.set(t, "derived from torsion_le_2 (q=2)");
			out.e_boundary.set(t, "derived from torsion_le_2 (q=2)");
		}
	} else if (q == 3) {
		if (n % 4 == 0 || n == 2 || n == 6) {
			Truth vi = criterion_vi(mf, n, out);
			note(out, {"bdy.q3.criterion",
			           "the boundary of [f] and its suspension vanish together, exactly"
			           " when 2[f] = [iota_n,iota_n] o h0([f])"});
			out.boundary.set(vi, "derived from the criterion 2[f]=[iota,iota]h0([f]) (q=3)");
			out.e_boundary.set(vi, "derived from the criterion 2[f]=[iota,iota]h0([f]) (q=3)");
		} else {
			note(out, {"bdy.q3.nielsen",
			           "the suspended boundary of [f] vanishes exactly if 2[f] = 0"});
			out.e_boundary.set(tri(mf.double_zero), "derived from double_zero (q=3)");
			note(out, {"bdy.q3.desusp",
			           detail::cat("for n = ", n, " = 2 mod 4, n >= 10, the boundary of"
			                       " [f] vanishes exactly if [f] desuspends to a class g"
			                       " with 2g = 0; in particular 2[f] = 0 is necessary")});
			out.boundary.set(and3(tri(mf.double_zero), tri(mf.desusp_double_zero)),
			                 "derived from double_zero and desusp_double_zero (q=3)");
		}
	} else if (q == 6) {
		note(out, {"bdy.q6.double",
		           "for q = 6 the boundary of [f] and its suspension vanish together,"
		           " exactly when 2[f] = 0"});
		out.boundary.set(tri(mf.double_zero), "derived from double_zero (q=6)");
		out.e_boundary.set(tri(mf.double_zero), "derived from double_zero (q=6)");
	} else {
		Verdict surj = e_surjective(kb, d);
		if (surj.is_yes()) {
			note(out, {"bdy.generic.surj",
			           detail::cat("the suspension onto pi_", d.m, "(S^", n, ") is"
			                       " surjective, so the suspended boundary of [f] is"
			                       " 2[f] up to sign and vanishes exactly if 2[f] = 0")});
			out.e_boundary.set(tri(mf.double_zero),
			                   detail::cat("derived from double_zero (q=", q, ", E onto)"));
		} else {
			note(out, {"bdy.generic.unknown",
			           detail::cat("no boundary criterion applies at q = ", q,
			                       " without surjectivity of the suspension")});
		}
	}

	// Caller-supplied overrides win over gaps and must agree with derivations.
	auto merge = [&](Tracked& slot, std::optional<bool> f, const char* name) {
		if (!f) return;
		Truth t = tri(f);
		std::string source = detail::cat("supplied fact ", name, "=", *f ? "true" : "false");
		if (slot.v == Truth::Open) {
			slot.set(t, source);
			note(out, {"bdy.fact", detail::cat(source, " adopted as given")});
		} else if (slot.v != t) {
			throw InconsistentFacts(source, slot.origin,
			                        "the supplied fact contradicts the derived value");
		}
	};
	merge(out.boundary, mf.boundary_zero, "boundary_zero");
	merge(out.e_boundary, mf.e_boundary_zero, "e_boundary_zero");

	// A vanishing boundary forces a vanishing suspended boundary.
	if (out.boundary.v == Truth::Yes && out.e_boundary.v == Truth::No)
		throw InconsistentFacts(out.boundary.origin, out.e_boundary.origin,
		                        "a vanishing boundary forces a vanishing suspended boundary");
	if (out.boundary.v == Truth::Yes && out.e_boundary.v == Truth::Open) {
		out.e_boundary.set(Truth::Yes, detail::cat("propagated from ", out.boundary.origin));
		note(out, {"bdy.propagate", "the boundary of [f] vanishes, hence so does its suspension"});
	} else if (out.e_boundary.v == Truth::No && out.boundary.v == Truth::Open) {
		out.boundary.set(Truth::No, detail::cat("propagated from ", out.e_boundary.origin));
		note(out, {"bdy.propagate",
		           "the suspended boundary of [f] is nonzero, hence so is the boundary"});
	}

	// With ker E = 0 the two obstructions are equivalent.
	if (n % 2 == 0 && q <= 8 && kernel_of_E(kb, d).trivial()) {
		if (out.boundary.v != out.e_boundary.v) {
			if (out.boundary.v == Truth::Open) {
				out.boundary.set(out.e_boundary.v,
				                 detail::cat("unified (ker E = 0) from ", out.e_boundary.origin));
				note(out, {"bdy.unify",
				           "the suspension is injective here, so the boundary and its"
				           " suspension vanish together"});
			} else if (out.e_boundary.v == Truth::Open) {
				out.e_boundary.set(out.boundary.v,
				                   detail::cat("unified (ker E = 0) from ", out.boundary.origin));
				note(out, {"bdy.unify",
				           "the suspension is injective here, so the boundary and its"
				           " suspension vanish together"});
			} else {
				throw InconsistentFacts(out.boundary.origin, out.e_boundary.origin,
				                        "the suspension is injective here, so the boundary"
				                        " and its suspension must vanish together");
			}
		}
	}

	return out;
}

// Full self-coincidence report for maps S^m -> S^n/G in the class [f].
struct AnalysisReport {
	DimPair dims{1, 1, 2};
	GroupContext group;
	Truth boundary_vanishes = Truth::Open;
	Truth e_boundary_vanishes = Truth::Open;
	Count nielsen, mcc, mc;
	Verdict loose = Verdict::open({"out.unset", "not yet analyzed"});
	Verdict loose_by_small_deformation = Verdict::open({"out.unset", "not yet analyzed"});
	Verdict seven_conditions = Verdict::open({"out.unset", "not yet analyzed"});
	Verdict wecken = Verdict::open({"out.unset", "not yet analyzed"});
	std::vector<Citation> fired_rules;

	bool fully_determined() const
	{
		return nielsen.determined() && mcc.determined() && mc.determined()
		       && loose.determined() && loose_by_small_deformation.determined()
		       && seven_conditions.determined() && wecken.determined();
	}
};

namespace analyzer_detail {

inline Verdict truth_verdict(Truth t, Citation why)
{
	switch (t) {
	case Truth::Yes: return Verdict::yes(std::move(why));
	case Truth::No: return Verdict::no(std::move(why));
	default: return Verdict::open(std::move(why));
	}
}

} // namespace analyzer_detail

inline AnalysisReport analyze_self(const KnowledgeBase& kb, DimPair d,
                                   const GroupContext& g, const MapFacts& mf)
{
	using namespace analyzer_detail;
	AnalysisReport r;
	r.dims = d;
	r.group = g;

	BoundaryFacts b = derive_boundary(kb, d, mf);
	r.wecken = wecken_condition(kb, d);

	// A class with vanishing Nielsen number that is not loose by small
	// deformation is exactly a witness against the Wecken condition.
	if (r.wecken.is_yes() && b.boundary.v == Truth::No && b.e_boundary.v == Truth::Yes)
		throw InconsistentFacts(b.boundary.origin, b.e_boundary.origin,
		                        detail::cat("the Wecken condition holds for (", d.m, ",", d.n,
		                                    "): every class with vanishing suspended boundary"
		                                    " also has vanishing boundary"));

	r.boundary_vanishes = b.boundary.v;
	r.e_boundary_vanishes = b.e_boundary.v;
	r.fired_rules = b.notes;

	Citation nielsen_rule{"out.nielsen", "N#(f,f) = 0 exactly if the suspended boundary"
	                                     " of [f] vanishes; otherwise N#(f,f) = 1"};
	r.nielsen = Count::zero_iff(b.e_boundary.v);
	r.fired_rules.push_back(nielsen_rule);

	Citation lbsd_rule{"out.lbsd", "(f,f) is loose by small deformation exactly if the"
	                               " boundary of [f] vanishes"};
	r.loose_by_small_deformation = truth_verdict(b.boundary.v, lbsd_rule);
	r.fired_rules.push_back(lbsd_rule);

	Truth loose_t;
	Citation loose_rule{"", ""};
	switch (g.kind) {
	case DeckGroup::Z2:
		loose_t = b.boundary.v;
		loose_rule = {"out.loose.z2",
		              "for a free action of Z/2 the pair (f,f) is loose exactly if it"
		              " is loose by small deformation"};
		break;
	case DeckGroup::Trivial:
		loose_t = b.e_boundary.v;
		loose_rule = {"out.loose.trivial",
		              "for the trivial deck group (f,f) is loose exactly if its Nielsen"
		              " number vanishes"};
		break;
	default:
		loose_t = b.e_boundary.v;
		loose_rule = {"out.loose.other",
		              "for a deck group of order at least 3 the implication ladder"
		              " collapses: (f,f) is loose exactly if its Nielsen number vanishes"};
		break;
	}
	r.loose = truth_verdict(loose_t, loose_rule);
	r.fired_rules.push_back(loose_rule);

	Citation mcc_rule{"out.mcc", "MCC(f,f) = 0 exactly if (f,f) is loose; otherwise"
	                             " MCC(f,f) = 1"};
	r.mcc = Count::zero_iff(loose_t);
	r.fired_rules.push_back(mcc_rule);

	Citation mc_rule{"out.mc", "MC(f,f) = MCC(f,f): the minimum numbers of coincidence"
	                           " points and components agree for these pairs"};
	r.mc = r.mcc;
	r.fired_rules.push_back(mc_rule);

	Truth seven_t;
	Citation seven_rule{"", ""};
	switch (g.kind) {
	case DeckGroup::Z2:
		seven_t = and3(not3(b.boundary.v), b.e_boundary.v);
		seven_rule = {"out.seven.z2",
		              "the cluster of seven equivalent conditions holds exactly if the"
		              " boundary of [f] is nonzero while its suspension vanishes"};
		break;
	case DeckGroup::Trivial:
		seven_t = Truth::No;
		seven_rule = {"out.seven.trivial",
		              "the seven-conditions cluster requires a nontrivial deck group"};
		break;
	default:
		seven_t = Truth::No;
		seven_rule = {"out.seven.other",
		              "none of the seven conditions can hold when the deck group is"
		              " not of order 2"};
		break;
	}
	r.seven_conditions = truth_verdict(seven_t, seven_rule);
	r.fired_rules.push_back(seven_rule);

	for (const Citation& c : r.wecken.provenance) r.fired_rules.push_back(c);
	return r;
}

// Pair analysis for two maps f1, f2: S^m -> S^n/G.
enum class PairRule { MccEqualsNielsen, ReduceToSelfCase };

struct PairReport {
	PairRule rule;
	std::vector<Citation> notes;
};

inline PairReport analyze_pair(DimPair d, const GroupContext&, bool homotopic)
{
	(void)d;
	if (!homotopic)
		return {PairRule::MccEqualsNielsen,
		        {{"pair.nonhomotopic",
		          "if MCC(f1,f2) and N#(f1,f2) differed, f1 and f2 would have to be"
		          " homotopic; they are not, so MCC(f1,f2) = N#(f1,f2)"}}};
	return {PairRule::ReduceToSelfCase,
	        {{"pair.homotopic",
	          "homotopic maps share all coincidence invariants with the self-pair"
	          " (f,f); analyze the self-coincidence case"}}};
}

} // namespace selfco
