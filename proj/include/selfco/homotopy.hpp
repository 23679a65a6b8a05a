#pragma once

// Stable-stem lookups and Whitehead product orders, driven entirely by the
// loaded fact records. Pure functions over an immutable KnowledgeBase.

#include "selfco/core.hpp"
#include "selfco/fact_file.hpp"

namespace selfco {

// Row of the stable k-stem table, k in 0..8.
inline const StemEntry& stem_entry(const KnowledgeBase& kb, int k)
{
	if (k < 0 || k > 8)
		throw DomainError(detail::cat("stem index ", k, " outside the tabulated range 0..8"));
	return *kb.stems[k];
}

// Order of [iota_j, g_j] in pi_*(S^j). Record order in the fact file is
// significant: the first matching condition wins.
inline ElemOrder whitehead_order(const KnowledgeBase& kb, Generator g, int j)
{
	if (j < min_base_dim(g))
		throw DomainError(detail::cat("whitehead_order: base dimension ", j,
		                              " is below the least dimension ", min_base_dim(g),
		                              " carrying ", generator_label(g)));
	for (const WpRule& r : kb.wporder.at(g))
		if (r.cond.eval(j)) return r.order;
	throw DomainError(detail::cat("no product-order rule matches ", product_label(g, j)));
}

inline bool whitehead_vanishes(const KnowledgeBase& kb, Generator g, int j)
{
	return whitehead_order(kb, g, j).is_one();
}

} // namespace selfco
