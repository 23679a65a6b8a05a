#pragma once

// Core vocabulary for the selfco decision engine: element orders, four-valued
// verdicts with provenance, sphere-map dimension pairs, and error types.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace selfco {

namespace detail {

template <class... Ts>
std::string cat(Ts&&... parts)
{
	std::ostringstream os;
	(os << ... << parts);
	return os.str();
}

} // namespace detail

// ---------------------------------------------------------------- errors

struct Error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// invalid dimensions, out-of-range table lookups
struct DomainError : Error {
	using Error::Error;
};

// fact-file syntax or semantic problems; message carries file/line context
struct ParseError : Error {
	using Error::Error;
};

// a query lies outside the supported suspension range (q > 8)
struct UnsupportedRange : Error {
	using Error::Error;
};

// two supplied or derived facts contradict each other; names both
struct InconsistentFacts : Error {
	std::string fact_a, fact_b;

	InconsistentFacts(std::string a, std::string b, const std::string& why)
		: Error(detail::cat("inconsistent facts: '", a, "' contradicts '", b,
		                    "': ", why)),
		  fact_a(std::move(a)), fact_b(std::move(b)) {}
};

// ----------------------------------------------------------- ElemOrder

// Order of a group element: a positive integer, infinite, or unknown.
struct ElemOrder {
	enum class Kind { Finite, Infinite, Unknown };

	Kind kind = Kind::Unknown;
	long value = 0; // meaningful only when kind == Finite; always >= 1

	static ElemOrder finite(long v)
	{
		if (v < 1) throw DomainError("element order must be >= 1");
		return {Kind::Finite, v};
	}
	static ElemOrder infinite() { return {Kind::Infinite, 0}; }
	static ElemOrder unknown() { return {Kind::Unknown, 0}; }

	bool is_finite() const { return kind == Kind::Finite; }
	bool is_one() const { return kind == Kind::Finite && value == 1; }
	bool known() const { return kind != Kind::Unknown; }

	friend bool operator==(const ElemOrder& a, const ElemOrder& b)
	{
		return a.kind == b.kind && (a.kind != Kind::Finite || a.value == b.value);
	}
	friend bool operator!=(const ElemOrder& a, const ElemOrder& b) { return !(a == b); }

	std::string str() const
	{
		switch (kind) {
		case Kind::Finite:   return std::to_string(value);
		case Kind::Infinite: return "inf";
		default:             return "unknown";
		}
	}
};

// ----------------------------------------------------------- generators

// The cyclic generators of the stable k-stems used by the engine, k <= 7.
enum class Generator { Iota, Eta, EtaSq, Nu, NuSq, Sigma };

inline constexpr Generator kAllGenerators[] = {
	Generator::Iota, Generator::Eta, Generator::EtaSq,
	Generator::Nu, Generator::NuSq, Generator::Sigma,
};

// smallest base dimension j for which g_j in pi_*(S^j) is defined
inline int min_base_dim(Generator g)
{
	switch (g) {
	case Generator::Iota:  return 1;
	case Generator::Eta:
	case Generator::EtaSq: return 2;
	case Generator::Nu:
	case Generator::NuSq:  return 4;
	case Generator::Sigma: return 8;
	}
	throw DomainError("bad generator");
}

// stem index: g_j lives in pi_{j+stem}(S^j)
inline int stem_of(Generator g)
{
	switch (g) {
	case Generator::Iota:  return 0;
	case Generator::Eta:   return 1;
	case Generator::EtaSq: return 2;
	case Generator::Nu:    return 3;
	case Generator::NuSq:  return 6;
	case Generator::Sigma: return 7;
	}
	throw DomainError("bad generator");
}

inline std::string_view generator_label(Generator g)
{
	switch (g) {
	case Generator::Iota:  return "iota";
	case Generator::Eta:   return "eta";
	case Generator::EtaSq: return "eta^2";
	case Generator::Nu:    return "nu";
	case Generator::NuSq:  return "nu^2";
	case Generator::Sigma: return "sigma";
	}
	return "?";
}

// token used in fact files
inline std::string_view generator_token(Generator g)
{
	switch (g) {
	case Generator::Iota:  return "IOTA";
	case Generator::Eta:   return "ETA";
	case Generator::EtaSq: return "ETASQ";
	case Generator::Nu:    return "NU";
	case Generator::NuSq:  return "NUSQ";
	case Generator::Sigma: return "SIGMA";
	}
	return "?";
}

inline std::optional<Generator> parse_generator(std::string_view tok)
{
	for (Generator g : kAllGenerators)
		if (tok == generator_token(g)) return g;
	return std::nullopt;
}

// "[iota_15,nu_15]"
inline std::string product_label(Generator right, int j)
{
	return detail::cat("[iota_", j, ",", generator_label(right), "_", j, "]");
}

// ------------------------------------------------------------- Verdict

enum class Truth { Yes, No, Open, Conditional };

inline std::string_view truth_label(Truth t)
{
	switch (t) {
	case Truth::Yes:         return "yes";
	case Truth::No:          return "no";
	case Truth::Open:        return "open";
	case Truth::Conditional: return "conditional";
	}
	return "?";
}

// One provenance step: a stable rule id plus a self-contained statement of
// the mathematical fact the rule applied.
struct Citation {
	std::string rule;
	std::string note;

	friend bool operator==(const Citation& a, const Citation& b)
	{
		return a.rule == b.rule && a.note == b.note;
	}
};

// Four-valued answer with a non-empty provenance chain. Conditional carries
// exactly one named undecided premise in `condition`.
struct Verdict {
	Truth value = Truth::Open;
	std::string condition; // set iff value == Conditional
	std::vector<Citation> provenance;

	static Verdict yes(Citation c) { return make(Truth::Yes, {}, std::move(c)); }
	static Verdict no(Citation c) { return make(Truth::No, {}, std::move(c)); }
	static Verdict open(Citation c) { return make(Truth::Open, {}, std::move(c)); }
	static Verdict conditional(std::string cond, Citation c)
	{
		return make(Truth::Conditional, std::move(cond), std::move(c));
	}

	bool is_yes() const { return value == Truth::Yes; }
	bool is_no() const { return value == Truth::No; }
	bool determined() const { return value == Truth::Yes || value == Truth::No; }

	Verdict& also(Citation c)
	{
		provenance.push_back(std::move(c));
		return *this;
	}

	// prepend an already-collected chain (outer rule fired first)
	Verdict& after(const std::vector<Citation>& chain)
	{
		provenance.insert(provenance.begin(), chain.begin(), chain.end());
		return *this;
	}

	std::string str() const
	{
		if (value == Truth::Conditional)
			return detail::cat("conditional(", condition, ")");
		return std::string(truth_label(value));
	}

private:
	static Verdict make(Truth t, std::string cond, Citation c)
	{
		Verdict v;
		v.value = t;
		v.condition = std::move(cond);
		v.provenance.push_back(std::move(c));
		return v;
	}
};

// ------------------------------------------------------------- DimPair

// A map S^m -> S^n/G is studied through its lift S^m -> S^n and the
// suspension E : pi_{m-1}(S^{n-1}) -> pi_m(S^n). The degree of
// nonstability q = m - 2n + 3 locates the query relative to the stable
// range: q <= 0 is stable, and the suspension-ladder derivation applies
// for n >= q + 2 (equivalently m <= 3n - 5).
struct DimPair {
	int m = 0, n = 0;
	int q = 0; // m - 2n + 3

	static DimPair of(int m, int n)
	{
		if (m < 1 || n < 1)
			throw DomainError(detail::cat("dimensions must be >= 1, got m=", m, " n=", n));
		return {m, n, m - 2 * n + 3};
	}

	bool n_even() const { return n % 2 == 0; }
	bool in_suspension_range() const { return n >= q + 2; }
};

// Euler characteristic of S^n: 2 for even n, 0 for odd n. Controls the
// degree of the composite of the suspension with the boundary map.
inline int euler_char_sphere(int n)
{
	if (n < 1) throw DomainError("sphere dimension must be >= 1");
	return n % 2 == 0 ? 2 : 0;
}

} // namespace selfco
