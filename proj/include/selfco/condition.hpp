#pragma once

// Mini-language for dimension conditions in fact files. An expression is a
// conjunction of atoms joined by '&':
//
//   j=K            j equals K
//   j%M=R          j is congruent to R mod M
//   j>=K           j is at least K
//   j=2^i-K,i>=I   j has the form 2^i - K for some i >= I
//
// No whitespace. Anything else is rejected with a ParseError.

#include "selfco/core.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace selfco {

struct Condition {
	struct Atom {
		enum class Kind { Eq, Mod, Ge, PowMinus };
		Kind kind = Kind::Eq;
		long a = 0; // Eq/Ge: K; Mod: M; PowMinus: K
		long b = 0; // Mod: R; PowMinus: minimal i
	};

	std::vector<Atom> atoms;
	std::string text;

	static Condition parse(std::string_view s)
	{
		if (s.empty()) throw ParseError("empty condition");
		Condition c;
		c.text = std::string(s);
		size_t pos = 0;
		while (true) {
			size_t amp = s.find('&', pos);
			std::string_view atom = s.substr(pos, amp == std::string_view::npos
			                                          ? std::string_view::npos
			                                          : amp - pos);
			c.atoms.push_back(parse_atom(atom));
			if (amp == std::string_view::npos) break;
			pos = amp + 1;
		}
		return c;
	}

	bool eval(long j) const
	{
		for (const Atom& a : atoms)
			if (!eval_atom(a, j)) return false;
		return true;
	}

private:
	static bool eval_atom(const Atom& a, long j)
	{
		switch (a.kind) {
		case Atom::Kind::Eq:
			return j == a.a;
		case Atom::Kind::Mod:
			return j >= 0 && j % a.a == a.b;
		case Atom::Kind::Ge:
			return j >= a.a;
		case Atom::Kind::PowMinus: {
			long v = j + a.a;
			if (v < (1L << a.b)) return false;
			return (v & (v - 1)) == 0;
		}
		}
		return false;
	}

	static long take_number(std::string_view s, size_t& pos)
	{
		size_t start = pos;
		while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
		if (pos == start)
			throw ParseError(detail::cat("expected number in condition '", s, "'"));
		if (pos - start > 12)
			throw ParseError(detail::cat("number too large in condition '", s, "'"));
		long v = 0;
		for (size_t i = start; i < pos; ++i) v = v * 10 + (s[i] - '0');
		return v;
	}

	static bool eat(std::string_view s, size_t& pos, std::string_view lit)
	{
		if (s.substr(pos, lit.size()) != lit) return false;
		pos += lit.size();
		return true;
	}

	static Atom parse_atom(std::string_view s)
	{
		Atom a;
		size_t pos = 0;
		if (eat(s, pos, "j%")) {
			a.kind = Atom::Kind::Mod;
			a.a = take_number(s, pos);
			if (a.a <= 0) throw ParseError(detail::cat("bad modulus in '", s, "'"));
			if (!eat(s, pos, "="))
				throw ParseError(detail::cat("expected '=' in '", s, "'"));
			a.b = take_number(s, pos);
			if (a.b < 0 || a.b >= a.a)
				throw ParseError(detail::cat("residue out of range in '", s, "'"));
		} else if (eat(s, pos, "j>=")) {
			a.kind = Atom::Kind::Ge;
			a.a = take_number(s, pos);
		} else if (eat(s, pos, "j=2^i-")) {
			a.kind = Atom::Kind::PowMinus;
			a.a = take_number(s, pos);
			if (!eat(s, pos, ",i>="))
				throw ParseError(detail::cat("expected ',i>=' in '", s, "'"));
			a.b = take_number(s, pos);
			if (a.b < 0 || a.b > 40)
				throw ParseError(detail::cat("exponent bound out of range in '", s, "'"));
		} else if (eat(s, pos, "j=")) {
			a.kind = Atom::Kind::Eq;
			a.a = take_number(s, pos);
		} else {
			throw ParseError(detail::cat("unknown token in condition '", s, "'"));
		}
		if (pos != s.size())
			throw ParseError(detail::cat("trailing garbage in condition '", s, "'"));
		return a;
	}
};

} // namespace selfco
