#include <catch2/catch_amalgamated.hpp>

#include <selfco/kb.hpp>
#include <selfco/wecken.hpp>

#include "oracle.hpp"

using namespace selfco;

namespace {
const KnowledgeBase& kb() { return default_kb(); }

char code(const Verdict& v)
{
	switch (v.value) {
	case Truth::Yes: return 'H';
	case Truth::No: return 'F';
	case Truth::Conditional: return 'C';
	default: return 'O';
	}
}
} // namespace

TEST_CASE("worked Wecken verdicts")
{
	CHECK(wecken_condition(kb(), DimPair::of(30, 16)).is_no());
	CHECK(wecken_condition(kb(), DimPair::of(254, 128)).value == Truth::Open);
	CHECK(wecken_condition(kb(), DimPair::of(11, 6)).is_no());
	CHECK(wecken_condition(kb(), DimPair::of(31, 14)).is_yes());
	CHECK(wecken_condition(kb(), DimPair::of(62, 32)).is_no());  // q = 1, n = 32
	CHECK(wecken_condition(kb(), DimPair::of(36, 18)).is_no());  // q = 3, n = 18

	Verdict c = wecken_condition(kb(), DimPair::of(24, 10));
	CHECK(c.value == Truth::Conditional);
	CHECK(c.condition == "halvable([iota_9,nu^2_9])");
}

TEST_CASE("odd targets and low codimension always hold")
{
	CHECK(wecken_condition(kb(), DimPair::of(19, 7)).is_yes());
	CHECK(wecken_condition(kb(), DimPair::of(100, 9)).is_yes());
	CHECK(wecken_condition(kb(), DimPair::of(9, 3)).is_yes());
	CHECK(wecken_condition(kb(), DimPair::of(7, 2)).is_yes());   // target S^2
	CHECK(wecken_condition(kb(), DimPair::of(13, 8)).is_yes());  // codim 5
}

TEST_CASE("outside the tabulated q-range the verdict is open")
{
	Verdict v = wecken_condition(kb(), DimPair::of(30, 10)); // q = 13
	CHECK(v.value == Truth::Open);
	REQUIRE_FALSE(v.provenance.empty());
	CHECK(v.provenance[0].rule == "wecken.range");
}

TEST_CASE("grid agrees with the independent oracle")
{
	for (int q = -2; q <= 8; ++q)
		for (int n = 2; n <= 256; n += 2) {
			int m = q + 2 * n - 3;
			if (m < 1) continue;
			CAPTURE(q, n);
			REQUIRE(code(wecken_condition(kb(), DimPair::of(m, n))) == oracle::wecken(q, n));
		}
}

TEST_CASE("structural invariants on the grid")
{
	for (int q = -2; q <= 8; ++q)
		for (int n = 2; n <= 256; n += 2) {
			int m = q + 2 * n - 3;
			if (m < 1) continue;
			CAPTURE(q, n);
			DimPair d = DimPair::of(m, n);
			Verdict w = wecken_condition(kb(), d);

			// E injective forces the condition to hold.
			if (q >= 1 && e_injective(kb(), d).is_yes()) REQUIRE(w.is_yes());

			// A failure needs an even target and a Z/2 kernel.
			if (w.is_no()) {
				REQUIRE(n % 2 == 0);
				REQUIRE(kernel_of_E(kb(), d).kind == KernelDesc::Kind::Z2);
			}

			// The low-codimension shortcut is a shortcut, not an axiom.
			Verdict slow = wecken_condition_impl(kb(), d, false);
			REQUIRE(w.value == slow.value);
			if (w.value == Truth::Conditional) REQUIRE(w.condition == slow.condition);

			REQUIRE_FALSE(w.provenance.empty());
		}
}
