#include <catch2/catch_amalgamated.hpp>

#include <selfco/homotopy.hpp>
#include <selfco/kb.hpp>

#include "oracle.hpp"

using namespace selfco;

namespace {
const KnowledgeBase& kb() { return default_kb(); }

ElemOrder from_oracle(long v)
{
	return v == -1 ? ElemOrder::infinite() : ElemOrder::finite(v);
}
} // namespace

TEST_CASE("stable stem rows")
{
	const StemEntry& s0 = stem_entry(kb(), 0);
	CHECK(s0.generator == Generator::Iota);
	CHECK(s0.generator_order == ElemOrder::infinite());

	const StemEntry& s3 = stem_entry(kb(), 3);
	CHECK(s3.generator == Generator::Nu);
	CHECK(s3.generator_order == ElemOrder::finite(24));

	const StemEntry& s4 = stem_entry(kb(), 4);
	CHECK_FALSE(s4.generator.has_value());
	CHECK(s4.group_is_trivial);

	const StemEntry& s8 = stem_entry(kb(), 8);
	CHECK_FALSE(s8.generator.has_value());
	CHECK_FALSE(s8.group_is_trivial);

	CHECK_THROWS_AS(stem_entry(kb(), 9), DomainError);
	CHECK_THROWS_AS(stem_entry(kb(), -1), DomainError);
}

TEST_CASE("frozen Whitehead-product orders")
{
	CHECK(whitehead_order(kb(), Generator::Iota, 3) == ElemOrder::finite(1));
	CHECK(whitehead_order(kb(), Generator::Iota, 2) == ElemOrder::infinite());
	CHECK(whitehead_order(kb(), Generator::Iota, 9) == ElemOrder::finite(2));
	CHECK(whitehead_order(kb(), Generator::Eta, 7) == ElemOrder::finite(1));
	CHECK(whitehead_order(kb(), Generator::Eta, 9) == ElemOrder::finite(2));
	CHECK(whitehead_order(kb(), Generator::EtaSq, 5) == ElemOrder::finite(1));
	CHECK(whitehead_order(kb(), Generator::Nu, 12) == ElemOrder::finite(12));
	CHECK(whitehead_order(kb(), Generator::Nu, 16) == ElemOrder::finite(24));
	CHECK(whitehead_order(kb(), Generator::Nu, 13) == ElemOrder::finite(1)); // 13 = 2^4 - 3
	CHECK(whitehead_order(kb(), Generator::NuSq, 11) == ElemOrder::finite(1)); // 11 = 2^4 - 5
	CHECK(whitehead_order(kb(), Generator::Sigma, 8) == ElemOrder::finite(120));
	CHECK(whitehead_order(kb(), Generator::Sigma, 11) == ElemOrder::finite(1));
	CHECK(whitehead_order(kb(), Generator::Sigma, 20) == ElemOrder::finite(240));
}

TEST_CASE("vanishing predicate and labels")
{
	CHECK(whitehead_vanishes(kb(), Generator::Eta, 7));
	CHECK(whitehead_vanishes(kb(), Generator::NuSq, 11));
	CHECK_FALSE(whitehead_vanishes(kb(), Generator::Eta, 9));
	CHECK(product_label(Generator::Nu, 15) == "[iota_15,nu_15]");
	CHECK(product_label(Generator::EtaSq, 9) == "[iota_9,eta^2_9]");
}

TEST_CASE("base-dimension guards")
{
	CHECK_THROWS_AS(whitehead_order(kb(), Generator::Iota, 0), DomainError);
	CHECK_THROWS_AS(whitehead_order(kb(), Generator::Eta, 1), DomainError);
	CHECK_THROWS_AS(whitehead_order(kb(), Generator::Nu, 3), DomainError);
	CHECK_THROWS_AS(whitehead_order(kb(), Generator::Sigma, 7), DomainError);
}

TEST_CASE("order formulas agree with the independent oracle up to j = 10000")
{
	for (long j = 1; j <= 10000; ++j) {
		CAPTURE(j);
		REQUIRE(whitehead_order(kb(), Generator::Iota, j)
		        == from_oracle(oracle::iota_order(j)));
		if (j >= 2) {
			REQUIRE(whitehead_order(kb(), Generator::Eta, j)
			        == from_oracle(oracle::eta_order(j)));
			REQUIRE(whitehead_order(kb(), Generator::EtaSq, j)
			        == from_oracle(oracle::etasq_order(j)));
		}
		if (j >= 4) {
			REQUIRE(whitehead_order(kb(), Generator::Nu, j)
			        == from_oracle(oracle::nu_order(j)));
			REQUIRE(whitehead_order(kb(), Generator::NuSq, j)
			        == from_oracle(oracle::nusq_order(j)));
		}
		if (j >= 8)
			REQUIRE(whitehead_order(kb(), Generator::Sigma, j)
			        == from_oracle(oracle::sigma_order(j)));
	}
}

TEST_CASE("sphere Euler characteristics")
{
	CHECK(euler_char_sphere(4) == 2);
	CHECK(euler_char_sphere(2) == 2);
	CHECK(euler_char_sphere(7) == 0);
	CHECK(euler_char_sphere(1) == 0);
	CHECK_THROWS_AS(euler_char_sphere(0), DomainError);
}
