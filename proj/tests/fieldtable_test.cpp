#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brpic/error.hpp"
#include "brpic/fieldtable.hpp"

using namespace brpic;

TEST_CASE("Brauer groups")
{
    CHECK(brauer_group(BaseField::reals()).factors == std::vector<long>{2});
    CHECK(brauer_group(BaseField::complexes()).is_trivial());
    CHECK(brauer_group(BaseField::finite(5)).is_trivial());
    CHECK(brauer_group(BaseField::finite(4)).is_trivial()); // prime powers allowed
    CHECK_THROWS_AS(BaseField::finite(6), Error);
    CHECK_THROWS_AS(BaseField::finite(1), Error);

    BaseField k = BaseField::abstract_field("K", FinAb::of({3}), FinAb::trivial(), false);
    CHECK(brauer_group(k).factors == std::vector<long>{3});
    CHECK_THROWS_WITH_AS(brauer_group(rational_function_field_Cxyz()),
                         doctest::Contains("UnsupportedField"), Error);
}

TEST_CASE("H^1 always vanishes")
{
    for (const auto& f : {BaseField::reals(), BaseField::complexes(), BaseField::finite(9),
                          rational_function_field_Cxyz()})
        CHECK(h1_gm(f).is_trivial());
}

TEST_CASE("H^3 column")
{
    CHECK(h3_gm(BaseField::reals()).known_trivial());
    CHECK(h3_gm(BaseField::complexes()).known_trivial());
    CHECK(h3_gm(BaseField::finite(7)).known_trivial());

    H3Value v = h3_gm(rational_function_field_Cxyz());
    CHECK(v.nontrivial_unknown);
    CHECK_FALSE(v.known_trivial());
    CHECK(v.to_string() == "NONTRIVIAL-UNKNOWN");

    BaseField k = BaseField::abstract_field("K", FinAb::trivial(), FinAb::of({2}), false);
    CHECK(h3_gm(k).group->factors == std::vector<long>{2});
}

TEST_CASE("the full Gm column")
{
    GmColumn c = gm_column(BaseField::reals());
    CHECK(c.h0_description == "R^x");
    CHECK(c.h2.factors == std::vector<long>{2});
    CHECK(c.h3.known_trivial());
}

TEST_CASE("finite abelian invariant-factor canonicalization")
{
    CHECK(FinAb::of({4, 6}).factors == std::vector<long>{2, 12});
    CHECK(FinAb::of({2, 3}).factors == std::vector<long>{6});
    CHECK(FinAb::of({1, 1}).is_trivial());
    CHECK(FinAb::of({2, 2, 2}).factors == std::vector<long>{2, 2, 2});
    CHECK(FinAb::of({12, 18}).factors == std::vector<long>{6, 36});
    CHECK(FinAb::of({4, 6}).order() == 24);
    CHECK(FinAb::of({2}).to_string() == "Z/2");
    CHECK(FinAb::of({2, 4}).to_string() == "Z/2 x Z/4");
    CHECK(FinAb::trivial().to_string() == "1");
}
