#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brpic/error.hpp"
#include "brpic/group.hpp"

#include <algorithm>
#include <set>

using namespace brpic;

TEST_CASE("validate_group accepts the axioms and rejects violations")
{
    SUBCASE("trivial group")
    {
        FiniteGroup g = validate_group({{0}});
        CHECK(g.order == 1);
        CHECK(g.inv(0) == 0);
    }
    SUBCASE("Z/2")
    {
        FiniteGroup g = validate_group({{0, 1}, {1, 0}});
        CHECK(g.order == 2);
        CHECK(g.mul(1, 1) == 0);
    }
    SUBCASE("missing inverse is named")
    {
        // table[1][1] = 1 in a 2-element candidate: 1 has no inverse
        CHECK_THROWS_WITH_AS(validate_group({{0, 1}, {1, 1}}),
                             doctest::Contains("element 1"), Error);
    }
    SUBCASE("non-associative table is rejected")
    {
        // a "multiplication" with two idempotent non-identity rows
        std::vector<std::vector<int>> t = {{0, 1, 2}, {1, 1, 0}, {2, 0, 2}};
        CHECK_THROWS_AS(validate_group(t), Error);
    }
    SUBCASE("identity is re-indexed to 0")
    {
        // Z/2 with the identity listed second
        FiniteGroup g = validate_group({{1, 0}, {0, 1}});
        CHECK(g.mul(0, 1) == 1);
        CHECK(g.mul(1, 1) == 0);
    }
}

TEST_CASE("double cosets in S3")
{
    auto s3 = symmetric_group_3();
    const FiniteGroup& g = s3.group;
    CHECK(g.order == 6);

    // locate a transposition and a 3-cycle through the natural action
    int transposition = -1, three_cycle = -1;
    for (int e = 1; e < 6; ++e) {
        if (g.element_order(e) == 2 && transposition < 0) transposition = e;
        if (g.element_order(e) == 3 && three_cycle < 0) three_cycle = e;
    }
    REQUIRE(transposition >= 0);
    REQUIRE(three_cycle >= 0);

    Subgroup t = generated_subgroup(g, {transposition});
    CHECK(t.size() == 2);

    auto dc = double_coset(t, three_cycle, g);
    CHECK(dc.size() == 4);

    SUBCASE("trivial subgroup gives singletons, full subgroup gives everything")
    {
        CHECK(double_coset(trivial_subgroup(), three_cycle, g) ==
              std::vector<int>{three_cycle});
        CHECK(double_coset(full_subgroup(g), transposition, g).size() == 6);
    }

    SUBCASE("size formula |GgG| = |G|^2 / |G meet gGg^-1| over all subgroups")
    {
        // every subgroup of S3: trivial, three order-2, one order-3, full
        std::set<std::vector<int>> subgroups;
        for (int e = 0; e < 6; ++e) subgroups.insert(generated_subgroup(g, {e}).elements);
        subgroups.insert(full_subgroup(g).elements);
        CHECK(subgroups.size() == 6);

        for (const auto& elems : subgroups) {
            Subgroup h = make_subgroup(g, elems);
            for (int x = 0; x < 6; ++x) {
                auto coset = double_coset(h, x, g);
                int meet = 0;
                std::set<int> conj;
                for (int a : h.elements) conj.insert(g.mul(g.mul(x, a), g.inv(x)));
                for (int a : h.elements)
                    if (conj.count(a)) ++meet;
                CHECK(static_cast<int>(coset.size()) * meet == h.size() * h.size());
            }
        }
    }

    SUBCASE("double coset is a union of left and right cosets")
    {
        auto coset = double_coset(t, three_cycle, g);
        std::set<int> dcset(coset.begin(), coset.end());
        for (int x : coset) {
            for (int a : t.elements) {
                CHECK(dcset.count(g.mul(a, x)));
                CHECK(dcset.count(g.mul(x, a)));
            }
        }
    }
}

TEST_CASE("double coset union closure")
{
    auto s3 = symmetric_group_3();
    const FiniteGroup& g = s3.group;
    int transposition = -1, three_cycle = -1;
    for (int e = 1; e < 6; ++e) {
        if (g.element_order(e) == 2 && transposition < 0) transposition = e;
        if (g.element_order(e) == 3 && three_cycle < 0) three_cycle = e;
    }
    Subgroup t = generated_subgroup(g, {transposition});

    SUBCASE("identity representative reproduces G")
    {
        auto u = double_coset_union_closure(g, t, {0});
        CHECK(u.closed);
        CHECK(u.elements == t.elements);
    }
    SUBCASE("transposition subgroup and a 3-cycle generate all of S3")
    {
        auto u = double_coset_union_closure(g, t, {three_cycle});
        CHECK(u.closed);
        CHECK(u.elements.size() == 6);
        CHECK(u.subgroup.size() == 6);
    }
    SUBCASE("a non-closed union is reported, not thrown")
    {
        FiniteGroup z4 = cyclic_group(4);
        auto u = double_coset_union_closure(z4, trivial_subgroup(), {1});
        CHECK_FALSE(u.closed);
        CHECK(u.elements == std::vector<int>{0, 1});
        // witness pair multiplies outside H
        std::set<int> h(u.elements.begin(), u.elements.end());
        CHECK_FALSE(h.count(z4.mul(u.witness.first, u.witness.second)));
    }
    SUBCASE("closed union satisfies the subgroup invariants")
    {
        auto u = double_coset_union_closure(g, t, {three_cycle, transposition});
        CHECK(u.closed);
        CHECK(is_subgroup(g, u.elements));
    }
}

TEST_CASE("orbit partitions")
{
    auto s3 = symmetric_group_3();
    const FiniteGroup& g = s3.group;
    const GroupAction& act = s3.natural_action;

    SUBCASE("trivial subgroup: singletons")
    {
        auto parts = orbits(g, act, trivial_subgroup());
        CHECK(parts == std::vector<std::vector<int>>{{0}, {1}, {2}});
    }
    SUBCASE("full group: one orbit")
    {
        auto parts = orbits(g, act, full_subgroup(g));
        CHECK(parts == std::vector<std::vector<int>>{{0, 1, 2}});
    }
    SUBCASE("stabilizer of a point fixes it and swaps the rest")
    {
        Subgroup stab = stabilizer(g, act, 0);
        CHECK(stab.size() == 2);
        auto parts = orbits(g, act, stab);
        CHECK(parts == std::vector<std::vector<int>>{{0}, {1, 2}});
    }
    SUBCASE("orbits partition the set and are closed under the action")
    {
        for (int point = 0; point < 3; ++point) {
            Subgroup stab = stabilizer(g, act, point);
            auto parts = orbits(g, act, stab);
            std::set<int> seen;
            for (const auto& orbit : parts) {
                for (int x : orbit) {
                    CHECK_FALSE(seen.count(x));
                    seen.insert(x);
                    for (int e : stab.elements) {
                        const auto& o = orbit;
                        CHECK(std::find(o.begin(), o.end(), act.apply(e, x)) != o.end());
                    }
                }
            }
            CHECK(seen.size() == 3);
        }
    }
}

TEST_CASE("generated subgroups")
{
    CHECK(generated_subgroup(cyclic_group(4), {0}).elements == std::vector<int>{0});
    CHECK(generated_subgroup(cyclic_group(4), {2}).elements == std::vector<int>{0, 2});
    auto s3 = symmetric_group_3();
    int transposition = -1, three_cycle = -1;
    for (int e = 1; e < 6; ++e) {
        if (s3.group.element_order(e) == 2 && transposition < 0) transposition = e;
        if (s3.group.element_order(e) == 3 && three_cycle < 0) three_cycle = e;
    }
    CHECK(generated_subgroup(s3.group, {transposition, three_cycle}).size() == 6);
}

TEST_CASE("abelian invariants")
{
    CHECK(abelian_invariants(cyclic_group(6)) == std::vector<long>{6});
    CHECK(abelian_invariants(klein_four_group()) == std::vector<long>{2, 2});
    CHECK(abelian_invariants(cyclic_group(4)) == std::vector<long>{4});
    CHECK(abelian_invariants(direct_product(cyclic_group(2), cyclic_group(4))) ==
          std::vector<long>{2, 4});
    CHECK(abelian_invariants(validate_group({{0}})).empty());
    CHECK_THROWS_AS(abelian_invariants(symmetric_group_3().group), Error);
}

TEST_CASE("permutation input expands to a table with identity first")
{
    auto e = group_from_permutations(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
    CHECK(e.group.order == 4);
    CHECK(abelian_invariants(e.group) == std::vector<long>{2, 2});
}
