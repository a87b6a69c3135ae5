#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brpic/error.hpp"
#include "brpic/galois.hpp"

#include <algorithm>
#include <set>

using namespace brpic;

namespace {

mpq_class q(long n, long d = 1)
{
    return mpq_class(n, d);
}

// Vec_C-over-R group theory, with the Q-model Q[i]/(x^2+1) as the exact layer
GaloisScenario gaussian_scenario()
{
    GaloisScenario s;
    s.gamma = cyclic_group(2);
    s.root_action.set_size = 2;
    s.root_action.images = {{0, 1}, {1, 0}};
    s.theta_index = 0;
    ConcreteLayer c;
    c.field = std::make_shared<NumberField>(std::vector<mpz_class>{1, 0, 1});
    c.roots = {nf_make(c.field, {q(0), q(1)}), nf_make(c.field, {q(0), q(-1)})};
    c.f = {q(1), q(0), q(1)};
    s.concrete = c;
    return validate_scenario(s);
}

// splitting field of x^3 - 2 inside Q[a]/(a^6 + 108)
GaloisScenario cbrt2_scenario()
{
    auto s3 = symmetric_group_3();
    GaloisScenario s;
    s.gamma = s3.group;
    s.root_action = s3.natural_action;
    s.theta_index = 0;
    ConcreteLayer c;
    c.field = std::make_shared<NumberField>(
        std::vector<mpz_class>{108, 0, 0, 0, 0, 0, 1});
    c.roots = {
        nf_make(c.field, {q(0), q(1, 2), q(0), q(0), q(-1, 36), q(0)}),
        nf_make(c.field, {q(0), q(0), q(0), q(0), q(1, 18), q(0)}),
        nf_make(c.field, {q(0), q(-1, 2), q(0), q(0), q(-1, 36), q(0)}),
    };
    c.f = {q(-2), q(0), q(0), q(1)};
    s.concrete = c;
    return validate_scenario(s);
}

// L = K: one root, trivial group
GaloisScenario split_scenario()
{
    GaloisScenario s;
    s.gamma = validate_group({{0}});
    s.root_action.set_size = 1;
    s.root_action.images = {{0}};
    s.theta_index = 0;
    ConcreteLayer c;
    c.field = std::make_shared<NumberField>(std::vector<mpz_class>{-2, 1}); // x - 2
    c.roots = {nf_rational(c.field, 2)};
    c.f = {q(-2), q(1)};
    s.concrete = c;
    return validate_scenario(s);
}

int find_three_cycle(const FiniteGroup& g)
{
    for (int e = 1; e < g.order; ++e)
        if (g.element_order(e) == 3) return e;
    return -1;
}

} // namespace

TEST_CASE("scenario validation catches inconsistencies")
{
    GaloisScenario s = gaussian_scenario();

    SUBCASE("wrong root value")
    {
        GaloisScenario bad = s;
        bad.concrete->roots[1] = nf_rational(bad.concrete->field, 5);
        CHECK_THROWS_AS(validate_scenario(bad), Error);
    }
    SUBCASE("repeated roots")
    {
        GaloisScenario bad = s;
        bad.concrete->roots[1] = bad.concrete->roots[0];
        CHECK_THROWS_WITH_AS(validate_scenario(bad), doctest::Contains("RepeatedRoot"), Error);
    }
    SUBCASE("field degree must match the group order")
    {
        GaloisScenario bad = s;
        bad.concrete->field =
            std::make_shared<NumberField>(std::vector<mpz_class>{1, 0, 0, 0, 1});
        CHECK_THROWS_AS(validate_scenario(bad), Error);
    }
    SUBCASE("intransitive actions are rejected")
    {
        GaloisScenario bad;
        bad.gamma = cyclic_group(2);
        bad.root_action.set_size = 2;
        bad.root_action.images = {{0, 1}, {0, 1}}; // trivial action on 2 roots
        bad.theta_index = 0;
        CHECK_THROWS_AS(validate_scenario(bad), Error);
    }
}

TEST_CASE("stabilizers and orbit maps")
{
    SUBCASE("free Z/2 action: trivial stabilizer, singleton orbits")
    {
        GaloisScenario s = gaussian_scenario();
        CHECK(derive_stabilizer(s).elements == std::vector<int>{0});
        CHECK(factor_orbit_map(s) == std::vector<int>{0, 1});
        CHECK(tensor_unit_decomposition(s) == std::vector<int>{1, 1});
    }
    SUBCASE("x^3 - 2: order-2 stabilizer, orbits {theta1} and {theta2, theta3}")
    {
        GaloisScenario s = cbrt2_scenario();
        Subgroup g = derive_stabilizer(s);
        CHECK(g.size() == 2);
        CHECK(factor_orbit_map(s) == std::vector<int>{0, 1, 1});
        CHECK(tensor_unit_decomposition(s) == std::vector<int>{1, 2});
    }
    SUBCASE("one root: everything is the stabilizer")
    {
        GaloisScenario s = split_scenario();
        CHECK(derive_stabilizer(s).size() == 1);
        CHECK(factor_orbit_map(s) == std::vector<int>{0});
        CHECK(tensor_unit_decomposition(s) == std::vector<int>{1});
    }
}

TEST_CASE("lagrange idempotents, exact")
{
    SUBCASE("x^2 + 1: p1 = (1 - i x)/2")
    {
        GaloisScenario s = gaussian_scenario();
        auto p = lagrange_idempotents(s);
        REQUIRE(p.size() == 2);
        auto f = s.concrete->field;
        CHECK(p[0].coeffs[0] == nf_make(f, {q(1, 2), q(0)}));
        CHECK(p[0].coeffs[1] == nf_make(f, {q(0), q(-1, 2)}));
        // p2 = (1 + i x)/2
        CHECK(p[1].coeffs[1] == nf_make(f, {q(0), q(1, 2)}));
        // grouped idempotents coincide in the Galois case
        auto big = grouped_idempotents(s);
        REQUIRE(big.size() == 2);
        CHECK(poly_equal(big[0], p[0]));
        CHECK(poly_equal(big[1], p[1]));
    }
    SUBCASE("x^2 - 2: p1 = (x + sqrt2)/(2 sqrt2), checked by substitution")
    {
        GaloisScenario s;
        s.gamma = cyclic_group(2);
        s.root_action.set_size = 2;
        s.root_action.images = {{0, 1}, {1, 0}};
        s.theta_index = 0;
        ConcreteLayer c;
        c.field = std::make_shared<NumberField>(std::vector<mpz_class>{-2, 0, 1});
        c.roots = {nf_make(c.field, {q(0), q(1)}), nf_make(c.field, {q(0), q(-1)})};
        c.f = {q(-2), q(0), q(1)};
        s.concrete = c;
        s = validate_scenario(s);
        auto p = lagrange_idempotents(s);
        CHECK(poly_eval(p[0], c.roots[0]) == nf_one(c.field));
        CHECK(poly_eval(p[0], c.roots[1]) == nf_zero(c.field));
        CHECK(p[0].coeffs[0] == nf_rational(c.field, q(1, 2)));
        CHECK(p[0].coeffs[1] == nf_make(c.field, {q(0), q(1, 4)})); // sqrt2/4
    }
    SUBCASE("one root: p1 = 1")
    {
        auto p = lagrange_idempotents(split_scenario());
        REQUIRE(p.size() == 1);
        CHECK(poly_equal(p[0], poly_constant(nf_one(p[0].field))));
    }
    SUBCASE("x^3 - 2: delta property, partition of unity, L-rational P_j")
    {
        GaloisScenario s = cbrt2_scenario();
        auto p = lagrange_idempotents(s);
        REQUIRE(p.size() == 3);
        auto f = s.concrete->field;
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k)
                CHECK(poly_eval(p[i], s.concrete->roots[k]) ==
                      (i == k ? nf_one(f) : nf_zero(f)));
        NFPoly sum = poly_zero(f);
        for (const auto& pi : p) sum = poly_add(sum, pi);
        CHECK(poly_equal(sum, poly_constant(nf_one(f))));

        // grouped: P1 = p1, P2 = p2 + p3; L-fixedness of every coefficient
        // is verified inside (CoefficientNotFixed would throw)
        auto big = grouped_idempotents(s);
        REQUIRE(big.size() == 2);
        CHECK(poly_equal(big[0], p[0]));
        CHECK(poly_equal(big[1], poly_add(p[1], p[2])));
    }
}

TEST_CASE("faithfulness via the double-coset union")
{
    SUBCASE("Vec_C over R: single object, not faithful, fixed field degree 2")
    {
        GaloisScenario s = gaussian_scenario();
        EmbeddingData e;
        e.rho["1"] = 0;
        auto r = faithfulness_check(s, e);
        CHECK_FALSE(r.faithful);
        CHECK(r.h_is_group);
        CHECK(r.h_elements == std::vector<int>{0});
        CHECK(r.fixed_field_index == 2);
    }
    SUBCASE("Vec_C over R with a conjugation object: faithful")
    {
        GaloisScenario s = gaussian_scenario();
        EmbeddingData e;
        e.rho["1"] = 0;
        e.rho["Xbar"] = 1;
        auto r = faithfulness_check(s, e);
        CHECK(r.faithful);
        CHECK(r.fixed_field_index == 1);
    }
    SUBCASE("L = K: faithful regardless of embeddings")
    {
        GaloisScenario s = split_scenario();
        EmbeddingData e;
        e.rho["1"] = 0;
        CHECK(faithfulness_check(s, e).faithful);
    }
    SUBCASE("x^3 - 2 with only the unit: not faithful, fixed field degree 3")
    {
        GaloisScenario s = cbrt2_scenario();
        EmbeddingData e;
        e.rho["1"] = 0;
        auto r = faithfulness_check(s, e);
        CHECK_FALSE(r.faithful);
        CHECK(r.h_elements.size() == 2);
        CHECK(r.fixed_field_index == 3);
    }
    SUBCASE("x^3 - 2 with a 3-cycle object: faithful")
    {
        GaloisScenario s = cbrt2_scenario();
        int c3 = find_three_cycle(s.gamma);
        REQUIRE(c3 > 0);
        EmbeddingData e;
        e.rho["1"] = 0;
        e.rho["X"] = c3;
        auto r = faithfulness_check(s, e);
        CHECK(r.faithful);
        CHECK(r.h_elements.size() == 6);
    }
    SUBCASE("unit outside the stabilizer is rejected")
    {
        GaloisScenario s = gaussian_scenario();
        EmbeddingData e;
        e.rho["1"] = 1; // conjugation does not fix theta
        CHECK_THROWS_AS(faithfulness_check(s, e), Error);
    }
}

TEST_CASE("faithfulness properties")
{
    GaloisScenario s = cbrt2_scenario();
    int c3 = find_three_cycle(s.gamma);

    SUBCASE("monotone in the embedding set")
    {
        EmbeddingData small;
        small.rho["1"] = 0;
        auto r1 = faithfulness_check(s, small);
        for (int extra = 0; extra < s.gamma.order; ++extra) {
            EmbeddingData bigger = small;
            bigger.rho["X"] = extra;
            auto r2 = faithfulness_check(s, bigger);
            for (int x : r1.h_elements)
                CHECK(std::binary_search(r2.h_elements.begin(), r2.h_elements.end(), x));
            if (r1.faithful) CHECK(r2.faithful);
        }
    }
    SUBCASE("any representative of the same double coset gives the same H")
    {
        Subgroup g = derive_stabilizer(s);
        auto coset = double_coset(g, c3, s.gamma);
        EmbeddingData ref;
        ref.rho["1"] = 0;
        ref.rho["X"] = c3;
        auto expected = faithfulness_check(s, ref).h_elements;
        for (int rep : coset) {
            EmbeddingData e;
            e.rho["1"] = 0;
            e.rho["X"] = rep;
            CHECK(faithfulness_check(s, e).h_elements == expected);
        }
    }
    SUBCASE("group-theoretic and polynomial criteria agree")
    {
        for (int rep = 0; rep < s.gamma.order; ++rep) {
            EmbeddingData e;
            e.rho["1"] = 0;
            e.rho["X"] = rep;
            CHECK(faithfulness_check(s, e).faithful ==
                  polynomial_faithfulness_criterion(s, e));
        }
        GaloisScenario gauss = gaussian_scenario();
        for (int rep = 0; rep < 2; ++rep) {
            EmbeddingData e;
            e.rho["1"] = 0;
            e.rho["X"] = rep;
            CHECK(faithfulness_check(gauss, e).faithful ==
                  polynomial_faithfulness_criterion(gauss, e));
        }
    }
}
