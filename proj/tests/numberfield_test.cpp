#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brpic/error.hpp"
#include "brpic/numberfield.hpp"

using namespace brpic;

namespace {

std::shared_ptr<const NumberField> gaussian()
{
    // Q[i] = Q[x]/(x^2 + 1)
    return std::make_shared<NumberField>(std::vector<mpz_class>{1, 0, 1});
}

} // namespace

TEST_CASE("modulus screening")
{
    CHECK_THROWS_AS(NumberField({mpz_class(5)}), Error);                 // constant
    CHECK_THROWS_AS(NumberField({mpz_class(1), mpz_class(2)}), Error);   // not monic
    CHECK_THROWS_AS(NumberField({mpz_class(0), mpz_class(0), mpz_class(1)}), Error); // x^2
    CHECK_NOTHROW(NumberField({mpz_class(-2), mpz_class(0), mpz_class(1)}));         // x^2 - 2
    // squarefree but reducible is allowed at load; zero divisors fail later
    CHECK_NOTHROW(NumberField({mpz_class(0), mpz_class(1), mpz_class(1)})); // x(x+1)
}

TEST_CASE("arithmetic in Q[i]")
{
    auto f = gaussian();
    NFElem i = nf_generator(f);
    CHECK(nf_mul(i, i) == nf_rational(f, -1));
    CHECK(nf_inv(i) == nf_neg(i)); // 1/i = -i
    NFElem z = nf_make(f, {mpq_class(3), mpq_class(4)}); // 3 + 4i
    NFElem w = nf_inv(z);
    CHECK(nf_mul(z, w) == nf_one(f));
    CHECK(w.coeffs[0] == mpq_class(3, 25));
    CHECK(w.coeffs[1] == mpq_class(-4, 25));
    CHECK_THROWS_AS(nf_inv(nf_zero(f)), Error);
}

TEST_CASE("zero divisors in a reducible quotient are caught")
{
    auto f = std::make_shared<NumberField>(std::vector<mpz_class>{0, 1, 1}); // x(x+1)
    NFElem x = nf_generator(f);
    CHECK_THROWS_AS(nf_inv(x), Error);
    // x + 1 is the complementary zero divisor
    CHECK_THROWS_AS(nf_inv(nf_add(x, nf_one(f))), Error);
    // but 2 is invertible
    CHECK(nf_inv(nf_rational(f, 2)) == nf_rational(f, mpq_class(1, 2)));
}

TEST_CASE("polynomials over the field")
{
    auto f = gaussian();
    NFElem i = nf_generator(f);
    // (x - i)(x + i) = x^2 + 1
    NFPoly p = poly_mul(poly_linear_root(i), poly_linear_root(nf_neg(i)));
    REQUIRE(p.degree() == 2);
    CHECK(p.coeffs[0] == nf_one(f));
    CHECK(p.coeffs[1].is_zero());
    CHECK(p.coeffs[2] == nf_one(f));
    CHECK(poly_eval(p, i).is_zero());
    CHECK(poly_eval(p, nf_rational(f, 2)) == nf_rational(f, 5));

    NFPoly q = poly_from_rationals(f, {mpq_class(1), mpq_class(0), mpq_class(1)});
    CHECK(poly_equal(p, q));
}

TEST_CASE("degree-6 splitting field sanity: Q[a]/(a^6 + 108)")
{
    auto f = std::make_shared<NumberField>(
        std::vector<mpz_class>{108, 0, 0, 0, 0, 0, 1});
    NFElem a = nf_generator(f);
    // theta = a/2 - a^4/36 is a cube root of 2
    NFElem theta = nf_make(f, {mpq_class(0), mpq_class(1, 2), mpq_class(0), mpq_class(0),
                               mpq_class(-1, 36), mpq_class(0)});
    NFElem cube = nf_mul(nf_mul(theta, theta), theta);
    CHECK(cube == nf_rational(f, 2));
    CHECK(nf_mul(theta, nf_inv(theta)) == nf_one(f));
    // a itself has a^6 = -108
    NFElem a6 = a;
    for (int k = 0; k < 5; ++k) a6 = nf_mul(a6, a);
    CHECK(a6 == nf_rational(f, -108));
}
