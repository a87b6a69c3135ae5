#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace brpic {

// The ring Q[x]/(m(x)) for a monic squarefree integer-coefficient modulus.
// When m is irreducible this is a number field; squarefree reducible moduli
// give a product of fields, where division by zero divisors fails with
// NotInvertible.
class NumberField {
public:
    // modulus coefficients in ascending order, leading coefficient 1
    explicit NumberField(std::vector<mpz_class> modulus);

    int degree() const { return static_cast<int>(modulus_.size()) - 1; }
    const std::vector<mpz_class>& modulus() const { return modulus_; }

private:
    std::vector<mpz_class> modulus_;
};

// Residue in Q[x]/(m): rational coefficients c0 + c1*x + ..., always kept
// with degree < deg m.
struct NFElem {
    std::shared_ptr<const NumberField> field;
    std::vector<mpq_class> coeffs; // size == field->degree()

    bool is_zero() const;
    bool operator==(const NFElem& o) const;
    std::string to_string(const std::string& var = "a") const;
};

NFElem nf_make(const std::shared_ptr<const NumberField>& f, std::vector<mpq_class> coeffs);
NFElem nf_zero(const std::shared_ptr<const NumberField>& f);
NFElem nf_one(const std::shared_ptr<const NumberField>& f);
NFElem nf_rational(const std::shared_ptr<const NumberField>& f, const mpq_class& c);
NFElem nf_generator(const std::shared_ptr<const NumberField>& f); // class of x

NFElem nf_add(const NFElem& a, const NFElem& b);
NFElem nf_sub(const NFElem& a, const NFElem& b);
NFElem nf_neg(const NFElem& a);
NFElem nf_mul(const NFElem& a, const NFElem& b);
// Extended Euclid against the modulus; throws NotInvertible on zero divisors.
NFElem nf_inv(const NFElem& a);
NFElem nf_div(const NFElem& a, const NFElem& b);

// Polynomial over the field, coefficients ascending, no trailing zeros.
struct NFPoly {
    std::shared_ptr<const NumberField> field;
    std::vector<NFElem> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; } // -1 for zero
    bool is_zero() const { return coeffs.empty(); }
};

NFPoly poly_zero(const std::shared_ptr<const NumberField>& f);
NFPoly poly_constant(const NFElem& c);
NFPoly poly_from_rationals(const std::shared_ptr<const NumberField>& f,
                           const std::vector<mpq_class>& coeffs);
// (x - r)
NFPoly poly_linear_root(const NFElem& r);

NFPoly poly_add(const NFPoly& a, const NFPoly& b);
NFPoly poly_mul(const NFPoly& a, const NFPoly& b);
NFPoly poly_scale(const NFPoly& a, const NFElem& c);
NFElem poly_eval(const NFPoly& p, const NFElem& x);
bool poly_equal(const NFPoly& a, const NFPoly& b);

// Squarefree test for a monic integer polynomial: gcd(m, m') constant.
bool squarefree_int_poly(const std::vector<mpz_class>& m);

} // namespace brpic
