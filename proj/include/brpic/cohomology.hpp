#pragma once

#include "brpic/fieldtable.hpp"
#include "brpic/gmodule.hpp"
#include "brpic/group.hpp"
#include "brpic/matrix.hpp"

#include <string>
#include <vector>

namespace brpic {

// H^n(G; M) in invariant-factor form.
struct CohomologyGroup {
    std::vector<long> invariant_factors; // d1 | d2 | ..., each >= 2
    int free_rank = 0;

    bool is_trivial() const { return invariant_factors.empty() && free_rank == 0; }
    bool is_finite() const { return free_rank == 0; }
    long order() const; // throws InfiniteGroup when free_rank > 0
    FinAb finite_part() const { return FinAb{invariant_factors}; }
    std::string to_string() const;

    bool operator==(const CohomologyGroup&) const = default;
};

// Cochain with dense values on all |G|^degree tuples, each value a
// generator-coefficient vector of the module. Tuples containing the
// identity carry zero (normalized convention).
struct Cocycle {
    int degree = 0;
    int group_order = 0;
    int gens = 1;
    std::vector<std::vector<mpz_class>> values;

    long tuple_rank(const std::vector<int>& tuple) const;
    const std::vector<mpz_class>& at(const std::vector<int>& tuple) const;
};

// Number of normalized n-tuples: (|G| - 1)^n.
long normalized_tuple_count(const FiniteGroup& g, int n);
std::vector<int> normalized_tuple_at(const FiniteGroup& g, int n, long rank);

// Matrix of d: C^n -> C^{n+1} on the normalized bar-resolution basis
// (basis index = tuple_rank * gens + generator). Entries of torsion rows
// are reduced into [0, d).
IntMat bar_differential(int n, const FiniteGroup& g, const GModule& m);

CohomologyGroup cohomology(const FiniteGroup& g, const GModule& m, int n);

// One normalized representative per class. Requires H^n finite; throws
// TooLarge when |H^n| * |G|^n exceeds the bound.
std::vector<Cocycle> cocycle_representatives(const FiniteGroup& g, const GModule& m, int n,
                                             long bound = 1L << 20);

bool is_cocycle(const FiniteGroup& g, const GModule& m, const Cocycle& c);
// For normalized cocycles: is c = d(phi) for some (n-1)-cochain phi?
bool is_coboundary(const FiniteGroup& g, const GModule& m, const Cocycle& c);
bool are_cohomologous(const FiniteGroup& g, const GModule& m, const Cocycle& a,
                      const Cocycle& b);

// Braided-functor condition for an identity-on-objects autoequivalence with
// scalar tensorator J on a pointed braided grading: J(g,h) = J(h,g).
// Requires abelian G and a scalar (single-generator) value module.
bool is_symmetric_cocycle(const FiniteGroup& g, const GModule& m, const Cocycle& j);

// Exhaustive check of the sign identity (-1)^{f g h k (g + 2h + k)} = 1
// over all f,g,h,k in {0,1}.
bool pw_sign_identity_check();

// Unit-group coefficients made computable: R^x -> Z/2 (sign), C^x -> Z/e
// with e = exponent(G), F_q^x -> Z/(q-1). Trivial action; the reduction is
// recorded in the module's note. Requires degree >= 1.
GModule reduce_unit_coefficients(const BaseField& field, int degree, const FiniteGroup& g);

} // namespace brpic
