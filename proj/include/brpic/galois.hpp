#pragma once

#include "brpic/group.hpp"
#include "brpic/numberfield.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace brpic {

// Optional exact-arithmetic layer: the splitting field as Q[x]/(m), the
// root values, and the minimal polynomial f (rational, monic, degree = root
// count).
struct ConcreteLayer {
    std::shared_ptr<const NumberField> field;
    std::vector<NFElem> roots;
    std::vector<mpq_class> f; // ascending coefficients
};

// Splitting-field scenario: Gamma acting transitively on the conjugate
// roots of a distinguished root theta. The abstract layer answers every
// decision question; the concrete layer exists to verify the reduction.
struct GaloisScenario {
    FiniteGroup gamma;
    GroupAction root_action;
    int theta_index = 0;
    std::optional<ConcreteLayer> concrete;

    int root_count() const { return root_action.set_size; }
};

// Right-embedding representatives rho_X, one Gamma element per simple
// object label. The label "1" plays the role of the monoidal unit and must
// land in the stabilizer of theta.
struct EmbeddingData {
    std::map<std::string, int> rho;
};

// Validates group, action, transitivity, and (when present) the concrete
// layer: monic squarefree modulus of degree |Gamma|, monic f of degree n,
// f(theta_i) = 0 exactly, pairwise distinct roots.
GaloisScenario validate_scenario(GaloisScenario s);

// G = Stab_Gamma(theta); fixing L = K(theta) is fixing theta.
Subgroup derive_stabilizer(const GaloisScenario& s);

// J: root index -> factor index (0-based), orbits of G on the roots
// labelled in order of smallest member.
std::vector<int> factor_orbit_map(const GaloisScenario& s);

// Lagrange interpolation idempotents p_i(x) = prod_{k != i} (x - theta_k) /
// (theta_i - theta_k); verified to satisfy p_i(theta_k) = delta and
// sum p_i = 1. Throws RepeatedRoot on coincident roots.
std::vector<NFPoly> lagrange_idempotents(const GaloisScenario& s);

// P_j = sum of p_i over the orbit J^{-1}(j); verified: P_j(theta_k) =
// delta_{j, J(k)}, sum P_j = 1, and all coefficients lie in L = Q(theta)
// (the fixed field of G). Throws CoefficientNotFixed on inconsistent data.
std::vector<NFPoly> grouped_idempotents(const GaloisScenario& s);

// Degrees of the indecomposable factors of f over L = orbit sizes of J;
// the shape of L (x)_K L and of End(1 [x] 1).
std::vector<int> tensor_unit_decomposition(const GaloisScenario& s);

struct FaithfulnessReport {
    bool faithful = false;
    std::vector<int> h_elements; // sorted union of double cosets
    bool h_is_group = false;
    int fixed_field_index = 0; // [Gamma : H] = degree of the fixed field over K
};

// Kuperberg double-coset union H = cup_X G rho_X G. Faithful iff H = Gamma.
// Throws ClosureFailure (with a witness pair) when H is not a group.
FaithfulnessReport faithfulness_check(const GaloisScenario& s, const EmbeddingData& e);

// The polynomial translation of faithfulness: for every factor j there is
// an object X with P_j(rho_X(theta)) = 1. Needs the concrete layer.
bool polynomial_faithfulness_criterion(const GaloisScenario& s, const EmbeddingData& e);

} // namespace brpic
