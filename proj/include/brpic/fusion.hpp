#pragma once

#include "brpic/abelian.hpp"
#include "brpic/fieldtable.hpp"
#include "brpic/group.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace brpic {

// Endomorphism-division-algebra label of a simple object. Over R the table
// is {R, C, H}; over C only C; abstract base fields carry a
// (center extension, Brauer class) pair.
struct EndLabel {
    enum class Kind { R, C, H, Abstract };
    Kind kind = Kind::R;
    std::string center;       // abstract only
    std::string brauer_class; // abstract only

    std::string to_string() const;
    bool operator==(const EndLabel&) const = default;
    bool operator<(const EndLabel& o) const;

    static EndLabel r() { return {Kind::R, "", ""}; }
    static EndLabel c() { return {Kind::C, "", ""}; }
    static EndLabel h() { return {Kind::H, "", ""}; }
    static EndLabel abstract(std::string center, std::string brauer_class);
};

// Grading by a finite abelian group: grade per simple, as a tuple in the
// invariant-factor coordinates of the group.
struct BraidingGrading {
    FinAb group;
    std::vector<std::vector<long>> grades;
};

// Combinatorial skeleton of a fusion category over a base field: simples
// with endomorphism labels, structure constants, duality.
struct FusionRingData {
    std::vector<std::string> simples;
    int unit = 0;
    std::vector<std::vector<std::vector<long>>> n; // n[i][j][k] >= 0
    std::vector<int> dual;
    std::vector<EndLabel> ends;
    BaseField base_field;
    std::optional<BraidingGrading> braiding_grading;
    // asserts the hypothesis End(1) = K; skipped when the category is only
    // fusion over a smaller field than its unit's endomorphisms
    bool assert_split_unit = true;

    int rank() const { return static_cast<int>(simples.size()); }
};

// Multiset of endomorphism labels, an element of the Brauer ring B(K).
struct BrauerRingElement {
    std::map<EndLabel, long> terms;

    std::string to_string() const;
    bool operator==(const BrauerRingElement&) const = default;
};

// Checks the based-ring axioms; throws AssociativityFailure / UnitFailure /
// DualityFailure / EndLabelFailure with witnesses.
FusionRingData validate_fusion_ring(FusionRingData data);

BrauerRingElement algebra_profile(const FusionRingData& data);

// Term-by-term multiplication in B(R): R*x = x, H*H = R, C*H = C, C*C = 2C
// (the etale algebra C (x) C splits into two factors). Base field R only.
BrauerRingElement profile_twist(const BrauerRingElement& profile, const EndLabel& d);

// true: the profile changes under twisting, so [D] maps to a nontrivial
// element of BrPic. false: the profile test is inconclusive.
bool twist_obstruction(const FusionRingData& data, const EndLabel& d);

struct InvertibleGroup {
    std::vector<int> indices;
    std::vector<std::string> labels;
    FiniteGroup group;
    std::optional<FinAb> abelian_type; // set when the group is abelian
};

// {X : X (x) dual(X) = 1 exactly and End(X) = base field}, with the induced
// group structure. Throws NonGroupClosure on corrupted data.
InvertibleGroup invertible_objects(const FusionRingData& data);

// Aut_tensor(Id) = Hom(grading group, Z/2): characters valued in the
// torsion of R^x. Requires the grading and base field R.
FinAb aut_tensor_id(const FusionRingData& data);

// Frobenius-Perron dimension of one simple: the largest real root of the
// characteristic polynomial of its fusion matrix. Exact when rational
// (integral, since the polynomial is monic); otherwise a certified interval
// of width <= 1e-12.
struct FPDim {
    bool exact = false;
    mpq_class value; // set when exact
    mpq_class lo, hi;
};

std::vector<FPDim> fp_dimensions(const FusionRingData& data);
bool fp_dimensions_ge_one(const FusionRingData& data);
// d_i d_j = sum_k N_ij^k d_k, exactly on rational dims, within certified
// interval bounds otherwise.
bool fp_dimension_multiplicative(const FusionRingData& data);

// Characteristic polynomial (monic, ascending coefficients) of an integer
// matrix, by Faddeev-LeVerrier.
std::vector<mpz_class> characteristic_polynomial(const std::vector<std::vector<long>>& a);

// Number of distinct real roots of p in the open-closed interval (a, b],
// via Sturm chains over Q.
int count_real_roots(const std::vector<mpq_class>& p, const mpq_class& a, const mpq_class& b);

} // namespace brpic
