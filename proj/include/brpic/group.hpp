#pragma once

#include <string>
#include <utility>
#include <vector>

namespace brpic {

// Finite group given by its full multiplication table. Element 0 is always
// the identity; validate_group re-indexes inputs that put it elsewhere.
// Immutable after construction.
struct FiniteGroup {
    int order = 0;
    std::vector<std::vector<int>> table; // table[i][j] = index of g_i * g_j
    std::vector<int> inverse;            // inverse[i] * i = identity
    std::vector<std::string> labels;     // optional, empty or size == order

    int mul(int i, int j) const { return table[i][j]; }
    int inv(int i) const { return inverse[i]; }
    int element_order(int i) const;
    int exponent() const; // lcm of element orders
    bool is_abelian() const;
};

// Sorted element list, closed under the parent's multiplication and
// inversion. The parent is passed explicitly to every operation.
struct Subgroup {
    std::vector<int> elements;

    bool contains(int g) const;
    int size() const { return static_cast<int>(elements.size()); }
};

// Action on {0, ..., set_size-1} by permutations, one per group element.
struct GroupAction {
    int set_size = 0;
    std::vector<std::vector<int>> images; // images[g][x] = g . x

    int apply(int g, int x) const { return images[g][x]; }
};

// Checks all group axioms; throws NotAssociative / NoIdentity / NoInverse
// naming the violating triple or element. Re-indexes so the identity is 0.
FiniteGroup validate_group(const std::vector<std::vector<int>>& table,
                           std::vector<std::string> labels = {});

// images[0] = id, images respect multiplication. Throws InvalidAction.
void validate_action(const FiniteGroup& g, const GroupAction& action);
bool is_transitive(const FiniteGroup& g, const GroupAction& action);

// Expands permutation generators (as permutation arrays of length degree)
// into a full multiplication table, identity first, remaining elements in
// lexicographic order. Also returns the natural action on the degree points.
struct ExpandedPermGroup {
    FiniteGroup group;
    GroupAction natural_action;
};
ExpandedPermGroup group_from_permutations(int degree,
                                          const std::vector<std::vector<int>>& generators,
                                          int max_order = 20000);

// Builders for the small groups the catalog uses.
FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup klein_four_group();
ExpandedPermGroup symmetric_group_3();

Subgroup trivial_subgroup();
Subgroup full_subgroup(const FiniteGroup& g);
Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements);

// {g1 * g * g2 : g1, g2 in G}, sorted.
std::vector<int> double_coset(const Subgroup& g_sub, int g, const FiniteGroup& gamma);

// H = union of G*rep*G over reps (always includes G itself); closed iff H
// is a subgroup of gamma.
struct DoubleCosetUnion {
    std::vector<int> elements; // sorted union
    bool closed = false;
    Subgroup subgroup;                   // valid only when closed
    std::pair<int, int> witness{-1, -1}; // product escaping H when not closed
};
DoubleCosetUnion double_coset_union_closure(const FiniteGroup& gamma,
                                            const Subgroup& g_sub,
                                            const std::vector<int>& reps);

// Orbit partition under the action restricted to a subgroup. Orbits are
// sorted internally and listed by smallest member.
std::vector<std::vector<int>> orbits(const FiniteGroup& g, const GroupAction& action,
                                     const Subgroup& restrict_to);

Subgroup generated_subgroup(const FiniteGroup& gamma, const std::vector<int>& gens);

Subgroup stabilizer(const FiniteGroup& g, const GroupAction& action, int point);

// Invariant factors d1 | d2 | ... of a finite abelian group (empty = trivial).
// Throws NotAbelian on non-abelian input.
std::vector<long> abelian_invariants(const FiniteGroup& g,
                                     const std::vector<int>& elements);
std::vector<long> abelian_invariants(const FiniteGroup& g);

} // namespace brpic
