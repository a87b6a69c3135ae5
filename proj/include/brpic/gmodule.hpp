#pragma once

#include "brpic/group.hpp"
#include "brpic/matrix.hpp"

#include <string>
#include <vector>

namespace brpic {

// Finitely generated abelian coefficient module with a group action.
// Generators are ordered free part first, then torsion generators with
// invariant factors d1 | d2 | ... (each >= 2). The action is one integer
// matrix per group element on the generators; entries into a torsion
// generator are read modulo its invariant factor.
struct GModule {
    int free_rank = 0;
    std::vector<long> torsion;
    std::vector<IntMat> action; // size = group order after validation
    std::string note;           // provenance of coefficient reductions

    int gens() const { return free_rank + static_cast<int>(torsion.size()); }
    const IntMat& act(int g) const { return action[g]; }

    // Reduces torsion coordinates of a generator-coefficient vector into
    // canonical range [0, d).
    void reduce(std::vector<mpz_class>& v) const;
    bool is_zero(const std::vector<mpz_class>& v) const;
};

// Checks identity action, compatibility with the group table, and
// well-definedness on torsion generators. An empty action list means the
// trivial action and is materialized as identity matrices.
GModule validate_gmodule(const FiniteGroup& g, GModule m);

GModule trivial_module_Z(const FiniteGroup& g);
GModule trivial_module_Zn(const FiniteGroup& g, long n);

} // namespace brpic
