#pragma once

#include "brpic/abelian.hpp"

#include <optional>
#include <string>

namespace brpic {

// Supported base fields. These carry curated Galois-cohomology facts, not
// computations: the invariants of abstract fields must be supplied.
struct BaseField {
    enum class Kind { R, C, FiniteField, Abstract };

    Kind kind = Kind::R;
    long q = 0;       // prime power, finite fields only
    std::string name; // abstract fields only
    std::optional<FinAb> abstract_brauer;
    std::optional<FinAb> abstract_h3; // nullopt + h3_nontrivial_unknown set => flagged
    bool abstract_h3_nontrivial_unknown = false;

    static BaseField reals() { return BaseField{Kind::R, 0, "", {}, {}, false}; }
    static BaseField complexes() { return BaseField{Kind::C, 0, "", {}, {}, false}; }
    static BaseField finite(long q);
    static BaseField abstract_field(std::string name, std::optional<FinAb> brauer,
                                    std::optional<FinAb> h3, bool h3_nontrivial_unknown);

    std::string display() const;
    bool operator==(const BaseField&) const = default;
};

// H^3(K; Gm) as table data: either a known finite group or the flag that
// it is nonzero without a stored value.
struct H3Value {
    std::optional<FinAb> group;        // known value
    bool nontrivial_unknown = false;   // flagged nonzero, structure not stored

    bool known_trivial() const { return group && group->is_trivial(); }
    std::string to_string() const;
    bool operator==(const H3Value&) const = default;
};

// The H^*(K; Gm) column: h0 is K^* itself (descriptive only), h1 always
// vanishes, h2 is the Brauer group, h3 as above.
struct GmColumn {
    std::string h0_description;
    FinAb h2;
    H3Value h3;
};

FinAb brauer_group(const BaseField& field);
FinAb h1_gm(const BaseField& field);
H3Value h3_gm(const BaseField& field);
GmColumn gm_column(const BaseField& field);

// The flagged example of a field with nontrivial H^3.
BaseField rational_function_field_Cxyz();

bool is_prime_power(long q);

} // namespace brpic
