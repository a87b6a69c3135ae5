#include "brpic/fieldtable.hpp"

#include "brpic/error.hpp"

namespace brpic {

bool is_prime_power(long q)
{
    if (q < 2) return false;
    for (long p = 2; p * p <= q; ++p) {
        if (q % p != 0) continue;
        while (q % p == 0) q /= p;
        return q == 1;
    }
    return true; // q itself is prime
}

BaseField BaseField::finite(long q)
{
    if (!is_prime_power(q))
        throw Error("UnsupportedField", std::to_string(q) + " is not a prime power");
    BaseField f;
    f.kind = Kind::FiniteField;
    f.q = q;
    return f;
}

BaseField BaseField::abstract_field(std::string name, std::optional<FinAb> brauer,
                                    std::optional<FinAb> h3, bool h3_nontrivial_unknown)
{
    BaseField f;
    f.kind = Kind::Abstract;
    f.name = std::move(name);
    f.abstract_brauer = std::move(brauer);
    f.abstract_h3 = std::move(h3);
    f.abstract_h3_nontrivial_unknown = h3_nontrivial_unknown;
    return f;
}

std::string BaseField::display() const
{
    switch (kind) {
    case Kind::R: return "R";
    case Kind::C: return "C";
    case Kind::FiniteField: return "F_" + std::to_string(q);
    case Kind::Abstract: return name;
    }
    return "?";
}

std::string H3Value::to_string() const
{
    if (nontrivial_unknown) return "NONTRIVIAL-UNKNOWN";
    return group ? group->to_string() : "?";
}

FinAb brauer_group(const BaseField& field)
{
    switch (field.kind) {
    case BaseField::Kind::R:
        return FinAb::of({2});
    case BaseField::Kind::C:
    case BaseField::Kind::FiniteField:
        // C is algebraically closed; finite division rings are fields
        return FinAb::trivial();
    case BaseField::Kind::Abstract:
        if (!field.abstract_brauer)
            throw Error("UnsupportedField",
                        "no Brauer group supplied for abstract field " + field.name);
        return *field.abstract_brauer;
    }
    throw Error("UnsupportedField", "unknown field kind");
}

FinAb h1_gm(const BaseField&)
{
    // Hilbert 90: always trivial
    return FinAb::trivial();
}

H3Value h3_gm(const BaseField& field)
{
    H3Value v;
    switch (field.kind) {
    case BaseField::Kind::R:
    case BaseField::Kind::C:
    case BaseField::Kind::FiniteField:
        v.group = FinAb::trivial();
        return v;
    case BaseField::Kind::Abstract:
        if (field.abstract_h3_nontrivial_unknown) {
            v.nontrivial_unknown = true;
            return v;
        }
        if (!field.abstract_h3)
            throw Error("UnsupportedField",
                        "no H^3 data supplied for abstract field " + field.name);
        v.group = *field.abstract_h3;
        return v;
    }
    throw Error("UnsupportedField", "unknown field kind");
}

GmColumn gm_column(const BaseField& field)
{
    GmColumn c;
    c.h0_description = field.display() + "^x";
    c.h2 = brauer_group(field);
    c.h3 = h3_gm(field);
    return c;
}

BaseField rational_function_field_Cxyz()
{
    // only the H^3 flag is curated; the Brauer group is not supplied
    return BaseField::abstract_field("C(x,y,z)", std::nullopt, std::nullopt, true);
}

} // namespace brpic
