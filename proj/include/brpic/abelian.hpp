#pragma once

#include <string>
#include <vector>

namespace brpic {

// Finite abelian group in invariant-factor form: factors d1 | d2 | ...,
// each >= 2. Empty factor list = trivial group.
struct FinAb {
    std::vector<long> factors;

    // Canonicalizes an arbitrary list of cyclic orders (entries >= 1)
    // into the invariant factor chain.
    static FinAb of(std::vector<long> cyclic_orders);
    static FinAb trivial() { return FinAb{}; }

    long order() const;
    bool is_trivial() const { return factors.empty(); }
    int rank() const { return static_cast<int>(factors.size()); }
    long exponent() const { return factors.empty() ? 1 : factors.back(); }

    // All elements as mixed-radix tuples (lexicographic). Throws TooLarge
    // past the cap.
    std::vector<std::vector<long>> elements(long cap = 100000) const;

    std::string to_string() const; // "1", "Z/2", "Z/2 x Z/4", ...

    bool operator==(const FinAb&) const = default;
};

// Homomorphism between finite abelian groups, as an integer matrix on
// generators (rows = target generators, columns = source generators).
struct AbHom {
    FinAb source;
    FinAb target;
    std::vector<std::vector<long>> matrix;

    std::vector<long> apply(const std::vector<long>& x) const;
};

// d_src[j] * M[i][j] must vanish mod d_tgt[i]; throws MalformedMap otherwise.
void validate_hom(const AbHom& h);

AbHom zero_hom(const FinAb& source, const FinAb& target);
AbHom identity_hom(const FinAb& g);

} // namespace brpic
