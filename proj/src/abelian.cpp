#include "brpic/abelian.hpp"

#include "brpic/error.hpp"

#include <algorithm>
#include <map>

namespace brpic {

FinAb FinAb::of(std::vector<long> cyclic_orders)
{
    // split into prime powers, then zip the largest together
    std::map<long, std::vector<long>> by_prime; // prime -> exponents, descending
    for (long n : cyclic_orders) {
        if (n < 1)
            throw Error("BadGroupOrder", "cyclic factor " + std::to_string(n));
        for (long p = 2; n > 1; ++p) {
            if (n % p != 0) continue;
            long e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            by_prime[p].push_back(e);
        }
    }
    std::size_t len = 0;
    for (auto& [p, es] : by_prime) {
        std::sort(es.begin(), es.end(), std::greater<>());
        len = std::max(len, es.size());
    }
    std::vector<long> chain(len, 1); // chain[0] = largest invariant factor
    for (auto& [p, es] : by_prime)
        for (std::size_t i = 0; i < es.size(); ++i) {
            long q = 1;
            for (long k = 0; k < es[i]; ++k) q *= p;
            chain[i] *= q;
        }
    std::reverse(chain.begin(), chain.end());
    FinAb g;
    g.factors = std::move(chain);
    return g;
}

long FinAb::order() const
{
    long n = 1;
    for (long d : factors) n *= d;
    return n;
}

std::vector<std::vector<long>> FinAb::elements(long cap) const
{
    if (order() > cap)
        throw Error("TooLarge", "group order " + std::to_string(order()) +
                                    " exceeds enumeration cap");
    std::vector<std::vector<long>> out;
    std::vector<long> cur(factors.size(), 0);
    while (true) {
        out.push_back(cur);
        int i = static_cast<int>(factors.size()) - 1;
        while (i >= 0) {
            if (++cur[i] < factors[i]) break;
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

std::string FinAb::to_string() const
{
    if (factors.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += " x ";
        s += "Z/" + std::to_string(factors[i]);
    }
    return s;
}

std::vector<long> AbHom::apply(const std::vector<long>& x) const
{
    std::vector<long> y(target.factors.size(), 0);
    for (std::size_t i = 0; i < y.size(); ++i) {
        long long acc = 0;
        const long long m = target.factors[i];
        for (std::size_t j = 0; j < x.size(); ++j)
            acc += static_cast<long long>(matrix[i][j]) % m * (x[j] % m) % m;
        y[i] = static_cast<long>(((acc % m) + m) % m);
    }
    return y;
}

void validate_hom(const AbHom& h)
{
    const std::size_t r = h.target.factors.size();
    const std::size_t c = h.source.factors.size();
    if (h.matrix.size() != r)
        throw Error("MalformedMap", "matrix row count != target rank");
    for (const auto& row : h.matrix)
        if (row.size() != c)
            throw Error("MalformedMap", "matrix column count != source rank");
    // well-definedness: order of source generator kills its image
    for (std::size_t j = 0; j < c; ++j)
        for (std::size_t i = 0; i < r; ++i) {
            long long prod = static_cast<long long>(h.source.factors[j]) * h.matrix[i][j];
            if (prod % h.target.factors[i] != 0)
                throw Error("MalformedMap",
                            "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                ") does not respect generator orders");
        }
}

AbHom zero_hom(const FinAb& source, const FinAb& target)
{
    AbHom h;
    h.source = source;
    h.target = target;
    h.matrix.assign(target.factors.size(), std::vector<long>(source.factors.size(), 0));
    return h;
}

AbHom identity_hom(const FinAb& g)
{
    AbHom h = zero_hom(g, g);
    for (std::size_t i = 0; i < g.factors.size(); ++i) h.matrix[i][i] = 1;
    return h;
}

} // namespace brpic
