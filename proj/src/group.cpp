#include "brpic/group.hpp"

#include "brpic/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace brpic {

int FiniteGroup::element_order(int i) const
{
    int n = 1, x = i;
    while (x != 0) {
        x = mul(x, i);
        ++n;
    }
    return n;
}

int FiniteGroup::exponent() const
{
    long e = 1;
    for (int i = 0; i < order; ++i)
        e = std::lcm(e, static_cast<long>(element_order(i)));
    return static_cast<int>(e);
}

bool FiniteGroup::is_abelian() const
{
    for (int i = 0; i < order; ++i)
        for (int j = i + 1; j < order; ++j)
            if (table[i][j] != table[j][i]) return false;
    return true;
}

bool Subgroup::contains(int g) const
{
    return std::binary_search(elements.begin(), elements.end(), g);
}

FiniteGroup validate_group(const std::vector<std::vector<int>>& table,
                           std::vector<std::string> labels)
{
    const int n = static_cast<int>(table.size());
    if (n == 0)
        throw Error("NoIdentity", "empty multiplication table");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n)
            throw Error("NotSquare", "row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < n; ++j)
            if (table[i][j] < 0 || table[i][j] >= n)
                throw Error("EntryOutOfRange",
                            "table[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw Error("LabelMismatch", "label count != order");

    // locate a two-sided identity
    int e = -1;
    for (int c = 0; c < n && e < 0; ++c) {
        bool ok = true;
        for (int i = 0; i < n; ++i)
            if (table[c][i] != i || table[i][c] != i) {
                ok = false;
                break;
            }
        if (ok) e = c;
    }
    if (e < 0)
        throw Error("NoIdentity", "no two-sided identity element");

    // canonical form: identity at index 0
    std::vector<std::vector<int>> t = table;
    if (e != 0) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::swap(perm[0], perm[e]); // perm is its own inverse
        std::vector<std::vector<int>> t2(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                t2[perm[i]][perm[j]] = perm[table[i][j]];
        t.swap(t2);
        if (!labels.empty()) std::swap(labels[0], labels[e]);
    }

    std::vector<int> inverse(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (t[i][j] == 0 && t[j][i] == 0) {
                inverse[i] = j;
                break;
            }
        if (inverse[i] < 0)
            throw Error("NoInverse", "element " + std::to_string(i) + " has no two-sided inverse");
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (t[t[i][j]][k] != t[i][t[j][k]])
                    throw Error("NotAssociative",
                                "triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                    std::to_string(k) + ")");

    FiniteGroup g;
    g.order = n;
    g.table = std::move(t);
    g.inverse = std::move(inverse);
    g.labels = std::move(labels);
    return g;
}

void validate_action(const FiniteGroup& g, const GroupAction& action)
{
    if (static_cast<int>(action.images.size()) != g.order)
        throw Error("InvalidAction", "one permutation per group element required");
    for (const auto& p : action.images) {
        if (static_cast<int>(p.size()) != action.set_size)
            throw Error("InvalidAction", "permutation length != set size");
        std::vector<bool> seen(action.set_size, false);
        for (int v : p) {
            if (v < 0 || v >= action.set_size || seen[v])
                throw Error("InvalidAction", "image is not a permutation");
            seen[v] = true;
        }
    }
    for (int x = 0; x < action.set_size; ++x)
        if (action.images[0][x] != x)
            throw Error("InvalidAction", "identity must act trivially");
    for (int i = 0; i < g.order; ++i)
        for (int j = 0; j < g.order; ++j)
            for (int x = 0; x < action.set_size; ++x)
                if (action.images[g.mul(i, j)][x] != action.images[i][action.images[j][x]])
                    throw Error("InvalidAction",
                                "images do not respect multiplication at (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
}

bool is_transitive(const FiniteGroup& g, const GroupAction& action)
{
    if (action.set_size == 0) return false;
    std::vector<bool> seen(action.set_size, false);
    seen[0] = true;
    int count = 1;
    std::queue<int> todo;
    todo.push(0);
    while (!todo.empty()) {
        int x = todo.front();
        todo.pop();
        for (int e = 0; e < g.order; ++e) {
            int y = action.images[e][x];
            if (!seen[y]) {
                seen[y] = true;
                ++count;
                todo.push(y);
            }
        }
    }
    return count == action.set_size;
}

namespace {

std::vector<int> compose(const std::vector<int>& s, const std::vector<int>& t)
{
    // (s . t)(x) = s(t(x))
    std::vector<int> r(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) r[x] = s[t[x]];
    return r;
}

} // namespace

ExpandedPermGroup group_from_permutations(int degree,
                                          const std::vector<std::vector<int>>& generators,
                                          int max_order)
{
    if (degree <= 0)
        throw Error("EntryOutOfRange", "degree must be positive");
    for (const auto& p : generators) {
        if (static_cast<int>(p.size()) != degree)
            throw Error("EntryOutOfRange", "generator length != degree");
        std::vector<bool> seen(degree, false);
        for (int v : p) {
            if (v < 0 || v >= degree || seen[v])
                throw Error("EntryOutOfRange", "generator is not a permutation");
            seen[v] = true;
        }
    }

    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<int>> seen{id};
    std::queue<std::vector<int>> todo;
    todo.push(id);
    while (!todo.empty()) {
        auto cur = todo.front();
        todo.pop();
        for (const auto& gen : generators) {
            for (const auto& prod : {compose(cur, gen), compose(gen, cur)}) {
                if (seen.insert(prod).second) {
                    if (static_cast<int>(seen.size()) > max_order)
                        throw Error("TooLarge", "permutation group exceeds max order");
                    todo.push(prod);
                }
            }
        }
    }

    // identity first, the rest in lexicographic order (deterministic)
    std::vector<std::vector<int>> elems(seen.begin(), seen.end());
    auto it = std::find(elems.begin(), elems.end(), id);
    std::rotate(elems.begin(), it, it + 1);

    const int n = static_cast<int>(elems.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[elems[i]] = i;

    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            table[i][j] = index.at(compose(elems[i], elems[j]));

    ExpandedPermGroup out;
    out.group = validate_group(table);
    out.natural_action.set_size = degree;
    out.natural_action.images = std::move(elems);
    validate_action(out.group, out.natural_action);
    return out;
}

FiniteGroup cyclic_group(int n)
{
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[i][j] = (i + j) % n;
    return validate_group(t);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b)
{
    const int n = a.order * b.order;
    auto idx = [&](int x, int y) { return x * b.order + y; };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x1 = 0; x1 < a.order; ++x1)
        for (int y1 = 0; y1 < b.order; ++y1)
            for (int x2 = 0; x2 < a.order; ++x2)
                for (int y2 = 0; y2 < b.order; ++y2)
                    t[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
    return validate_group(t);
}

FiniteGroup klein_four_group()
{
    return direct_product(cyclic_group(2), cyclic_group(2));
}

ExpandedPermGroup symmetric_group_3()
{
    // generators (0 1) and (0 1 2)
    return group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements)
{
    std::set<int> s(elements.begin(), elements.end());
    if (!s.count(0)) return false;
    for (int a : s) {
        if (a < 0 || a >= g.order) return false;
        if (!s.count(g.inv(a))) return false;
        for (int b : s)
            if (!s.count(g.mul(a, b))) return false;
    }
    return true;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements)
{
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (!is_subgroup(g, elements))
        throw Error("NotASubgroup", "element set is not closed");
    Subgroup s;
    s.elements = std::move(elements);
    return s;
}

Subgroup trivial_subgroup()
{
    Subgroup s;
    s.elements = {0};
    return s;
}

Subgroup full_subgroup(const FiniteGroup& g)
{
    Subgroup s;
    s.elements.resize(g.order);
    std::iota(s.elements.begin(), s.elements.end(), 0);
    return s;
}

std::vector<int> double_coset(const Subgroup& g_sub, int g, const FiniteGroup& gamma)
{
    if (g < 0 || g >= gamma.order)
        throw Error("ElementOutOfRange", "element " + std::to_string(g));
    std::set<int> out;
    for (int a : g_sub.elements)
        for (int b : g_sub.elements)
            out.insert(gamma.mul(gamma.mul(a, g), b));
    return {out.begin(), out.end()};
}

DoubleCosetUnion double_coset_union_closure(const FiniteGroup& gamma,
                                            const Subgroup& g_sub,
                                            const std::vector<int>& reps)
{
    if (reps.empty())
        throw Error("EmptyInput", "need at least one representative");
    std::set<int> h;
    for (int r : reps) {
        auto dc = double_coset(g_sub, r, gamma);
        h.insert(dc.begin(), dc.end());
    }
    h.insert(g_sub.elements.begin(), g_sub.elements.end());

    DoubleCosetUnion out;
    out.elements.assign(h.begin(), h.end());
    out.closed = true;
    // multiplicative closure suffices: H is finite and contains the
    // identity, so a^{-1} is a power of a
    for (int a : out.elements) {
        for (int b : out.elements)
            if (!h.count(gamma.mul(a, b))) {
                out.closed = false;
                out.witness = {a, b};
                break;
            }
        if (!out.closed) break;
    }
    if (out.closed)
        out.subgroup = make_subgroup(gamma, out.elements);
    return out;
}

std::vector<std::vector<int>> orbits(const FiniteGroup& g, const GroupAction& action,
                                     const Subgroup& restrict_to)
{
    std::vector<std::vector<int>> result;
    std::vector<bool> seen(action.set_size, false);
    for (int x = 0; x < action.set_size; ++x) {
        if (seen[x]) continue;
        std::set<int> orbit;
        std::queue<int> todo;
        orbit.insert(x);
        todo.push(x);
        while (!todo.empty()) {
            int y = todo.front();
            todo.pop();
            for (int e : restrict_to.elements) {
                int z = action.apply(e, y);
                if (orbit.insert(z).second) todo.push(z);
            }
        }
        for (int y : orbit) seen[y] = true;
        result.emplace_back(orbit.begin(), orbit.end());
    }
    return result; // ordered by smallest member since x runs upward
}

Subgroup generated_subgroup(const FiniteGroup& gamma, const std::vector<int>& gens)
{
    if (gens.empty())
        throw Error("EmptyInput", "need at least one generator");
    std::set<int> s{0};
    std::queue<int> todo;
    todo.push(0);
    for (int g : gens) {
        if (g < 0 || g >= gamma.order)
            throw Error("ElementOutOfRange", "generator " + std::to_string(g));
        if (s.insert(g).second) todo.push(g);
    }
    while (!todo.empty()) {
        int a = todo.front();
        todo.pop();
        if (s.insert(gamma.inv(a)).second) todo.push(gamma.inv(a));
        std::vector<int> cur(s.begin(), s.end());
        for (int b : cur) {
            if (s.insert(gamma.mul(a, b)).second) todo.push(gamma.mul(a, b));
            if (s.insert(gamma.mul(b, a)).second) todo.push(gamma.mul(b, a));
        }
    }
    return make_subgroup(gamma, {s.begin(), s.end()});
}

Subgroup stabilizer(const FiniteGroup& g, const GroupAction& action, int point)
{
    if (point < 0 || point >= action.set_size)
        throw Error("ElementOutOfRange", "point " + std::to_string(point));
    std::vector<int> elems;
    for (int e = 0; e < g.order; ++e)
        if (action.apply(e, point) == point) elems.push_back(e);
    return make_subgroup(g, std::move(elems));
}

std::vector<long> abelian_invariants(const FiniteGroup& g, const std::vector<int>& elements)
{
    for (int a : elements)
        for (int b : elements)
            if (g.mul(a, b) != g.mul(b, a))
                throw Error("NotAbelian", "elements " + std::to_string(a) + ", " +
                                              std::to_string(b) + " do not commute");

    const long n = static_cast<long>(elements.size());
    auto power = [&](int x, long k) {
        int r = 0;
        for (long i = 0; i < k; ++i) r = g.mul(r, x);
        return r;
    };
    // elementary divisors per prime, from the counts #{x : x^(p^k) = e}
    std::map<long, std::vector<int>> partitions;
    long m = n;
    for (long p = 2; m > 1; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        std::vector<long> s{0};
        long pk = 1;
        while (true) {
            pk *= p;
            long count = 0;
            for (int x : elements)
                if (power(x, pk) == 0) ++count;
            long sk = 0, c = count;
            while (c > 1) {
                c /= p;
                ++sk;
            }
            s.push_back(sk);
            if (count == n || s.back() == s[s.size() - 2]) break; // p-torsion exhausted
        }
        // number of parts >= k equals s_k - s_{k-1}
        std::vector<int> parts;
        for (std::size_t k = 1; k < s.size(); ++k) {
            long cnt = s[k] - s[k - 1];
            for (long kk = static_cast<long>(parts.size()); kk < cnt; ++kk) parts.push_back(0);
            for (long i = 0; i < cnt; ++i) parts[i] += 1;
        }
        if (!parts.empty()) partitions[p] = parts;
    }

    // combine primes into the invariant factor chain (largest part first,
    // then flipped into ascending divisibility order)
    std::size_t len = 0;
    for (auto& [p, parts] : partitions) len = std::max(len, parts.size());
    std::vector<long> factors(len, 1);
    for (auto& [p, parts] : partitions)
        for (std::size_t i = 0; i < parts.size(); ++i) {
            long q = 1;
            for (int e = 0; e < parts[i]; ++e) q *= p;
            factors[i] *= q;
        }
    std::reverse(factors.begin(), factors.end());
    return factors;
}

std::vector<long> abelian_invariants(const FiniteGroup& g)
{
    std::vector<int> all(g.order);
    std::iota(all.begin(), all.end(), 0);
    return abelian_invariants(g, all);
}

} // namespace brpic
