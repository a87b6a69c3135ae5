#include "brpic/cohomology.hpp"

#include "brpic/error.hpp"

#include <algorithm>

namespace brpic {

long CohomologyGroup::order() const
{
    if (free_rank > 0)
        throw Error("InfiniteGroup", "cohomology group has positive free rank");
    long n = 1;
    for (long d : invariant_factors) n *= d;
    return n;
}

std::string CohomologyGroup::to_string() const
{
    if (is_trivial()) return "1";
    std::string s;
    for (int i = 0; i < free_rank; ++i) {
        if (!s.empty()) s += " x ";
        s += "Z";
    }
    for (long d : invariant_factors) {
        if (!s.empty()) s += " x ";
        s += "Z/" + std::to_string(d);
    }
    return s;
}

long Cocycle::tuple_rank(const std::vector<int>& tuple) const
{
    long r = 0;
    for (int t : tuple) r = r * group_order + t;
    return r;
}

const std::vector<mpz_class>& Cocycle::at(const std::vector<int>& tuple) const
{
    return values[tuple_rank(tuple)];
}

long normalized_tuple_count(const FiniteGroup& g, int n)
{
    long c = 1;
    for (int i = 0; i < n; ++i) c *= g.order - 1;
    return c;
}

std::vector<int> normalized_tuple_at(const FiniteGroup& g, int n, long rank)
{
    // digits in {1, ..., order-1}, first coordinate most significant
    std::vector<int> t(n);
    for (int i = n - 1; i >= 0; --i) {
        t[i] = 1 + static_cast<int>(rank % (g.order - 1));
        rank /= g.order - 1;
    }
    return t;
}

namespace {

long normalized_tuple_rank(const FiniteGroup& g, const std::vector<int>& t)
{
    long r = 0;
    for (int x : t) r = r * (g.order - 1) + (x - 1);
    return r;
}

void reduce_rows_mod_torsion(IntMat& a, const GModule& m)
{
    const int gens = m.gens();
    if (m.torsion.empty()) return;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        int s = static_cast<int>(i) % gens;
        if (s < m.free_rank) continue;
        mpz_class d(m.torsion[s - m.free_rank]);
        for (std::size_t j = 0; j < a.cols(); ++j) {
            mpz_class& x = a.at(i, j);
            x %= d;
            if (x < 0) x += d;
        }
    }
}

// Columns d_j * e_(tuple, torsion j): the relation lattice of C^n.
IntMat relation_columns(int n, const FiniteGroup& g, const GModule& m)
{
    const int gens = m.gens();
    const int t = static_cast<int>(m.torsion.size());
    const long tuples = normalized_tuple_count(g, n);
    IntMat r(tuples * gens, tuples * t);
    for (long tp = 0; tp < tuples; ++tp)
        for (int j = 0; j < t; ++j)
            r.at(tp * gens + m.free_rank + j, tp * t + j) = m.torsion[j];
    return r;
}

struct CohomologyData {
    CohomologyGroup group;
    // one normalized cochain per listed order: finite generators first
    // (orders = invariant factors), then free generators (order 0)
    std::vector<std::vector<mpz_class>> generator_cochains;
    std::vector<long> generator_orders;
    long cochain_dim = 0;
};

CohomologyData cohomology_with_generators(const FiniteGroup& g, const GModule& m, int n)
{
    if (n < 0)
        throw Error("BadDegree", "negative degree");

    CohomologyData out;
    const int gens = m.gens();
    const long kn = normalized_tuple_count(g, n) * gens;
    out.cochain_dim = kn;
    if (kn == 0) {
        return out; // zero cochain group
    }

    IntMat a = bar_differential(n, g, m);
    IntMat stacked = hcat(a, relation_columns(n + 1, g, m));
    IntMat kern = kernel_basis(stacked);

    // projection of the kernel onto the cochain coordinates spans
    // {x : d(x) lies in the relation lattice}
    IntMat zmat(kn, kern.cols());
    for (std::size_t i = 0; i < static_cast<std::size_t>(kn); ++i)
        for (std::size_t j = 0; j < kern.cols(); ++j)
            zmat.at(i, j) = kern.at(i, j);

    IntMat b = n == 0 ? relation_columns(0, g, m)
                      : hcat(bar_differential(n - 1, g, m), relation_columns(n, g, m));

    SmithForm fz = smith_normal_form(zmat);
    const std::size_t rz = fz.rank;

    // coordinates of the coboundary/relation lattice in the kernel basis
    IntMat ub = mul(fz.u, b);
    for (std::size_t i = rz; i < ub.rows(); ++i)
        for (std::size_t j = 0; j < ub.cols(); ++j)
            if (ub.at(i, j) != 0)
                throw Error("Internal", "coboundary escapes the cocycle lattice");
    IntMat y(rz, b.cols());
    for (std::size_t i = 0; i < rz; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            mpz_class q;
            mpz_class rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), ub.at(i, j).get_mpz_t(),
                        fz.d.at(i, i).get_mpz_t());
            if (rem != 0)
                throw Error("Internal", "coboundary escapes the cocycle lattice");
            y.at(i, j) = q;
        }

    SmithForm fy = smith_normal_form(y);

    // kernel-lattice basis vectors b_k = d_k * (column k of U_z^{-1})
    auto kernel_basis_vector = [&](std::size_t k) {
        std::vector<mpz_class> v(kn);
        for (std::size_t i = 0; i < static_cast<std::size_t>(kn); ++i)
            v[i] = fz.d.at(k, k) * fz.u_inv.at(i, k);
        return v;
    };

    auto quotient_generator = [&](std::size_t i) {
        // column i of U_y^{-1}, expanded through the kernel basis
        std::vector<mpz_class> v(kn, 0);
        for (std::size_t k = 0; k < rz; ++k) {
            const mpz_class& c = fy.u_inv.at(k, i);
            if (c == 0) continue;
            auto bk = kernel_basis_vector(k);
            for (std::size_t t = 0; t < static_cast<std::size_t>(kn); ++t)
                v[t] += c * bk[t];
        }
        // canonical torsion range
        for (std::size_t t = 0; t < static_cast<std::size_t>(kn); ++t) {
            int s = static_cast<int>(t) % gens;
            if (s >= m.free_rank) {
                mpz_class d(m.torsion[s - m.free_rank]);
                v[t] %= d;
                if (v[t] < 0) v[t] += d;
            }
        }
        return v;
    };

    for (std::size_t i = 0; i < fy.rank; ++i) {
        long d = fy.d.at(i, i).get_si();
        if (d == 1) continue;
        out.group.invariant_factors.push_back(d);
        out.generator_cochains.push_back(quotient_generator(i));
        out.generator_orders.push_back(d);
    }
    out.group.free_rank = static_cast<int>(rz - fy.rank);
    for (std::size_t i = fy.rank; i < rz; ++i) {
        out.generator_cochains.push_back(quotient_generator(i));
        out.generator_orders.push_back(0);
    }
    return out;
}

} // namespace

IntMat bar_differential(int n, const FiniteGroup& g, const GModule& m)
{
    if (n < 0)
        throw Error("BadDegree", "negative degree");
    const int gens = m.gens();
    const long src_tuples = normalized_tuple_count(g, n);
    const long dst_tuples = normalized_tuple_count(g, n + 1);
    IntMat d(dst_tuples * gens, src_tuples * gens);
    if (gens == 0 || dst_tuples == 0) return d;

    for (long row_tp = 0; row_tp < dst_tuples; ++row_tp) {
        std::vector<int> sigma = normalized_tuple_at(g, n + 1, row_tp);

        // g0 . f(g1, ..., gn)
        {
            std::vector<int> tau(sigma.begin() + 1, sigma.end());
            long ct = normalized_tuple_rank(g, tau);
            const IntMat& act = m.act(sigma[0]);
            for (int sp = 0; sp < gens; ++sp)
                for (int s = 0; s < gens; ++s)
                    d.at(row_tp * gens + sp, ct * gens + s) += act.at(sp, s);
        }
        // alternating face maps; merged identities vanish by normalization
        for (int i = 1; i <= n; ++i) {
            int merged = g.mul(sigma[i - 1], sigma[i]);
            if (merged == 0) continue;
            std::vector<int> tau;
            tau.reserve(n);
            for (int k = 0; k <= n; ++k) {
                if (k == i - 1) {
                    tau.push_back(merged);
                    ++k; // skip position i
                }
                else {
                    tau.push_back(sigma[k]);
                }
            }
            long ct = normalized_tuple_rank(g, tau);
            int sign = (i % 2) ? -1 : 1;
            for (int s = 0; s < gens; ++s)
                d.at(row_tp * gens + s, ct * gens + s) += sign;
        }
        // (-1)^{n+1} f(g0, ..., g_{n-1})
        {
            std::vector<int> tau(sigma.begin(), sigma.end() - 1);
            long ct = normalized_tuple_rank(g, tau);
            int sign = ((n + 1) % 2) ? -1 : 1;
            for (int s = 0; s < gens; ++s)
                d.at(row_tp * gens + s, ct * gens + s) += sign;
        }
    }
    reduce_rows_mod_torsion(d, m);
    return d;
}

CohomologyGroup cohomology(const FiniteGroup& g, const GModule& m, int n)
{
    return cohomology_with_generators(g, m, n).group;
}

namespace {

std::vector<int> full_tuple_at(int order, int n, long rank)
{
    std::vector<int> t(n);
    for (int i = n - 1; i >= 0; --i) {
        t[i] = static_cast<int>(rank % order);
        rank /= order;
    }
    return t;
}

bool tuple_has_identity(const std::vector<int>& t)
{
    return std::find(t.begin(), t.end(), 0) != t.end();
}

long full_tuple_count(int order, int n)
{
    long c = 1;
    for (int i = 0; i < n; ++i) c *= order;
    return c;
}

// normalized cochain vector -> dense cocycle over all tuples
Cocycle to_cocycle(const FiniteGroup& g, const GModule& m, int n,
                   const std::vector<mpz_class>& v)
{
    Cocycle c;
    c.degree = n;
    c.group_order = g.order;
    c.gens = m.gens();
    c.values.assign(full_tuple_count(g.order, n), std::vector<mpz_class>(c.gens, 0));
    const long nt = normalized_tuple_count(g, n);
    for (long tp = 0; tp < nt; ++tp) {
        std::vector<int> tuple = normalized_tuple_at(g, n, tp);
        long full = 0;
        for (int x : tuple) full = full * g.order + x;
        for (int s = 0; s < c.gens; ++s) c.values[full][s] = v[tp * c.gens + s];
    }
    return c;
}

// dense cocycle -> normalized cochain vector; rejects non-normalized input
std::vector<mpz_class> to_normalized_vector(const FiniteGroup& g, const GModule& m,
                                            const Cocycle& c)
{
    if (c.values.size() != static_cast<std::size_t>(full_tuple_count(g.order, c.degree)))
        throw Error("DimensionMismatch", "cocycle value table has wrong size");
    const int gens = m.gens();
    const long nt = normalized_tuple_count(g, c.degree);
    std::vector<mpz_class> v(nt * gens, 0);
    for (long full = 0; full < static_cast<long>(c.values.size()); ++full) {
        std::vector<int> tuple = full_tuple_at(g.order, c.degree, full);
        if (tuple_has_identity(tuple)) {
            if (!m.is_zero(c.values[full]))
                throw Error("NotNormalized", "cocycle does not vanish on identity arguments");
            continue;
        }
        long tp = normalized_tuple_rank(g, tuple);
        for (int s = 0; s < gens; ++s) v[tp * gens + s] = c.values[full][s];
    }
    return v;
}

} // namespace

std::vector<Cocycle> cocycle_representatives(const FiniteGroup& g, const GModule& m, int n,
                                             long bound)
{
    CohomologyData data = cohomology_with_generators(g, m, n);
    if (!data.group.is_finite())
        throw Error("TooLarge", "H^n is infinite; no finite list of representatives");
    long h = data.group.order();
    long cost = h;
    for (int i = 0; i < n; ++i) cost *= g.order;
    if (cost > bound)
        throw Error("TooLarge", "|H^n| * |G|^n = " + std::to_string(cost) +
                                    " exceeds bound " + std::to_string(bound));

    const int gens = std::max(m.gens(), 1);
    std::vector<Cocycle> out;
    std::vector<long> counter(data.generator_orders.size(), 0);
    while (true) {
        std::vector<mpz_class> v(data.cochain_dim, 0);
        for (std::size_t k = 0; k < counter.size(); ++k) {
            if (counter[k] == 0) continue;
            for (long i = 0; i < data.cochain_dim; ++i)
                v[i] += counter[k] * data.generator_cochains[k][i];
        }
        // canonical torsion range
        for (long i = 0; i < data.cochain_dim; ++i) {
            int s = static_cast<int>(i) % gens;
            if (s >= m.free_rank && !m.torsion.empty()) {
                mpz_class d(m.torsion[s - m.free_rank]);
                v[i] %= d;
                if (v[i] < 0) v[i] += d;
            }
        }
        out.push_back(to_cocycle(g, m, n, v));

        int k = static_cast<int>(counter.size()) - 1;
        while (k >= 0) {
            if (++counter[k] < data.generator_orders[k]) break;
            counter[k] = 0;
            --k;
        }
        if (k < 0) break;
    }
    return out;
}

bool is_cocycle(const FiniteGroup& g, const GModule& m, const Cocycle& c)
{
    const int n = c.degree;
    if (c.group_order != g.order || c.gens != m.gens())
        throw Error("DimensionMismatch", "cocycle does not match group/module");
    if (c.values.size() != static_cast<std::size_t>(full_tuple_count(g.order, n)))
        throw Error("DimensionMismatch", "cocycle value table has wrong size");
    const long total = full_tuple_count(g.order, n + 1);
    for (long r = 0; r < total; ++r) {
        std::vector<int> sigma = full_tuple_at(g.order, n + 1, r);
        std::vector<mpz_class> acc(m.gens(), 0);
        // g0 . f(g1..gn)
        {
            std::vector<int> tau(sigma.begin() + 1, sigma.end());
            const auto& fv = c.at(tau);
            const IntMat& act = m.act(sigma[0]);
            for (int sp = 0; sp < m.gens(); ++sp)
                for (int s = 0; s < m.gens(); ++s)
                    acc[sp] += act.at(sp, s) * fv[s];
        }
        for (int i = 1; i <= n; ++i) {
            std::vector<int> tau;
            for (int k = 0; k <= n; ++k) {
                if (k == i - 1) {
                    tau.push_back(g.mul(sigma[i - 1], sigma[i]));
                    ++k;
                }
                else {
                    tau.push_back(sigma[k]);
                }
            }
            const auto& fv = c.at(tau);
            int sign = (i % 2) ? -1 : 1;
            for (int s = 0; s < m.gens(); ++s) acc[s] += sign * fv[s];
        }
        {
            std::vector<int> tau(sigma.begin(), sigma.end() - 1);
            const auto& fv = c.at(tau);
            int sign = ((n + 1) % 2) ? -1 : 1;
            for (int s = 0; s < m.gens(); ++s) acc[s] += sign * fv[s];
        }
        if (!m.is_zero(acc)) return false;
    }
    return true;
}

bool is_coboundary(const FiniteGroup& g, const GModule& m, const Cocycle& c)
{
    std::vector<mpz_class> v = to_normalized_vector(g, m, c);
    IntMat b = c.degree == 0
                   ? relation_columns(0, g, m)
                   : hcat(bar_differential(c.degree - 1, g, m), relation_columns(c.degree, g, m));
    if (v.empty()) return true;
    return solvable(b, v);
}

bool are_cohomologous(const FiniteGroup& g, const GModule& m, const Cocycle& a,
                      const Cocycle& b)
{
    if (a.degree != b.degree || a.values.size() != b.values.size())
        throw Error("DimensionMismatch", "cocycles of different shape");
    Cocycle diff = a;
    for (std::size_t i = 0; i < diff.values.size(); ++i)
        for (int s = 0; s < diff.gens; ++s) diff.values[i][s] -= b.values[i][s];
    return is_coboundary(g, m, diff);
}

bool is_symmetric_cocycle(const FiniteGroup& g, const GModule& m, const Cocycle& j)
{
    if (!g.is_abelian())
        throw Error("NotAbelian", "braiding symmetry test needs an abelian grading");
    if (j.degree != 2)
        throw Error("BadDegree", "tensorator cocycles have degree 2");
    if (m.gens() != 1)
        throw Error("NotScalar", "tensorator values must lie in a cyclic module");
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) {
            mpz_class diff = j.at({a, b})[0] - j.at({b, a})[0];
            if (m.torsion.empty() ? diff != 0 : diff % m.torsion[0] != 0) return false;
        }
    return true;
}

bool pw_sign_identity_check()
{
    for (int f = 0; f <= 1; ++f)
        for (int g = 0; g <= 1; ++g)
            for (int h = 0; h <= 1; ++h)
                for (int k = 0; k <= 1; ++k)
                    if ((f * g * h * k * (g + 2 * h + k)) % 2 != 0) return false;
    return true;
}

GModule reduce_unit_coefficients(const BaseField& field, int degree, const FiniteGroup& g)
{
    if (degree < 1)
        throw Error("BadDegree", "unit-group reduction applies in degrees >= 1");
    auto cyclic = [&](long n, const std::string& note) {
        GModule m;
        if (n > 1) m.torsion = {n};
        m.note = note;
        return validate_gmodule(g, std::move(m));
    };
    switch (field.kind) {
    case BaseField::Kind::R:
        return cyclic(2, "R^x -> Z/2 (sign); the positive ray is divisible and "
                         "has vanishing higher cohomology for finite groups");
    case BaseField::Kind::C: {
        long e = g.exponent();
        return cyclic(e, "C^x -> Z/" + std::to_string(e) +
                             " (e = exponent of G); Q/Z truncated to its e-torsion, "
                             "modulus part dropped");
    }
    case BaseField::Kind::FiniteField:
        return cyclic(field.q - 1, "F_q^x is cyclic of order q-1 = " + std::to_string(field.q - 1));
    case BaseField::Kind::Abstract:
        throw Error("UnsupportedField",
                    "no unit-group data for abstract field " + field.name);
    }
    throw Error("UnsupportedField", "unknown field kind");
}

} // namespace brpic
