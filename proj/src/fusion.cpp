#include "brpic/fusion.hpp"

#include "brpic/error.hpp"
#include "brpic/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace brpic {

std::string EndLabel::to_string() const
{
    switch (kind) {
    case Kind::R: return "R";
    case Kind::C: return "C";
    case Kind::H: return "H";
    case Kind::Abstract: return "(" + center + "," + brauer_class + ")";
    }
    return "?";
}

bool EndLabel::operator<(const EndLabel& o) const
{
    return std::tie(kind, center, brauer_class) < std::tie(o.kind, o.center, o.brauer_class);
}

EndLabel EndLabel::abstract(std::string center, std::string brauer_class)
{
    EndLabel l;
    l.kind = Kind::Abstract;
    l.center = std::move(center);
    l.brauer_class = std::move(brauer_class);
    return l;
}

std::string BrauerRingElement::to_string() const
{
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [label, mult] : terms) {
        if (!s.empty()) s += " + ";
        if (mult != 1) s += std::to_string(mult);
        s += "[" + label.to_string() + "]";
    }
    return s;
}

namespace {

bool label_allowed(const BaseField& field, const EndLabel& l)
{
    switch (field.kind) {
    case BaseField::Kind::R:
        return l.kind != EndLabel::Kind::Abstract;
    case BaseField::Kind::C:
        return l.kind == EndLabel::Kind::C;
    default:
        return l.kind == EndLabel::Kind::Abstract;
    }
}

EndLabel base_field_label(const BaseField& field)
{
    switch (field.kind) {
    case BaseField::Kind::R: return EndLabel::r();
    case BaseField::Kind::C: return EndLabel::c();
    default: return EndLabel::abstract(field.display(), "1");
    }
}

std::vector<long> grade_sum(const FinAb& g, const std::vector<long>& a,
                            const std::vector<long>& b)
{
    std::vector<long> c(g.factors.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + b[i]) % g.factors[i];
    return c;
}

} // namespace

FusionRingData validate_fusion_ring(FusionRingData data)
{
    const int r = data.rank();
    if (r == 0)
        throw Error("UnitFailure", "no simple objects");
    if (data.unit < 0 || data.unit >= r)
        throw Error("UnitFailure", "unit index out of range");
    if (static_cast<int>(data.n.size()) != r || static_cast<int>(data.dual.size()) != r ||
        static_cast<int>(data.ends.size()) != r)
        throw Error("DimensionMismatch", "structure tables must match the simple count");
    for (const auto& ni : data.n) {
        if (static_cast<int>(ni.size()) != r)
            throw Error("DimensionMismatch", "N must be rank^3");
        for (const auto& nij : ni) {
            if (static_cast<int>(nij.size()) != r)
                throw Error("DimensionMismatch", "N must be rank^3");
            for (long v : nij)
                if (v < 0)
                    throw Error("DimensionMismatch", "structure constants must be >= 0");
        }
    }

    const int u = data.unit;
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
            long expect = j == k ? 1 : 0;
            if (data.n[u][j][k] != expect || data.n[j][u][k] != expect)
                throw Error("UnitFailure", "unit constraint fails at (j=" + std::to_string(j) +
                                               ",k=" + std::to_string(k) + ")");
        }

    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int l = 0; l < r; ++l)
                for (int m = 0; m < r; ++m) {
                    long lhs = 0, rhs = 0;
                    for (int k = 0; k < r; ++k) {
                        lhs += data.n[i][j][k] * data.n[k][l][m];
                        rhs += data.n[j][l][k] * data.n[i][k][m];
                    }
                    if (lhs != rhs)
                        throw Error("AssociativityFailure",
                                    "(i,j,l,m) = (" + std::to_string(i) + "," +
                                        std::to_string(j) + "," + std::to_string(l) + "," +
                                        std::to_string(m) + ")");
                }

    for (int i = 0; i < r; ++i) {
        if (data.dual[i] < 0 || data.dual[i] >= r || data.dual[data.dual[i]] != i)
            throw Error("DualityFailure", "dual is not an involution at " + std::to_string(i));
        for (int j = 0; j < r; ++j) {
            bool pairs = data.n[i][j][u] > 0;
            if (pairs != (j == data.dual[i]))
                throw Error("DualityFailure", "N[i][j][unit] > 0 iff j = dual(i) fails at (" +
                                                  std::to_string(i) + "," + std::to_string(j) +
                                                  ")");
        }
    }

    // over R with a split unit, the pairing X (x) dual(X) -> 1 has
    // multiplicity dim_R End(X): 1, 2, 4 for R, C, H
    if (data.base_field.kind == BaseField::Kind::R && data.assert_split_unit) {
        for (int i = 0; i < r; ++i) {
            long expect = data.ends[i].kind == EndLabel::Kind::R   ? 1
                          : data.ends[i].kind == EndLabel::Kind::C ? 2
                                                                   : 4;
            if (data.n[i][data.dual[i]][u] != expect)
                throw Error("DualityFailure",
                            "pairing multiplicity N[" + std::to_string(i) + "][dual][unit] = " +
                                std::to_string(data.n[i][data.dual[i]][u]) +
                                " != dim End = " + std::to_string(expect));
        }
    }

    for (int i = 0; i < r; ++i)
        if (!label_allowed(data.base_field, data.ends[i]))
            throw Error("EndLabelFailure", "label " + data.ends[i].to_string() +
                                               " is not in the table of base field " +
                                               data.base_field.display());
    if (data.assert_split_unit && !(data.ends[u] == base_field_label(data.base_field)))
        throw Error("EndLabelFailure",
                    "End(1) = " + data.ends[u].to_string() + " but the split-unit hypothesis " +
                        "asserts the base field " + data.base_field.display());

    if (data.braiding_grading) {
        const auto& bg = *data.braiding_grading;
        if (static_cast<int>(bg.grades.size()) != r)
            throw Error("DimensionMismatch", "one grade per simple required");
        for (const auto& gr : bg.grades) {
            if (gr.size() != bg.group.factors.size())
                throw Error("DimensionMismatch", "grade tuple has wrong length");
            for (std::size_t t = 0; t < gr.size(); ++t)
                if (gr[t] < 0 || gr[t] >= bg.group.factors[t])
                    throw Error("DimensionMismatch", "grade entry out of range");
        }
        for (long v : bg.grades[u])
            if (v != 0)
                throw Error("UnitFailure", "unit must sit in the trivial grade");
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                auto sum = grade_sum(bg.group, bg.grades[i], bg.grades[j]);
                for (int k = 0; k < r; ++k)
                    if (data.n[i][j][k] > 0 && bg.grades[k] != sum)
                        throw Error("DimensionMismatch",
                                    "fusion is not graded at (" + std::to_string(i) + "," +
                                        std::to_string(j) + "," + std::to_string(k) + ")");
            }
    }
    return data;
}

BrauerRingElement algebra_profile(const FusionRingData& data)
{
    BrauerRingElement p;
    for (const auto& l : data.ends) p.terms[l] += 1;
    return p;
}

namespace {

// one-term product in B(R)
std::pair<EndLabel, long> mul_labels(const EndLabel& a, const EndLabel& b)
{
    using K = EndLabel::Kind;
    if (a.kind == K::Abstract || b.kind == K::Abstract)
        throw Error("UnsupportedField", "Brauer-ring multiplication is only tabled over R");
    if (a.kind == K::R) return {b, 1};
    if (b.kind == K::R) return {a, 1};
    if (a.kind == K::H && b.kind == K::H) return {EndLabel::r(), 1};
    if (a.kind == K::C && b.kind == K::C) return {EndLabel::c(), 2};
    return {EndLabel::c(), 1}; // C*H or H*C
}

} // namespace

BrauerRingElement profile_twist(const BrauerRingElement& profile, const EndLabel& d)
{
    BrauerRingElement out;
    for (const auto& [label, mult] : profile.terms) {
        auto [res, factor] = mul_labels(label, d);
        out.terms[res] += mult * factor;
    }
    return out;
}

bool twist_obstruction(const FusionRingData& data, const EndLabel& d)
{
    if (data.base_field.kind != BaseField::Kind::R)
        throw Error("UnsupportedField", "profile twisting is only tabled over R");
    BrauerRingElement p = algebra_profile(data);
    return !(profile_twist(p, d) == p);
}

InvertibleGroup invertible_objects(const FusionRingData& data)
{
    const int r = data.rank();
    const int u = data.unit;
    EndLabel base = base_field_label(data.base_field);

    std::vector<int> inv;
    for (int i = 0; i < r; ++i) {
        bool exact_unit = true;
        for (int k = 0; k < r; ++k) {
            long expect = k == u ? 1 : 0;
            if (data.n[i][data.dual[i]][k] != expect) exact_unit = false;
        }
        if (exact_unit && data.ends[i] == base) inv.push_back(i);
    }

    // induced multiplication: the product of invertibles must be a single
    // invertible simple with multiplicity one
    const int m = static_cast<int>(inv.size());
    std::vector<int> pos(r, -1);
    for (int a = 0; a < m; ++a) pos[inv[a]] = a;
    if (m == 0 || pos[u] < 0)
        throw Error("NonGroupClosure", "the unit is not among the invertible objects");

    std::vector<std::vector<int>> table(m, std::vector<int>(m, -1));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int target = -1;
            for (int k = 0; k < r; ++k) {
                if (data.n[inv[a]][inv[b]][k] == 0) continue;
                if (target >= 0 || data.n[inv[a]][inv[b]][k] != 1)
                    throw Error("NonGroupClosure", "product of invertibles is not simple");
                target = k;
            }
            if (target < 0 || pos[target] < 0)
                throw Error("NonGroupClosure",
                            "product of invertibles " + data.simples[inv[a]] + ", " +
                                data.simples[inv[b]] + " leaves the invertible set");
            table[a][b] = pos[target];
        }

    InvertibleGroup out;
    std::vector<std::string> labels;
    for (int a = 0; a < m; ++a) labels.push_back(data.simples[inv[a]]);
    // the unit need not be listed first; validate_group re-indexes, so keep
    // ours aligned by placing it first ourselves
    if (pos[u] != 0) {
        std::swap(inv[0], inv[pos[u]]);
        std::vector<int> pos2(r, -1);
        for (int a = 0; a < m; ++a) pos2[inv[a]] = a;
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                int target = -1;
                for (int k = 0; k < r; ++k)
                    if (data.n[inv[a]][inv[b]][k] == 1) target = k;
                table[a][b] = pos2[target];
            }
        labels.clear();
        for (int a = 0; a < m; ++a) labels.push_back(data.simples[inv[a]]);
    }
    out.indices = inv;
    out.labels = labels;
    out.group = validate_group(table, labels);
    if (out.group.is_abelian())
        out.abelian_type = FinAb{abelian_invariants(out.group)};
    return out;
}

FinAb aut_tensor_id(const FusionRingData& data)
{
    if (data.base_field.kind != BaseField::Kind::R)
        throw Error("UnsupportedField", "tensorator characters are tabled over R only");
    if (!data.braiding_grading)
        throw Error("MissingGrading", "no grading group supplied");
    std::vector<long> factors;
    for (long d : data.braiding_grading->group.factors)
        factors.push_back(std::gcd(d, 2L)); // Hom(Z/d, Z/2)
    return FinAb::of(factors);
}

std::vector<mpz_class> characteristic_polynomial(const std::vector<std::vector<long>>& a)
{
    const std::size_t n = a.size();
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = a[i][j];

    // Faddeev-LeVerrier: M_1 = A, c_k = -tr(A M_{k-1} + c_{k-1} A)/k
    std::vector<mpz_class> c(n + 1);
    c[n] = 1; // leading coefficient of lambda^n
    IntMat mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        mpz_class tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i);
        if (tr % static_cast<long>(k) != 0)
            throw Error("Internal", "Faddeev-LeVerrier trace division is not exact");
        mpz_class ck = -(tr / static_cast<long>(k));
        c[n - k] = ck;
        if (k < n) {
            for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += ck;
            mk = mul(m, mk);
        }
    }
    return c;
}

namespace {

using QP = std::vector<mpq_class>;

void qtrim(QP& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QP qderive(const QP& p)
{
    QP d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(mpq_class(i) * p[i]);
    return d;
}

QP qmod(const QP& a, const QP& b)
{
    QP r = a;
    qtrim(r);
    while (r.size() >= b.size() && !r.empty()) {
        mpq_class c = r.back() / b.back();
        std::size_t shift = r.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        qtrim(r);
    }
    return r;
}

QP qgcd(QP a, QP b)
{
    qtrim(a);
    qtrim(b);
    while (!b.empty()) {
        QP r = qmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

mpq_class qeval(const QP& p, const mpq_class& x)
{
    mpq_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int sign_of(const mpq_class& x)
{
    return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

int sturm_variations(const std::vector<QP>& chain, const mpq_class& x)
{
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_of(qeval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

std::vector<QP> sturm_chain(const QP& squarefree)
{
    std::vector<QP> chain{squarefree, qderive(squarefree)};
    while (!chain.back().empty() && chain.back().size() > 1) {
        QP r = qmod(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

} // namespace

int count_real_roots(const std::vector<mpq_class>& p, const mpq_class& a, const mpq_class& b)
{
    QP sf = p;
    qtrim(sf);
    if (sf.size() <= 1) return 0;
    QP g = qgcd(sf, qderive(sf));
    if (g.size() > 1) {
        // divide out repeated factors: sf / g by repeated qmod-style division
        QP q;
        QP r = sf;
        qtrim(r);
        q.assign(r.size() - g.size() + 1, mpq_class(0));
        while (r.size() >= g.size() && !r.empty()) {
            mpq_class c = r.back() / g.back();
            std::size_t shift = r.size() - g.size();
            q[shift] = c;
            for (std::size_t i = 0; i < g.size(); ++i) r[shift + i] -= c * g[i];
            qtrim(r);
        }
        sf = q;
    }
    auto chain = sturm_chain(sf);
    // with zeros skipped, the variation count at x equals its right limit
    // V(x+), so the difference counts roots in the half-open (a, b]
    return sturm_variations(chain, a) - sturm_variations(chain, b);
}

namespace {

FPDim fpdim_of_matrix(const std::vector<std::vector<long>>& fm)
{
    auto cz = characteristic_polynomial(fm);
    QP p(cz.size());
    for (std::size_t i = 0; i < cz.size(); ++i) p[i] = mpq_class(cz[i]);

    // Perron root <= max row sum
    long maxrow = 0;
    for (const auto& row : fm) {
        long s = 0;
        for (long v : row) s += v;
        maxrow = std::max(maxrow, s);
    }
    mpq_class lo = -(maxrow + 1), hi = maxrow + 1;
    // largest real root lies in (lo, hi]
    const mpq_class eps("1/1000000000000"); // 1e-12
    while (hi - lo > eps) {
        mpq_class mid = (lo + hi) / 2;
        if (qeval(p, mid) == 0) {
            // mid is a root; largest unless something lives above it
            if (count_real_roots(p, mid, hi) == 0) {
                FPDim d;
                d.exact = true;
                d.value = mid;
                d.lo = d.hi = mid;
                return d;
            }
            lo = mid;
            continue;
        }
        if (count_real_roots(p, mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    // monic integer polynomial: rational roots are integers
    mpz_class cand = mpz_class(lo.get_num() / lo.get_den()); // floor-ish probe
    for (int off = -1; off <= 2; ++off) {
        mpq_class c = mpq_class(cand) + off;
        if (c > lo && c <= hi && qeval(p, c) == 0) {
            FPDim d;
            d.exact = true;
            d.value = c;
            d.lo = d.hi = c;
            return d;
        }
    }
    FPDim d;
    d.lo = lo;
    d.hi = hi;
    return d;
}

std::vector<std::vector<long>> fusion_matrix(const FusionRingData& data, int i)
{
    const int r = data.rank();
    std::vector<std::vector<long>> fm(r, std::vector<long>(r));
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k)
            fm[k][j] = data.n[i][j][k]; // column j = expansion of X_i X_j
    return fm;
}

} // namespace

std::vector<FPDim> fp_dimensions(const FusionRingData& data)
{
    std::vector<FPDim> out;
    for (int i = 0; i < data.rank(); ++i) out.push_back(fpdim_of_matrix(fusion_matrix(data, i)));
    return out;
}

bool fp_dimensions_ge_one(const FusionRingData& data)
{
    for (int i = 0; i < data.rank(); ++i) {
        auto fm = fusion_matrix(data, i);
        auto cz = characteristic_polynomial(fm);
        QP p(cz.size());
        for (std::size_t t = 0; t < cz.size(); ++t) p[t] = mpq_class(cz[t]);
        long maxrow = 0;
        for (const auto& row : fm) {
            long s = 0;
            for (long v : row) s += v;
            maxrow = std::max(maxrow, s);
        }
        bool ge_one = qeval(p, 1) == 0 || count_real_roots(p, 1, mpq_class(maxrow + 1)) >= 1;
        if (!ge_one) return false;
    }
    return true;
}

bool fp_dimension_multiplicative(const FusionRingData& data)
{
    auto dims = fp_dimensions(data);
    const int r = data.rank();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            mpq_class lo = dims[i].lo * dims[j].lo, hi = dims[i].hi * dims[j].hi;
            mpq_class slo = 0, shi = 0;
            for (int k = 0; k < r; ++k) {
                slo += data.n[i][j][k] * dims[k].lo;
                shi += data.n[i][j][k] * dims[k].hi;
            }
            bool all_exact = dims[i].exact && dims[j].exact;
            for (int k = 0; k < r; ++k)
                if (data.n[i][j][k] > 0 && !dims[k].exact) all_exact = false;
            if (all_exact) {
                if (lo != slo) return false;
            } else if (hi < slo || shi < lo) {
                return false; // certified disjoint intervals
            }
        }
    return true;
}

} // namespace brpic
