#include "brpic/numberfield.hpp"

#include "brpic/error.hpp"

#include <algorithm>

namespace brpic {

namespace {

using QPoly = std::vector<mpq_class>; // ascending, may carry trailing zeros

void trim(QPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const QPoly& p)
{
    return static_cast<int>(p.size()) - 1;
}

QPoly qp_mul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    }
    return c;
}

QPoly qp_sub(QPoly a, const QPoly& b)
{
    if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// division with remainder by a monic divisor
void qp_divmod(const QPoly& a, const QPoly& d, QPoly& q, QPoly& r)
{
    r = a;
    trim(r);
    q.clear();
    const int dd = deg(d);
    while (deg(r) >= dd) {
        int shift = deg(r) - dd;
        mpq_class c = r.back() / d.back();
        if (static_cast<int>(q.size()) <= shift) q.resize(shift + 1, mpq_class(0));
        q[shift] += c;
        for (int i = 0; i <= dd; ++i) r[shift + i] -= c * d[i];
        trim(r);
    }
}

QPoly qp_mod(const QPoly& a, const QPoly& m)
{
    QPoly q, r;
    qp_divmod(a, m, q, r);
    return r;
}

} // namespace

bool squarefree_int_poly(const std::vector<mpz_class>& m)
{
    QPoly p(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) p[i] = mpq_class(m[i]);
    trim(p);
    if (deg(p) < 1) return false;
    QPoly dp(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) dp[i - 1] = mpq_class(i) * p[i];
    trim(dp);
    // monic gcd over Q
    QPoly a = p, b = dp;
    while (!b.empty()) {
        QPoly r = qp_mod(a, [&] {
            QPoly mb = b;
            mpq_class lead = mb.back();
            for (auto& c : mb) c /= lead;
            return mb;
        }());
        a = b;
        b = r;
    }
    return deg(a) == 0;
}

NumberField::NumberField(std::vector<mpz_class> modulus) : modulus_(std::move(modulus))
{
    while (!modulus_.empty() && modulus_.back() == 0) modulus_.pop_back();
    if (modulus_.size() < 2)
        throw Error("BadModulus", "modulus must have degree >= 1");
    if (modulus_.back() != 1)
        throw Error("BadModulus", "modulus must be monic");
    if (!squarefree_int_poly(modulus_))
        throw Error("BadModulus", "modulus must be squarefree");
}

bool NFElem::is_zero() const
{
    return std::all_of(coeffs.begin(), coeffs.end(),
                       [](const mpq_class& c) { return c == 0; });
}

bool NFElem::operator==(const NFElem& o) const
{
    return coeffs == o.coeffs;
}

std::string NFElem::to_string(const std::string& var) const
{
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += coeffs[i].get_str();
        if (i >= 1) s += "*" + var;
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

NFElem nf_make(const std::shared_ptr<const NumberField>& f, std::vector<mpq_class> coeffs)
{
    QPoly p = std::move(coeffs);
    QPoly m(f->modulus().size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = mpq_class(f->modulus()[i]);
    p = qp_mod(p, m);
    p.resize(f->degree(), mpq_class(0));
    for (auto& c : p) c.canonicalize();
    return NFElem{f, std::move(p)};
}

NFElem nf_zero(const std::shared_ptr<const NumberField>& f)
{
    return NFElem{f, std::vector<mpq_class>(f->degree(), mpq_class(0))};
}

NFElem nf_one(const std::shared_ptr<const NumberField>& f)
{
    return nf_rational(f, mpq_class(1));
}

NFElem nf_rational(const std::shared_ptr<const NumberField>& f, const mpq_class& c)
{
    auto e = nf_zero(f);
    e.coeffs[0] = c;
    return e;
}

NFElem nf_generator(const std::shared_ptr<const NumberField>& f)
{
    return nf_make(f, {mpq_class(0), mpq_class(1)});
}

NFElem nf_add(const NFElem& a, const NFElem& b)
{
    NFElem c = a;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] += b.coeffs[i];
    return c;
}

NFElem nf_sub(const NFElem& a, const NFElem& b)
{
    NFElem c = a;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] -= b.coeffs[i];
    return c;
}

NFElem nf_neg(const NFElem& a)
{
    NFElem c = a;
    for (auto& x : c.coeffs) x = -x;
    return c;
}

NFElem nf_mul(const NFElem& a, const NFElem& b)
{
    return nf_make(a.field, qp_mul(a.coeffs, b.coeffs));
}

NFElem nf_inv(const NFElem& a)
{
    if (a.is_zero())
        throw Error("NotInvertible", "division by zero");
    // extended Euclid: s*a + t*m = g with g constant when a is invertible
    QPoly m(a.field->modulus().size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = mpq_class(a.field->modulus()[i]);
    QPoly r0 = m, r1 = a.coeffs;
    trim(r1);
    QPoly s0 = {}, s1 = {mpq_class(1)}; // coefficients of a
    while (!r1.empty() && deg(r1) > 0) {
        QPoly mon = r1;
        mpq_class lead = mon.back();
        for (auto& c : mon) c /= lead;
        QPoly q, rem;
        qp_divmod(r0, mon, q, rem);
        for (auto& c : q) c /= lead; // q now against the unnormalized r1
        QPoly s2 = qp_sub(s0, qp_mul(q, s1));
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (r1.empty()) {
        // gcd(a, m) = r0 nonconstant: a is a zero divisor
        throw Error("NotInvertible", "element is a zero divisor modulo the modulus");
    }
    // r1 is the constant gcd; inverse = s1 / r1
    QPoly inv = s1;
    for (auto& c : inv) c /= r1[0];
    return nf_make(a.field, std::move(inv));
}

NFElem nf_div(const NFElem& a, const NFElem& b)
{
    return nf_mul(a, nf_inv(b));
}

NFPoly poly_zero(const std::shared_ptr<const NumberField>& f)
{
    return NFPoly{f, {}};
}

NFPoly poly_constant(const NFElem& c)
{
    NFPoly p{c.field, {c}};
    if (c.is_zero()) p.coeffs.clear();
    return p;
}

NFPoly poly_from_rationals(const std::shared_ptr<const NumberField>& f,
                           const std::vector<mpq_class>& coeffs)
{
    NFPoly p{f, {}};
    for (const auto& c : coeffs) p.coeffs.push_back(nf_rational(f, c));
    while (!p.coeffs.empty() && p.coeffs.back().is_zero()) p.coeffs.pop_back();
    return p;
}

NFPoly poly_linear_root(const NFElem& r)
{
    return NFPoly{r.field, {nf_neg(r), nf_one(r.field)}};
}

NFPoly poly_add(const NFPoly& a, const NFPoly& b)
{
    NFPoly c{a.field, {}};
    std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
    for (std::size_t i = 0; i < n; ++i) {
        NFElem x = i < a.coeffs.size() ? a.coeffs[i] : nf_zero(a.field);
        if (i < b.coeffs.size()) x = nf_add(x, b.coeffs[i]);
        c.coeffs.push_back(std::move(x));
    }
    while (!c.coeffs.empty() && c.coeffs.back().is_zero()) c.coeffs.pop_back();
    return c;
}

NFPoly poly_mul(const NFPoly& a, const NFPoly& b)
{
    if (a.is_zero() || b.is_zero()) return poly_zero(a.field);
    NFPoly c{a.field, std::vector<NFElem>(a.coeffs.size() + b.coeffs.size() - 1,
                                          nf_zero(a.field))};
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            c.coeffs[i + j] = nf_add(c.coeffs[i + j], nf_mul(a.coeffs[i], b.coeffs[j]));
    while (!c.coeffs.empty() && c.coeffs.back().is_zero()) c.coeffs.pop_back();
    return c;
}

NFPoly poly_scale(const NFPoly& a, const NFElem& c)
{
    if (c.is_zero()) return poly_zero(a.field);
    NFPoly r = a;
    for (auto& x : r.coeffs) x = nf_mul(x, c);
    return r;
}

NFElem poly_eval(const NFPoly& p, const NFElem& x)
{
    NFElem acc = nf_zero(x.field);
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
        acc = nf_add(nf_mul(acc, x), *it);
    return acc;
}

bool poly_equal(const NFPoly& a, const NFPoly& b)
{
    if (a.coeffs.size() != b.coeffs.size()) return false;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        if (!(a.coeffs[i] == b.coeffs[i])) return false;
    return true;
}

} // namespace brpic
