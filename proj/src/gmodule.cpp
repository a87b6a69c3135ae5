#include "brpic/gmodule.hpp"

#include "brpic/error.hpp"

namespace brpic {

void GModule::reduce(std::vector<mpz_class>& v) const
{
    for (std::size_t k = 0; k < torsion.size(); ++k) {
        mpz_class& x = v[free_rank + k];
        mpz_class d(torsion[k]);
        x %= d;
        if (x < 0) x += d;
    }
}

bool GModule::is_zero(const std::vector<mpz_class>& v) const
{
    for (int i = 0; i < free_rank; ++i)
        if (v[i] != 0) return false;
    for (std::size_t k = 0; k < torsion.size(); ++k)
        if (v[free_rank + k] % torsion[k] != 0) return false;
    return true;
}

namespace {

// rows congruent modulo the row generator's invariant factor
bool equal_mod_torsion(const GModule& m, const IntMat& a, const IntMat& b)
{
    for (std::size_t i = 0; i < a.rows(); ++i) {
        bool is_torsion_row = static_cast<int>(i) >= m.free_rank;
        mpz_class d = is_torsion_row ? mpz_class(m.torsion[i - m.free_rank]) : mpz_class(0);
        for (std::size_t j = 0; j < a.cols(); ++j) {
            mpz_class diff = a.at(i, j) - b.at(i, j);
            if (is_torsion_row ? (diff % d != 0) : (diff != 0)) return false;
        }
    }
    return true;
}

} // namespace

GModule validate_gmodule(const FiniteGroup& g, GModule m)
{
    if (m.free_rank < 0)
        throw Error("InvalidModule", "negative free rank");
    for (std::size_t k = 0; k < m.torsion.size(); ++k) {
        if (m.torsion[k] < 2)
            throw Error("InvalidModule", "invariant factor < 2");
        if (k > 0 && m.torsion[k] % m.torsion[k - 1] != 0)
            throw Error("InvalidModule", "torsion is not a divisibility chain");
    }

    const int n = m.gens();
    if (m.action.empty())
        m.action.assign(g.order, IntMat::identity(n));
    if (static_cast<int>(m.action.size()) != g.order)
        throw Error("InvalidModule", "one action matrix per group element required");
    for (const auto& a : m.action)
        if (a.rows() != static_cast<std::size_t>(n) || a.cols() != static_cast<std::size_t>(n))
            throw Error("InvalidModule", "action matrix has wrong shape");

    if (!(m.action[0] == IntMat::identity(n)) &&
        !equal_mod_torsion(m, m.action[0], IntMat::identity(n)))
        throw Error("InvalidModule", "identity must act as the identity matrix");

    // torsion generators may not leak into free ones, and their images must
    // respect the invariant factors (otherwise the action is ill-defined)
    for (int e = 0; e < g.order; ++e) {
        const IntMat& a = m.action[e];
        for (std::size_t j = 0; j < m.torsion.size(); ++j) {
            mpz_class dj(m.torsion[j]);
            for (int i = 0; i < m.free_rank; ++i)
                if (a.at(i, m.free_rank + j) != 0)
                    throw Error("InvalidModule",
                                "torsion generator maps to free part under element " +
                                    std::to_string(e));
            for (std::size_t k = 0; k < m.torsion.size(); ++k) {
                mpz_class prod = dj * a.at(m.free_rank + k, m.free_rank + j);
                if (prod % m.torsion[k] != 0)
                    throw Error("InvalidModule",
                                "action of element " + std::to_string(e) +
                                    " is ill-defined on torsion generator " + std::to_string(j));
            }
        }
    }

    for (int i = 0; i < g.order; ++i)
        for (int j = 0; j < g.order; ++j)
            if (!equal_mod_torsion(m, mul(m.action[i], m.action[j]), m.action[g.mul(i, j)]))
                throw Error("InvalidModule",
                            "action matrices do not compose at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");

    return m;
}

GModule trivial_module_Z(const FiniteGroup& g)
{
    GModule m;
    m.free_rank = 1;
    return validate_gmodule(g, std::move(m));
}

GModule trivial_module_Zn(const FiniteGroup& g, long n)
{
    GModule m;
    m.torsion = {n};
    return validate_gmodule(g, std::move(m));
}

} // namespace brpic
