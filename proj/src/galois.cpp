#include "brpic/galois.hpp"

#include "brpic/error.hpp"

#include <algorithm>
#include <set>

namespace brpic {

namespace {

// Solve V c = y over Q by Gaussian elimination; returns false when
// inconsistent. V given column-major.
bool rational_solve(std::vector<std::vector<mpq_class>> cols, std::vector<mpq_class> y)
{
    const std::size_t rows = y.size();
    const std::size_t ncols = cols.size();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < ncols && lead < rows; ++c) {
        std::size_t piv = lead;
        while (piv < rows && cols[c][piv] == 0) ++piv;
        if (piv == rows) continue;
        for (std::size_t cc = 0; cc < ncols; ++cc) std::swap(cols[cc][piv], cols[cc][lead]);
        std::swap(y[piv], y[lead]);
        mpq_class inv = 1 / cols[c][lead];
        for (std::size_t cc = 0; cc < ncols; ++cc) cols[cc][lead] *= inv;
        y[lead] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || cols[c][r] == 0) continue;
            mpq_class factor = cols[c][r];
            for (std::size_t cc = 0; cc < ncols; ++cc) cols[cc][r] -= factor * cols[cc][lead];
            y[r] -= factor * y[lead];
        }
        ++lead;
    }
    // consistent iff the residual of y outside the pivot rows vanishes
    for (std::size_t r = lead; r < rows; ++r)
        if (y[r] != 0) return false;
    return true;
}

// Is c an element of Q(theta) = span_Q{1, theta, ..., theta^{n-1}}?
bool lies_in_q_theta(const NFElem& c, const NFElem& theta, int n)
{
    std::vector<std::vector<mpq_class>> cols;
    NFElem power = nf_one(theta.field);
    for (int k = 0; k < n; ++k) {
        cols.push_back(power.coeffs);
        power = nf_mul(power, theta);
    }
    return rational_solve(std::move(cols), c.coeffs);
}

} // namespace

GaloisScenario validate_scenario(GaloisScenario s)
{
    // the group is revalidated so hand-built tables go through the axioms
    s.gamma = validate_group(s.gamma.table, s.gamma.labels);
    validate_action(s.gamma, s.root_action);
    if (s.root_action.set_size < 1)
        throw Error("InvalidScenario", "need at least one root");
    if (!is_transitive(s.gamma, s.root_action))
        throw Error("InvalidScenario",
                    "Gamma must act transitively on the roots (f indecomposable over K)");
    if (s.theta_index < 0 || s.theta_index >= s.root_action.set_size)
        throw Error("ElementOutOfRange", "theta index");

    if (s.concrete) {
        const ConcreteLayer& c = *s.concrete;
        if (!c.field)
            throw Error("InvalidScenario", "concrete layer without a field");
        if (c.field->degree() != s.gamma.order)
            throw Error("InvalidScenario",
                        "splitting field degree != |Gamma| (" +
                            std::to_string(c.field->degree()) + " vs " +
                            std::to_string(s.gamma.order) + ")");
        const int n = s.root_action.set_size;
        if (static_cast<int>(c.roots.size()) != n)
            throw Error("InvalidScenario", "root value count != root count");
        if (static_cast<int>(c.f.size()) != n + 1 || c.f.back() != 1)
            throw Error("InvalidScenario", "f must be monic of degree = root count");
        for (int i = 0; i < n; ++i)
            for (int k = i + 1; k < n; ++k)
                if (c.roots[i] == c.roots[k])
                    throw Error("RepeatedRoot", "theta_" + std::to_string(i + 1) +
                                                    " = theta_" + std::to_string(k + 1));
        NFPoly f = poly_from_rationals(c.field, c.f);
        for (int i = 0; i < n; ++i)
            if (!poly_eval(f, c.roots[i]).is_zero())
                throw Error("InvalidScenario",
                            "f(theta_" + std::to_string(i + 1) + ") != 0");
    }
    return s;
}

Subgroup derive_stabilizer(const GaloisScenario& s)
{
    return stabilizer(s.gamma, s.root_action, s.theta_index);
}

std::vector<int> factor_orbit_map(const GaloisScenario& s)
{
    Subgroup g = derive_stabilizer(s);
    auto parts = orbits(s.gamma, s.root_action, g);
    std::vector<int> j(s.root_count(), -1);
    for (std::size_t label = 0; label < parts.size(); ++label)
        for (int root : parts[label]) j[root] = static_cast<int>(label);
    return j;
}

std::vector<NFPoly> lagrange_idempotents(const GaloisScenario& s)
{
    if (!s.concrete)
        throw Error("MissingConcreteLayer", "lagrange_idempotents needs root values");
    const ConcreteLayer& c = *s.concrete;
    const int n = static_cast<int>(c.roots.size());
    auto field = c.field;

    std::vector<NFPoly> p;
    for (int i = 0; i < n; ++i) {
        NFPoly num = poly_constant(nf_one(field));
        NFElem denom = nf_one(field);
        for (int k = 0; k < n; ++k) {
            if (k == i) continue;
            num = poly_mul(num, poly_linear_root(c.roots[k]));
            NFElem diff = nf_sub(c.roots[i], c.roots[k]);
            if (diff.is_zero())
                throw Error("RepeatedRoot", "theta_" + std::to_string(i + 1) + " = theta_" +
                                                std::to_string(k + 1));
            denom = nf_mul(denom, diff);
        }
        p.push_back(poly_scale(num, nf_inv(denom)));
    }

    // verified postconditions: p_i(theta_k) = delta_{ik}, sum p_i = 1
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            NFElem v = poly_eval(p[i], c.roots[k]);
            NFElem expect = i == k ? nf_one(field) : nf_zero(field);
            if (!(v == expect))
                throw Error("Internal", "p_i(theta_k) != delta");
        }
    NFPoly sum = poly_zero(field);
    for (const auto& pi : p) sum = poly_add(sum, pi);
    if (!poly_equal(sum, poly_constant(nf_one(field))))
        throw Error("Internal", "sum of idempotents != 1");
    return p;
}

std::vector<NFPoly> grouped_idempotents(const GaloisScenario& s)
{
    std::vector<NFPoly> p = lagrange_idempotents(s);
    const ConcreteLayer& c = *s.concrete;
    auto field = c.field;
    std::vector<int> j = factor_orbit_map(s);
    const int m = *std::max_element(j.begin(), j.end()) + 1;
    const int n = static_cast<int>(p.size());

    std::vector<NFPoly> big(m, poly_zero(field));
    for (int i = 0; i < n; ++i) big[j[i]] = poly_add(big[j[i]], p[i]);

    // P_j(theta_k) = delta_{j, J(k)}
    for (int jj = 0; jj < m; ++jj)
        for (int k = 0; k < n; ++k) {
            NFElem v = poly_eval(big[jj], c.roots[k]);
            NFElem expect = j[k] == jj ? nf_one(field) : nf_zero(field);
            if (!(v == expect))
                throw Error("Internal", "P_j(theta_k) != delta_{j,J(k)}");
        }
    NFPoly sum = poly_zero(field);
    for (const auto& pj : big) sum = poly_add(sum, pj);
    if (!poly_equal(sum, poly_constant(nf_one(field))))
        throw Error("Internal", "sum of grouped idempotents != 1");

    // G-fixedness: Fix(G) = L = Q(theta), so each coefficient must lie in
    // the span of 1, theta, ..., theta^{n-1}
    const NFElem& theta = c.roots[s.theta_index];
    for (int jj = 0; jj < m; ++jj)
        for (std::size_t t = 0; t < big[jj].coeffs.size(); ++t)
            if (!lies_in_q_theta(big[jj].coeffs[t], theta, n))
                throw Error("CoefficientNotFixed",
                            "coefficient " + std::to_string(t) + " of P_" +
                                std::to_string(jj + 1) + " is not fixed by G");
    return big;
}

std::vector<int> tensor_unit_decomposition(const GaloisScenario& s)
{
    Subgroup g = derive_stabilizer(s);
    auto parts = orbits(s.gamma, s.root_action, g);
    std::vector<int> degrees;
    degrees.reserve(parts.size());
    for (const auto& part : parts) degrees.push_back(static_cast<int>(part.size()));
    return degrees;
}

FaithfulnessReport faithfulness_check(const GaloisScenario& s, const EmbeddingData& e)
{
    if (e.rho.empty())
        throw Error("EmptyInput", "need at least one embedding representative");
    Subgroup g = derive_stabilizer(s);
    auto unit = e.rho.find("1");
    if (unit != e.rho.end() && !g.contains(unit->second))
        throw Error("InvalidEmbedding", "the unit must embed into G = Stab(theta)");
    std::vector<int> reps;
    for (const auto& [label, rho] : e.rho) {
        if (rho < 0 || rho >= s.gamma.order)
            throw Error("ElementOutOfRange", "rho for object " + label);
        reps.push_back(rho);
    }
    DoubleCosetUnion u = double_coset_union_closure(s.gamma, g, reps);
    if (!u.closed)
        throw Error("ClosureFailure",
                    "H is not closed: elements " + std::to_string(u.witness.first) + " and " +
                        std::to_string(u.witness.second) +
                        " multiply outside H; the embedding data cannot come from a rigid "
                        "monoidal category");

    FaithfulnessReport r;
    r.h_elements = u.elements;
    r.h_is_group = true;
    r.faithful = static_cast<int>(u.elements.size()) == s.gamma.order;
    r.fixed_field_index = s.gamma.order / static_cast<int>(u.elements.size());
    return r;
}

bool polynomial_faithfulness_criterion(const GaloisScenario& s, const EmbeddingData& e)
{
    if (!s.concrete)
        throw Error("MissingConcreteLayer", "polynomial criterion needs root values");
    const ConcreteLayer& c = *s.concrete;
    std::vector<NFPoly> big = grouped_idempotents(s);
    std::vector<int> j = factor_orbit_map(s);
    const int m = static_cast<int>(big.size());

    std::vector<bool> hit(m, false);
    for (const auto& [label, rho] : e.rho) {
        int image_root = s.root_action.apply(rho, s.theta_index);
        for (int jj = 0; jj < m; ++jj) {
            NFElem v = poly_eval(big[jj], c.roots[image_root]);
            if (v == nf_one(c.field)) hit[jj] = true;
        }
    }
    // the unit (rho in G) covers the factor of theta even when omitted
    hit[j[s.theta_index]] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

} // namespace brpic
