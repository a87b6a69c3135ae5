#include "brpic/matrix.hpp"

#include "brpic/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace brpic {

IntMat IntMat::identity(std::size_t n)
{
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

bool IntMat::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(),
                       [](const mpz_class& x) { return x == 0; });
}

IntMat IntMat::transposed() const
{
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

void IntMat::swap_rows(std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k)
        std::swap(at(i, k), at(j, k));
}

void IntMat::swap_cols(std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k)
        std::swap(at(k, i), at(k, j));
}

void IntMat::add_row(std::size_t i, std::size_t j, const mpz_class& c)
{
    for (std::size_t k = 0; k < cols_; ++k)
        at(i, k) += c * at(j, k);
}

void IntMat::add_col(std::size_t i, std::size_t j, const mpz_class& c)
{
    for (std::size_t k = 0; k < rows_; ++k)
        at(k, i) += c * at(k, j);
}

void IntMat::negate_row(std::size_t i)
{
    for (std::size_t k = 0; k < cols_; ++k)
        at(i, k) = -at(i, k);
}

void IntMat::negate_col(std::size_t i)
{
    for (std::size_t k = 0; k < rows_; ++k)
        at(k, i) = -at(k, i);
}

IntMat mul(const IntMat& a, const IntMat& b)
{
    if (a.cols() != b.rows())
        throw Error("DimensionMismatch", "matrix product shape mismatch");
    IntMat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const mpz_class& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const mpz_class& bkj = b.at(k, j);
                if (bkj != 0)
                    c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

mpz_class det(const IntMat& a)
{
    if (a.rows() != a.cols())
        throw Error("DimensionMismatch", "determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;

    IntMat m = a;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                // Bareiss: division by the previous pivot is exact
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : mpz_class(-m.at(n - 1, n - 1));
}

namespace {

// Position of the smallest nonzero |entry| in the trailing block of D
// starting at (s,s); false if the block is zero.
bool locate_pivot(const IntMat& d, std::size_t s, std::size_t& pi, std::size_t& pj)
{
    bool found = false;
    mpz_class best;
    for (std::size_t i = s; i < d.rows(); ++i)
        for (std::size_t j = s; j < d.cols(); ++j) {
            if (d.at(i, j) == 0) continue;
            mpz_class a = abs(d.at(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

bool row_col_clear(const IntMat& d, std::size_t s)
{
    for (std::size_t i = s + 1; i < d.rows(); ++i)
        if (d.at(i, s) != 0) return false;
    for (std::size_t j = s + 1; j < d.cols(); ++j)
        if (d.at(s, j) != 0) return false;
    return true;
}

} // namespace

SmithForm smith_normal_form(const IntMat& a)
{
    SmithForm f;
    f.u = IntMat::identity(a.rows());
    f.v = IntMat::identity(a.cols());
    f.u_inv = IntMat::identity(a.rows());
    f.v_inv = IntMat::identity(a.cols());
    f.d = a;
    IntMat& d = f.d;

    auto row_swap = [&](std::size_t i, std::size_t j) {
        d.swap_rows(i, j);
        f.u.swap_rows(i, j);
        f.u_inv.swap_cols(i, j);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        d.swap_cols(i, j);
        f.v.swap_cols(i, j);
        f.v_inv.swap_rows(i, j);
    };
    auto row_add = [&](std::size_t i, std::size_t j, const mpz_class& c) {
        d.add_row(i, j, c);
        f.u.add_row(i, j, c);
        f.u_inv.add_col(j, i, -c);
    };
    auto col_add = [&](std::size_t i, std::size_t j, const mpz_class& c) {
        d.add_col(i, j, c);
        f.v.add_col(i, j, c);
        f.v_inv.add_row(j, i, -c);
    };
    auto row_neg = [&](std::size_t i) {
        d.negate_row(i);
        f.u.negate_row(i);
        f.u_inv.negate_col(i);
    };

    const std::size_t nmin = std::min(a.rows(), a.cols());
    for (std::size_t s = 0; s < nmin; ++s) {
        std::size_t pi, pj;
        if (!locate_pivot(d, s, pi, pj))
            break; // trailing block is all zero
        row_swap(s, pi);
        col_swap(s, pj);

        while (!row_col_clear(d, s)) {
            for (std::size_t i = s + 1; i < d.rows(); ++i) {
                if (d.at(i, s) == 0) continue;
                mpz_class q = d.at(i, s) / d.at(s, s); // truncated division
                if (q != 0) row_add(i, s, -q);
            }
            for (std::size_t j = s + 1; j < d.cols(); ++j) {
                if (d.at(s, j) == 0) continue;
                mpz_class q = d.at(s, j) / d.at(s, s);
                if (q != 0) col_add(j, s, -q);
            }
            // Residues smaller than the pivot may remain; move the smallest
            // nonzero entry back into the pivot slot and repeat.
            if (!row_col_clear(d, s)) {
                locate_pivot(d, s, pi, pj);
                row_swap(s, pi);
                col_swap(s, pj);
            }
        }
    }

    // Positive diagonal
    for (std::size_t s = 0; s < nmin; ++s)
        if (d.at(s, s) < 0) row_neg(s);

    // Enforce the divisibility chain d1 | d2 | ... by rediagonalizing 2x2
    // blocks diag(di, dj) into diag(gcd, lcm). Repeat passes to a fixpoint.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < nmin; ++i) {
            for (std::size_t j = i + 1; j < nmin; ++j) {
                if (d.at(i, i) == 0 && d.at(j, j) != 0) {
                    // zero diagonal entries sink to the end
                    row_swap(i, j);
                    col_swap(i, j);
                    changed = true;
                    continue;
                }
                if (d.at(i, i) == 0 || d.at(j, j) == 0) continue;
                if (d.at(j, j) % d.at(i, i) == 0) continue;

                // block becomes [[di, 0], [dj, dj]]; Euclid on the first column
                col_add(i, j, 1);
                while (d.at(j, i) != 0) {
                    mpz_class q = d.at(i, i) / d.at(j, i);
                    if (q != 0) row_add(i, j, -q);
                    row_swap(i, j);
                }
                // the gcd divides every entry of the block, so this is exact
                if (d.at(i, j) != 0) {
                    mpz_class q = d.at(i, j) / d.at(i, i);
                    col_add(j, i, -q);
                }
                if (d.at(i, i) < 0) row_neg(i);
                if (d.at(j, j) < 0) row_neg(j);
                changed = true;
            }
        }
    }

    for (std::size_t s = 0; s < nmin; ++s)
        if (d.at(s, s) != 0) ++f.rank;
    return f;
}

bool solvable(const IntMat& a, const std::vector<mpz_class>& b)
{
    if (b.size() != a.rows())
        throw Error("DimensionMismatch", "rhs length != row count");
    SmithForm f = smith_normal_form(a);
    // A x = b  <=>  D y = U b with y = V^{-1} x
    std::vector<mpz_class> ub(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j)
            if (f.u.at(i, j) != 0) ub[i] += f.u.at(i, j) * b[j];
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < f.rank) {
            if (ub[i] % f.d.at(i, i) != 0) return false;
        } else if (ub[i] != 0) {
            return false;
        }
    }
    return true;
}

IntMat kernel_basis(const IntMat& a)
{
    if (a.rows() == 0) {
        // every vector is in the kernel
        return IntMat::identity(a.cols());
    }
    SmithForm f = smith_normal_form(a);
    // A * v_j = U^{-1} D e_j, so columns of V past the rank span ker A.
    std::size_t null_dim = a.cols() - f.rank;
    IntMat k(a.cols(), null_dim);
    for (std::size_t j = 0; j < null_dim; ++j)
        for (std::size_t i = 0; i < a.cols(); ++i)
            k.at(i, j) = f.v.at(i, f.rank + j);
    return k;
}

IntMat hcat(const IntMat& a, const IntMat& b)
{
    if (a.rows() != b.rows())
        throw Error("DimensionMismatch", "hcat row mismatch");
    IntMat c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            c.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            c.at(i, a.cols() + j) = b.at(i, j);
    }
    return c;
}

} // namespace brpic
