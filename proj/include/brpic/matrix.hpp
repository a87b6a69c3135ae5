#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace brpic {

// Dense matrix over the integers (arbitrary precision). Row-major.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMat& other) const = default;

    bool is_zero() const;
    IntMat transposed() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row i += c * row j
    void add_row(std::size_t i, std::size_t j, const mpz_class& c);
    void add_col(std::size_t i, std::size_t j, const mpz_class& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

private:
    std::size_t rows_, cols_;
    std::vector<mpz_class> data_;
};

IntMat mul(const IntMat& a, const IntMat& b);

// Exact determinant by fraction-free (Bareiss) elimination. Square input.
mpz_class det(const IntMat& a);

// U*A*V = D with U, V unimodular and D diagonal, d1 | d2 | ..., all di >= 0.
// The inverses are tracked alongside, so callers get change-of-basis data
// without a separate inversion step.
struct SmithForm {
    IntMat u;
    IntMat d;
    IntMat v;
    IntMat u_inv;
    IntMat v_inv;
    std::size_t rank = 0; // number of nonzero diagonal entries
};

SmithForm smith_normal_form(const IntMat& a);

// Basis of the integer kernel {x : A x = 0}, as columns of the result.
IntMat kernel_basis(const IntMat& a);

// Is A x = b solvable over the integers?
bool solvable(const IntMat& a, const std::vector<mpz_class>& b);

// Concatenate the columns of a and b (same row count).
IntMat hcat(const IntMat& a, const IntMat& b);

} // namespace brpic
