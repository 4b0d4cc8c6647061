#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "toric/error.hpp"

namespace toric {

using Int = long long;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Dense row-major integer matrix. All arithmetic is exact; operations that
/// could overflow 64 bits throw Error("overflow") instead of wrapping.
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
    IntMat(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    Int at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    IntMat transposed() const;
    std::vector<Int> row(int r) const;
    std::vector<Int> col(int c) const;
    void set_col(int c, const std::vector<Int>& v);

    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const IntMat& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

IntMat mat_mul(const IntMat& a, const IntMat& b);
std::vector<Int> mat_vec(const IntMat& a, const std::vector<Int>& v);
IntMat mat_neg(const IntMat& a);

/// Exact determinant of a square matrix (fraction-free elimination).
Int det(const IntMat& a);

bool is_unimodular(const IntMat& a);

/// Inverse of a unimodular matrix; integer by construction.
/// Throws Error("not-unimodular") otherwise.
IntMat unimodular_inverse(const IntMat& a);

/// Row-style Hermite normal form. transform * a == hnf with transform
/// unimodular; pivots positive, entries above each pivot reduced into
/// [0, pivot). Zero rows are gathered at the bottom, so the nonzero rows are a
/// canonical basis of the row lattice.
struct HermiteResult {
    IntMat hnf;
    IntMat transform;
    int rank = 0;
};
HermiteResult row_hermite(const IntMat& a);

/// Basis of the integer kernel {x : a·x = 0} as rows of the returned matrix.
/// The basis spans the full (saturated) kernel lattice.
IntMat kernel_rows(const IntMat& a);

/// Invariant factors d_1 | d_2 | ... of the Smith normal form (nonnegative,
/// zeros trimmed).
std::vector<Int> smith_invariant_factors(const IntMat& a);

/// Canonical basis of the lattice spanned by the rows: the nonzero rows of the
/// Hermite form.
IntMat lattice_hnf(const IntMat& rows);
bool lattice_equal(const IntMat& rows_a, const IntMat& rows_b);
bool lattice_contains(const IntMat& rows, const std::vector<Int>& v);

/// For a full-column-rank n×k matrix b whose column span is a direct summand
/// of Z^n, returns unimodular p with p*b = [I_k; 0]. The last n-k rows of p
/// are then coordinates on the quotient lattice Z^n / colspan(b).
/// Throws Error("quotient-not-free") when the span is not a direct summand.
IntMat unit_column_transform(const IntMat& b);

}  // namespace toric
