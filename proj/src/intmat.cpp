#include "toric/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace toric {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("overflow", "integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error("overflow", "integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("overflow", "integer overflow in multiplication");
    return r;
}

IntMat::IntMat(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw Error("internal", "ragged matrix initializer");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::transposed() const {
    IntMat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

std::vector<Int> IntMat::row(int r) const {
    std::vector<Int> v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

std::vector<Int> IntMat::col(int c) const {
    std::vector<Int> v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

void IntMat::set_col(int c, const std::vector<Int>& v) {
    for (int r = 0; r < rows_; ++r) at(r, c) = v[static_cast<size_t>(r)];
}

std::string IntMat::to_string() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        os << (r ? "; " : "[");
        for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c);
    }
    os << "]";
    return os.str();
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.rows()) throw Error("internal", "matrix shape mismatch in multiply");
    IntMat r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            Int aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                r.at(i, j) = checked_add(r.at(i, j), checked_mul(aik, b.at(k, j)));
        }
    return r;
}

std::vector<Int> mat_vec(const IntMat& a, const std::vector<Int>& v) {
    if (a.cols() != static_cast<int>(v.size())) throw Error("internal", "matrix shape mismatch in apply");
    std::vector<Int> r(static_cast<size_t>(a.rows()), 0);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r[i] = checked_add(r[i], checked_mul(a.at(i, j), v[j]));
    return r;
}

IntMat mat_neg(const IntMat& a) {
    IntMat r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = checked_sub(0, a.at(i, j));
    return r;
}

Int det(const IntMat& a) {
    if (a.rows() != a.cols()) throw Error("internal", "determinant of non-square matrix");
    int n = a.rows();
    if (n == 0) return 1;
    IntMat m = a;
    Int prev = 1;
    Int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = checked_sub(checked_mul(m.at(i, j), m.at(k, k)),
                                      checked_mul(m.at(i, k), m.at(k, j)));
                m.at(i, j) = num / prev;  // division exact (Bareiss)
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return checked_mul(sign, m.at(n - 1, n - 1));
}

bool is_unimodular(const IntMat& a) {
    if (a.rows() != a.cols()) return false;
    Int d = det(a);
    return d == 1 || d == -1;
}

IntMat unimodular_inverse(const IntMat& a) {
    if (!is_unimodular(a)) throw Error("not-unimodular", "matrix is not invertible over the integers");
    HermiteResult h = row_hermite(a);
    // Hermite form of a unimodular matrix is the identity, so transform = a^{-1}.
    return h.transform;
}

namespace {

void swap_rows(IntMat& m, IntMat& u, int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
    for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
}

void negate_row(IntMat& m, IntMat& u, int i) {
    for (int c = 0; c < m.cols(); ++c) m.at(i, c) = checked_sub(0, m.at(i, c));
    for (int c = 0; c < u.cols(); ++c) u.at(i, c) = checked_sub(0, u.at(i, c));
}

// row i -= q * row j
void addmul_row(IntMat& m, IntMat& u, int i, int j, Int q) {
    if (q == 0) return;
    for (int c = 0; c < m.cols(); ++c) m.at(i, c) = checked_sub(m.at(i, c), checked_mul(q, m.at(j, c)));
    for (int c = 0; c < u.cols(); ++c) u.at(i, c) = checked_sub(u.at(i, c), checked_mul(q, u.at(j, c)));
}

Int floor_div(Int a, Int b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

HermiteResult row_hermite(const IntMat& a) {
    IntMat h = a;
    IntMat u = IntMat::identity(a.rows());
    int r = 0;
    for (int c = 0; c < h.cols() && r < h.rows(); ++c) {
        // Euclidean reduction: shrink entries in column c, rows >= r, until one remains.
        for (;;) {
            int p = -1;
            for (int i = r; i < h.rows(); ++i) {
                if (h.at(i, c) == 0) continue;
                if (p < 0 || std::llabs(h.at(i, c)) < std::llabs(h.at(p, c))) p = i;
            }
            if (p < 0) break;
            swap_rows(h, u, r, p);
            bool done = true;
            for (int i = r + 1; i < h.rows(); ++i) {
                if (h.at(i, c) == 0) continue;
                Int q = h.at(i, c) / h.at(r, c);
                addmul_row(h, u, i, r, q);
                if (h.at(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (h.at(r, c) == 0) continue;
        if (h.at(r, c) < 0) negate_row(h, u, r);
        for (int i = 0; i < r; ++i) addmul_row(h, u, i, r, floor_div(h.at(i, c), h.at(r, c)));
        ++r;
    }
    return HermiteResult{std::move(h), std::move(u), r};
}

IntMat kernel_rows(const IntMat& a) {
    // Rows x of the transform with x * a^T = 0 satisfy a * x^T = 0.
    HermiteResult h = row_hermite(a.transposed());
    int m = a.cols();
    IntMat k(m - h.rank, m);
    for (int i = h.rank; i < m; ++i)
        for (int c = 0; c < m; ++c) k.at(i - h.rank, c) = h.transform.at(i, c);
    return k;
}

std::vector<Int> smith_invariant_factors(const IntMat& a) {
    IntMat m = a;
    int rows = m.rows(), cols = m.cols();
    std::vector<Int> factors;
    int t = 0;
    while (t < rows && t < cols) {
        // Find the smallest nonzero entry in the remaining block.
        int pr = -1, pc = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (m.at(i, j) != 0 &&
                    (pr < 0 || std::llabs(m.at(i, j)) < std::llabs(m.at(pr, pc)))) {
                    pr = i;
                    pc = j;
                }
        if (pr < 0) break;
        for (int j = 0; j < cols; ++j) std::swap(m.at(t, j), m.at(pr, j));
        for (int i = 0; i < rows; ++i) std::swap(m.at(i, t), m.at(i, pc));
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (m.at(i, t) == 0) continue;
                Int q = m.at(i, t) / m.at(t, t);
                for (int j = t; j < cols; ++j)
                    m.at(i, j) = checked_sub(m.at(i, j), checked_mul(q, m.at(t, j)));
                if (m.at(i, t) != 0) {
                    for (int j = t; j < cols; ++j) std::swap(m.at(t, j), m.at(i, j));
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (m.at(t, j) == 0) continue;
                Int q = m.at(t, j) / m.at(t, t);
                for (int i = t; i < rows; ++i)
                    m.at(i, j) = checked_sub(m.at(i, j), checked_mul(q, m.at(i, t)));
                if (m.at(t, j) != 0) {
                    for (int i = t; i < rows; ++i) std::swap(m.at(i, t), m.at(i, j));
                    clean = false;
                }
            }
        }
        // Divisibility sweep: pivot must divide every remaining entry.
        bool restart = false;
        for (int i = t + 1; i < rows && !restart; ++i)
            for (int j = t + 1; j < cols && !restart; ++j)
                if (m.at(i, j) % m.at(t, t) != 0) {
                    for (int jj = t; jj < cols; ++jj)
                        m.at(t, jj) = checked_add(m.at(t, jj), m.at(i, jj));
                    restart = true;
                }
        if (restart) continue;
        if (m.at(t, t) < 0)
            for (int j = t; j < cols; ++j) m.at(t, j) = checked_sub(0, m.at(t, j));
        factors.push_back(m.at(t, t));
        ++t;
    }
    return factors;
}

IntMat lattice_hnf(const IntMat& rows) {
    HermiteResult h = row_hermite(rows);
    IntMat basis(h.rank, rows.cols());
    for (int i = 0; i < h.rank; ++i)
        for (int c = 0; c < rows.cols(); ++c) basis.at(i, c) = h.hnf.at(i, c);
    return basis;
}

bool lattice_equal(const IntMat& rows_a, const IntMat& rows_b) {
    if (rows_a.cols() != rows_b.cols()) return false;
    return lattice_hnf(rows_a) == lattice_hnf(rows_b);
}

bool lattice_contains(const IntMat& rows, const std::vector<Int>& v) {
    IntMat stacked(rows.rows() + 1, rows.cols());
    for (int i = 0; i < rows.rows(); ++i)
        for (int c = 0; c < rows.cols(); ++c) stacked.at(i, c) = rows.at(i, c);
    for (int c = 0; c < rows.cols(); ++c) stacked.at(rows.rows(), c) = v[static_cast<size_t>(c)];
    return lattice_equal(rows, stacked);
}

IntMat unit_column_transform(const IntMat& b) {
    int n = b.rows(), k = b.cols();
    HermiteResult h = row_hermite(b);
    if (h.rank != k) throw Error("quotient-not-free", "columns are not linearly independent");
    IntMat top(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) top.at(i, j) = h.hnf.at(i, j);
    Int d = det(top);
    if (d != 1 && d != -1)
        throw Error("quotient-not-free", "column span is a finite-index sublattice, not a direct summand");
    IntMat top_inv = unimodular_inverse(top);
    IntMat block = IntMat::identity(n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) block.at(i, j) = top_inv.at(i, j);
    return mat_mul(block, h.transform);
}

}  // namespace toric
