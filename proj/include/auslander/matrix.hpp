#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "auslander/field.hpp"

namespace ausl {

/// Dense matrix over a prime field, row-major. 0xN and Nx0 matrices are
/// legal and stand in for zero maps to/from the zero space; every operation
/// below must keep working when a dimension is zero.
class Mat {
public:
    Mat(PrimeField f, std::uint32_t rows, std::uint32_t cols)
        : f_(f), rows_(rows), cols_(cols), e_(std::size_t(rows) * cols, 0) {}

    Mat(PrimeField f, std::uint32_t rows, std::uint32_t cols,
        std::initializer_list<std::int64_t> vals)
        : Mat(f, rows, cols) {
        if (vals.size() != e_.size())
            throw contract_error("matrix literal has wrong number of entries");
        std::size_t i = 0;
        for (auto v : vals) e_[i++] = f_.from_int(v);
    }

    static Mat identity(PrimeField f, std::uint32_t n) {
        Mat m(f, n, n);
        for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    const PrimeField& field() const { return f_; }
    std::uint32_t rows() const { return rows_; }
    std::uint32_t cols() const { return cols_; }

    std::uint32_t& at(std::uint32_t r, std::uint32_t c) { return e_[std::size_t(r) * cols_ + c]; }
    std::uint32_t at(std::uint32_t r, std::uint32_t c) const { return e_[std::size_t(r) * cols_ + c]; }

    const std::vector<std::uint32_t>& entries() const { return e_; }

    bool is_zero() const {
        for (auto v : e_)
            if (v) return false;
        return true;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_ && f_ == o.f_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        check_same_shape(o, "add");
        Mat r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_.add(e_[i], o.e_[i]);
        return r;
    }
    Mat operator-(const Mat& o) const {
        check_same_shape(o, "subtract");
        Mat r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_.sub(e_[i], o.e_[i]);
        return r;
    }
    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_ || f_ != o.f_)
            throw contract_error("matrix product shape mismatch");
        Mat r(f_, rows_, o.cols_);
        for (std::uint32_t i = 0; i < rows_; ++i)
            for (std::uint32_t k = 0; k < cols_; ++k) {
                std::uint32_t aik = at(i, k);
                if (!aik) continue;
                for (std::uint32_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = f_.add(r.at(i, j), f_.mul(aik, o.at(k, j)));
            }
        return r;
    }

    Mat scaled(std::uint32_t c) const {
        Mat r = *this;
        for (auto& v : r.e_) v = f_.mul(v, c);
        return r;
    }

    Mat negated() const {
        Mat r = *this;
        for (auto& v : r.e_) v = f_.neg(v);
        return r;
    }

    Mat transposed() const {
        Mat r(f_, cols_, rows_);
        for (std::uint32_t i = 0; i < rows_; ++i)
            for (std::uint32_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    /// Columns [c0, c1) as a new matrix.
    Mat col_slice(std::uint32_t c0, std::uint32_t c1) const {
        Mat r(f_, rows_, c1 - c0);
        for (std::uint32_t i = 0; i < rows_; ++i)
            for (std::uint32_t j = c0; j < c1; ++j) r.at(i, j - c0) = at(i, j);
        return r;
    }

    Mat row_slice(std::uint32_t r0, std::uint32_t r1) const {
        Mat r(f_, r1 - r0, cols_);
        for (std::uint32_t i = r0; i < r1; ++i)
            for (std::uint32_t j = 0; j < cols_; ++j) r.at(i - r0, j) = at(i, j);
        return r;
    }

    /// [this | o] side by side.
    Mat hstack(const Mat& o) const {
        if (rows_ != o.rows_ || f_ != o.f_) throw contract_error("hstack shape mismatch");
        Mat r(f_, rows_, cols_ + o.cols_);
        for (std::uint32_t i = 0; i < rows_; ++i) {
            for (std::uint32_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (std::uint32_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
        }
        return r;
    }

    /// [this; o] stacked vertically.
    Mat vstack(const Mat& o) const {
        if (cols_ != o.cols_ || f_ != o.f_) throw contract_error("vstack shape mismatch");
        Mat r(f_, rows_ + o.rows_, cols_);
        for (std::uint32_t i = 0; i < rows_; ++i)
            for (std::uint32_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::uint32_t i = 0; i < o.rows_; ++i)
            for (std::uint32_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
        return r;
    }

    /// Write `block` into this matrix with top-left corner at (r0, c0).
    void set_block(std::uint32_t r0, std::uint32_t c0, const Mat& block) {
        if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
            throw contract_error("set_block out of range");
        for (std::uint32_t i = 0; i < block.rows_; ++i)
            for (std::uint32_t j = 0; j < block.cols_; ++j)
                at(r0 + i, c0 + j) = block.at(i, j);
    }

    Mat block(std::uint32_t r0, std::uint32_t c0, std::uint32_t nr, std::uint32_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw contract_error("block out of range");
        Mat r(f_, nr, nc);
        for (std::uint32_t i = 0; i < nr; ++i)
            for (std::uint32_t j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
        return r;
    }

private:
    void check_same_shape(const Mat& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || f_ != o.f_)
            throw contract_error(std::string("matrix ") + op + " shape mismatch");
    }

    PrimeField f_;
    std::uint32_t rows_, cols_;
    std::vector<std::uint32_t> e_;
};

struct RrefResult {
    Mat reduced;
    std::uint32_t rank;
    std::vector<std::uint32_t> pivots; // column index of each pivot row
};

/// Reduced row echelon form with deterministic pivoting: within each column,
/// the first row with a nonzero entry (scanning top to bottom) is chosen.
inline RrefResult rref(const Mat& m) {
    Mat a = m;
    const PrimeField& f = a.field();
    std::vector<std::uint32_t> pivots;
    std::uint32_t r = 0;
    for (std::uint32_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::uint32_t sel = a.rows();
        for (std::uint32_t i = r; i < a.rows(); ++i)
            if (a.at(i, c)) {
                sel = i;
                break;
            }
        if (sel == a.rows()) continue;
        if (sel != r)
            for (std::uint32_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(r, j));
        std::uint32_t piv_inv = f.inv(a.at(r, c));
        for (std::uint32_t j = c; j < a.cols(); ++j) a.at(r, j) = f.mul(a.at(r, j), piv_inv);
        for (std::uint32_t i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            std::uint32_t factor = a.at(i, c);
            if (!factor) continue;
            for (std::uint32_t j = c; j < a.cols(); ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult{std::move(a), r, std::move(pivots)};
}

inline std::uint32_t rank(const Mat& m) { return rref(m).rank; }

/// Columns form a basis of ker(m); column count = cols - rank.
inline Mat kernel_basis(const Mat& m) {
    RrefResult rr = rref(m);
    const PrimeField& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : rr.pivots) is_pivot[c] = true;
    std::vector<std::uint32_t> free_cols;
    for (std::uint32_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat k(f, m.cols(), static_cast<std::uint32_t>(free_cols.size()));
    for (std::uint32_t j = 0; j < free_cols.size(); ++j) {
        std::uint32_t fc = free_cols[j];
        k.at(fc, j) = 1;
        for (std::uint32_t i = 0; i < rr.rank; ++i)
            k.at(rr.pivots[i], j) = f.neg(rr.reduced.at(i, fc));
    }
    return k;
}

struct SolveResult {
    Mat particular;      // A * particular = b
    Mat nullspace_basis; // columns span ker(A)
};

/// Solve A x = b for a (possibly multi-column) right-hand side. Returns
/// nullopt when the system is inconsistent.
inline std::optional<SolveResult> solve(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.field() != b.field())
        throw contract_error("solve: dimension mismatch between matrix and right-hand side");
    const PrimeField& f = a.field();
    Mat aug = a.hstack(b);
    RrefResult rr = rref(aug);
    // Any pivot in the b-part of the augmented matrix marks inconsistency.
    for (auto c : rr.pivots)
        if (c >= a.cols()) return std::nullopt;
    Mat x(f, a.cols(), b.cols());
    for (std::uint32_t i = 0; i < rr.pivots.size(); ++i)
        for (std::uint32_t j = 0; j < b.cols(); ++j)
            x.at(rr.pivots[i], j) = rr.reduced.at(i, a.cols() + j);
    return SolveResult{std::move(x), kernel_basis(a)};
}

/// True when m is square and invertible.
inline bool is_invertible(const Mat& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

/// Inverse of a square invertible matrix.
inline Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw contract_error("inverse: matrix not square");
    auto s = solve(m, Mat::identity(m.field(), m.rows()));
    if (!s || s->nullspace_basis.cols() != 0)
        throw contract_error("inverse: matrix not invertible");
    return s->particular;
}

/// A basis of the column space, as columns (the pivot columns of m).
inline Mat column_space_basis(const Mat& m) {
    RrefResult rr = rref(m);
    Mat b(m.field(), m.rows(), rr.rank);
    for (std::uint32_t j = 0; j < rr.rank; ++j)
        for (std::uint32_t i = 0; i < m.rows(); ++i) b.at(i, j) = m.at(i, rr.pivots[j]);
    return b;
}

} // namespace ausl
