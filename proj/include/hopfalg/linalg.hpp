#ifndef HOPFALG_LINALG_HPP
#define HOPFALG_LINALG_HPP

#include <optional>
#include <vector>

#include "hopfalg/scalar.hpp"

namespace hopfalg {

using Vec = std::vector<Scalar>;

/// Dense matrix over K with exact Gaussian elimination.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t r, size_t c) : rows_(r), cols_(c), data_(r * c) {}

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw Error("DimensionMismatch", "matrix product");
        Mat r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    const Scalar& bkj = b(k, j);
                    if (!bkj.is_zero()) r(i, j) += aik * bkj;
                }
            }
        return r;
    }
    friend Mat operator+(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw Error("DimensionMismatch", "matrix sum");
        Mat r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw Error("DimensionMismatch", "matrix difference");
        Mat r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
        return r;
    }
    friend Mat operator*(const Scalar& s, const Mat& a) {
        Mat r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = s * a.data_[i];
        return r;
    }
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_zero() const {
        for (const auto& s : data_)
            if (!s.is_zero()) return false;
        return true;
    }

    Vec apply(const Vec& v) const {
        if (v.size() != cols_) throw Error("DimensionMismatch", "matrix apply");
        Vec r(rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    static Mat kronecker(const Mat& a, const Mat& b) {
        Mat r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t j = 0; j < a.cols_; ++j) {
                if (a(i, j).is_zero()) continue;
                for (size_t k = 0; k < b.rows_; ++k)
                    for (size_t l = 0; l < b.cols_; ++l)
                        if (!b(k, l).is_zero())
                            r(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
            }
        return r;
    }

    Mat pow(size_t k) const {
        Mat acc = identity(rows_), base = *this;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

private:
    size_t rows_, cols_;
    std::vector<Scalar> data_;
};

/// Row echelon form in place; returns pivot columns.  Pivot selection
/// prefers the smallest entry (by digit count) in the column block to
/// limit coefficient growth.
inline std::vector<size_t> row_reduce(Mat& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t best = m.rows();
        size_t best_size = SIZE_MAX;
        for (size_t i = row; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) continue;
            size_t sz = m(i, col).magnitude();
            if (sz < best_size) { best_size = sz; best = i; }
        }
        if (best == m.rows()) continue;
        if (best != row)
            for (size_t j = col; j < m.cols(); ++j) std::swap(m(row, j), m(best, j));
        Scalar inv = m(row, col).inverse();
        for (size_t j = col; j < m.cols(); ++j)
            if (!m(row, j).is_zero()) m(row, j) = inv * m(row, j);
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Scalar f = m(i, col);
            for (size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline size_t rank(Mat m) { return row_reduce(m).size(); }

/// Basis of the right kernel {v : M v = 0}.
inline std::vector<Vec> kernel_basis(Mat m) {
    size_t n = m.cols();
    std::vector<size_t> pivots = row_reduce(m);
    std::vector<bool> is_pivot(n, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec v(n);
        v[free] = Scalar(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One solution of M x = b, if any.
inline std::optional<Vec> solve(const Mat& m, const Vec& b) {
    Mat aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    std::vector<size_t> pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
    return x;
}

inline std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw Error("DimensionMismatch", "inverse of non-square");
    size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar(1);
    }
    std::vector<size_t> pivots = row_reduce(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

inline Scalar det(Mat m) {
    if (m.rows() != m.cols()) throw Error("DimensionMismatch", "det of non-square");
    Scalar d(1);
    size_t n = m.rows();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = n;
        for (size_t i = col; i < n; ++i)
            if (!m(i, col).is_zero()) { piv = i; break; }
        if (piv == n) return Scalar(0);
        if (piv != col) {
            for (size_t j = col; j < n; ++j) std::swap(m(col, j), m(piv, j));
            d = -d;
        }
        d *= m(col, col);
        Scalar inv = m(col, col).inverse();
        for (size_t i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            Scalar f = m(i, col) * inv;
            for (size_t j = col; j < n; ++j)
                if (!m(col, j).is_zero()) m(i, j) -= f * m(col, j);
        }
    }
    return d;
}

/// Span utility: maintains a row space in echelon form for membership and
/// dimension queries.
class Span {
public:
    explicit Span(size_t dim) : dim_(dim) {}

    size_t ambient_dim() const { return dim_; }
    size_t dim() const { return rows_.size(); }

    /// Adds a vector; returns true if it enlarged the span.
    bool add(Vec v) {
        reduce(v);
        size_t lead = leading(v);
        if (lead == dim_) return false;
        Scalar inv = v[lead].inverse();
        for (auto& s : v) if (!s.is_zero()) s = inv * s;
        // keep rows sorted by leading index
        size_t pos = 0;
        while (pos < rows_.size() && leads_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        leads_.insert(leads_.begin() + pos, lead);
        // back-substitute to keep reduced form
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (i == pos) continue;
            Scalar f = rows_[i][lead];
            if (f.is_zero()) continue;
            for (size_t j = 0; j < dim_; ++j)
                if (!rows_[pos][j].is_zero()) rows_[i][j] -= f * rows_[pos][j];
        }
        return true;
    }

    bool contains(Vec v) const {
        reduce(v);
        return leading(v) == dim_;
    }

    const std::vector<Vec>& basis() const { return rows_; }

private:
    void reduce(Vec& v) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            Scalar f = v[leads_[i]];
            if (f.is_zero()) continue;
            for (size_t j = 0; j < dim_; ++j)
                if (!rows_[i][j].is_zero()) v[j] -= f * rows_[i][j];
        }
    }
    size_t leading(const Vec& v) const {
        for (size_t j = 0; j < dim_; ++j)
            if (!v[j].is_zero()) return j;
        return dim_;
    }

    size_t dim_;
    std::vector<Vec> rows_;
    std::vector<size_t> leads_;
};

inline Vec tensor_vec(const Vec& a, const Vec& b) {
    Vec r(a.size() * b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
    }
    return r;
}

} // namespace hopfalg

#endif
