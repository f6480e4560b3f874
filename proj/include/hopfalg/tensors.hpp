#ifndef HOPFALG_TENSORS_HPP
#define HOPFALG_TENSORS_HPP

#include <algorithm>
#include <vector>

#include "hopfalg/linalg.hpp"

namespace hopfalg {

/// Sparse vector: sorted (index, coefficient) pairs, no zero coefficients.
struct SVec {
    std::vector<std::pair<size_t, Scalar>> terms;

    void add(size_t i, const Scalar& c) {
        if (!c.is_zero()) terms.emplace_back(i, c);
    }
    /// Sorts, merges duplicate indices and drops zeros.
    void normalize() {
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<size_t, Scalar>> out;
        for (auto& t : terms) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second += t.second;
            else
                out.push_back(std::move(t));
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const auto& t) { return t.second.is_zero(); }),
                  out.end());
        terms = std::move(out);
    }
    bool empty() const { return terms.empty(); }

    Vec dense(size_t dim) const {
        Vec v(dim);
        for (const auto& [i, c] : terms) v[i] += c;
        return v;
    }
    static SVec from_dense(const Vec& v) {
        SVec s;
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) s.terms.emplace_back(i, v[i]);
        return s;
    }
};

/// Multiplication tensor m[i][j][k]: e_i * e_j = sum_k m[i][j][k] e_k,
/// stored as one sparse row per basis pair (i, j).
class MultTensor {
public:
    MultTensor() : dim_(0) {}
    explicit MultTensor(size_t dim) : dim_(dim), rows_(dim * dim) {}

    size_t dim() const { return dim_; }

    void add(size_t i, size_t j, size_t k, const Scalar& c) {
        if (i >= dim_ || j >= dim_ || k >= dim_)
            throw Error("MalformedTensor", "mult index out of range");
        rows_[i * dim_ + j].add(k, c);
    }
    void normalize() {
        for (auto& r : rows_) r.normalize();
    }
    const SVec& row(size_t i, size_t j) const { return rows_[i * dim_ + j]; }

    /// Product of two coordinate vectors.
    Vec apply(const Vec& x, const Vec& y) const {
        Vec r(dim_);
        for (size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                Scalar c = x[i] * y[j];
                for (const auto& [k, v] : row(i, j).terms) r[k] += c * v;
            }
        }
        return r;
    }

    /// mult with arguments swapped (opposite algebra).
    MultTensor opposite() const {
        MultTensor t(dim_);
        for (size_t i = 0; i < dim_; ++i)
            for (size_t j = 0; j < dim_; ++j) t.rows_[j * dim_ + i] = row(i, j);
        return t;
    }

    std::vector<std::tuple<size_t, size_t, size_t, Scalar>> entries() const {
        std::vector<std::tuple<size_t, size_t, size_t, Scalar>> out;
        for (size_t i = 0; i < dim_; ++i)
            for (size_t j = 0; j < dim_; ++j)
                for (const auto& [k, v] : row(i, j).terms) out.emplace_back(i, j, k, v);
        return out;
    }

    friend bool operator==(const MultTensor& a, const MultTensor& b) {
        if (a.dim_ != b.dim_) return false;
        for (size_t r = 0; r < a.rows_.size(); ++r)
            if (a.rows_[r].terms != b.rows_[r].terms) return false;
        return true;
    }

private:
    size_t dim_;
    std::vector<SVec> rows_;
};

/// Comultiplication tensor d[i][j][k]: Delta(e_i) = sum d[i][j][k] e_j (x) e_k,
/// stored as one sparse list of ((j, k), coeff) per basis element i.
class ComultTensor {
public:
    struct Term {
        size_t j, k;
        Scalar c;
        bool operator==(const Term& o) const { return j == o.j && k == o.k && c == o.c; }
    };

    ComultTensor() : dim_(0) {}
    explicit ComultTensor(size_t dim) : dim_(dim), rows_(dim) {}

    size_t dim() const { return dim_; }

    void add(size_t i, size_t j, size_t k, const Scalar& c) {
        if (i >= dim_ || j >= dim_ || k >= dim_)
            throw Error("MalformedTensor", "comult index out of range");
        if (!c.is_zero()) rows_[i].push_back({j, k, c});
    }
    void normalize() {
        for (auto& r : rows_) {
            std::sort(r.begin(), r.end(), [](const Term& a, const Term& b) {
                return a.j != b.j ? a.j < b.j : a.k < b.k;
            });
            std::vector<Term> out;
            for (auto& t : r) {
                if (!out.empty() && out.back().j == t.j && out.back().k == t.k)
                    out.back().c += t.c;
                else
                    out.push_back(std::move(t));
            }
            out.erase(std::remove_if(out.begin(), out.end(),
                                     [](const Term& t) { return t.c.is_zero(); }),
                      out.end());
            r = std::move(out);
        }
    }
    const std::vector<Term>& row(size_t i) const { return rows_[i]; }

    /// Delta applied to a coordinate vector, as a sparse element of H (x) H
    /// indexed by j*dim + k.
    SVec apply(const Vec& x) const {
        SVec r;
        for (size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (const auto& t : rows_[i]) r.add(t.j * dim_ + t.k, x[i] * t.c);
        }
        r.normalize();
        return r;
    }

    ComultTensor flipped() const {
        ComultTensor t(dim_);
        for (size_t i = 0; i < dim_; ++i)
            for (const auto& term : rows_[i]) t.rows_[i].push_back({term.k, term.j, term.c});
        t.normalize();
        return t;
    }

    std::vector<std::tuple<size_t, size_t, size_t, Scalar>> entries() const {
        std::vector<std::tuple<size_t, size_t, size_t, Scalar>> out;
        for (size_t i = 0; i < dim_; ++i)
            for (const auto& t : rows_[i]) out.emplace_back(i, t.j, t.k, t.c);
        return out;
    }

    friend bool operator==(const ComultTensor& a, const ComultTensor& b) {
        return a.dim_ == b.dim_ && a.rows_ == b.rows_;
    }

private:
    size_t dim_;
    std::vector<std::vector<Term>> rows_;
};

} // namespace hopfalg

#endif
