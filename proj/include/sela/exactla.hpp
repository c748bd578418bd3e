#pragma once

/**
 * @file exactla.hpp
 * @brief Exact linear algebra: dense and sparse vectors, reduced row echelon
 *        subspaces, explicit-basis solvers and an incremental sparse echelon
 *        used by the large saturations.
 */

#include "sela/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

namespace sela {

template <class F>
using Vec = std::vector<F>;

/// Sorted (index, value) pairs with no zero values.
template <class F>
using SparseVec = std::vector<std::pair<std::uint32_t, F>>;

template <class F>
bool is_zero_vec(const Vec<F>& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

template <class F>
void axpy(Vec<F>& y, const std::type_identity_t<F>& a, const Vec<F>& x) {
    if (is_zero(a)) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!is_zero(x[i])) y[i] += a * x[i];
}

template <class F>
Vec<F> scaled(const std::type_identity_t<F>& a, Vec<F> x) {
    for (auto& v : x) v *= a;
    return x;
}

template <class F>
Vec<F> unit_vec(std::size_t n, std::size_t i) {
    Vec<F> v(n, F(0));
    v.at(i) = F(1);
    return v;
}

template <class F>
SparseVec<F> to_sparse(const Vec<F>& v) {
    SparseVec<F> s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!is_zero(v[i])) s.emplace_back(static_cast<std::uint32_t>(i), v[i]);
    return s;
}

template <class F>
Vec<F> to_dense(const SparseVec<F>& s, std::size_t n) {
    Vec<F> v(n, F(0));
    for (const auto& [i, x] : s) v.at(i) = x;
    return v;
}

/// Returns y + a*x for sorted sparse vectors.
template <class F>
SparseVec<F> sparse_axpy(const SparseVec<F>& y, const std::type_identity_t<F>& a, const SparseVec<F>& x) {
    SparseVec<F> out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(y[i++]);
        } else if (i == y.size() || x[j].first < y[i].first) {
            F v = a * x[j].second;
            if (!is_zero(v)) out.emplace_back(x[j].first, v);
            ++j;
        } else {
            F v = y[i].second + a * x[j].second;
            if (!is_zero(v)) out.emplace_back(y[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

/// Sparse matrix in canonical row-major order.
template <class F>
struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::tuple<std::uint32_t, std::uint32_t, F>> entries;

    /// Sorts entries, drops zeros and rejects duplicate or out-of-range positions.
    void canonicalize() {
        std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
            return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
        });
        for (std::size_t i = 0; i < entries.size(); ++i) {
            auto [r, c, v] = entries[i];
            if (r >= rows || c >= cols) throw std::invalid_argument("sparse matrix entry out of range");
            if (i > 0 && std::get<0>(entries[i - 1]) == r && std::get<1>(entries[i - 1]) == c)
                throw std::invalid_argument("duplicate sparse matrix position (" + std::to_string(r) + "," +
                                            std::to_string(c) + ")");
        }
        entries.erase(std::remove_if(entries.begin(), entries.end(),
                                     [](const auto& e) { return is_zero(std::get<2>(e)); }),
                      entries.end());
    }

    std::vector<Vec<F>> dense_rows() const {
        std::vector<Vec<F>> out(rows, Vec<F>(cols, F(0)));
        for (const auto& [r, c, v] : entries) out[r][c] = v;
        return out;
    }

    static SparseMatrix from_rows(std::size_t cols, const std::vector<Vec<F>>& rs) {
        SparseMatrix m;
        m.rows = rs.size();
        m.cols = cols;
        for (std::size_t r = 0; r < rs.size(); ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (!is_zero(rs[r][c])) m.entries.emplace_back(r, c, rs[r][c]);
        return m;
    }
};

/// Subspace of F^n held as its (unique) reduced row echelon basis.
template <class F>
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<Vec<F>>& vectors) {
        Subspace s(ambient);
        for (const auto& v : vectors) s.add(v);
        return s;
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vec<F>>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    Vec<F> reduce(Vec<F> v) const {
        check_len(v);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const F c = v[pivots_[r]];
            if (!is_zero(c)) axpy(v, F(-c), rows_[r]);
        }
        return v;
    }

    bool contains(const Vec<F>& v) const { return is_zero_vec(reduce(v)); }

    bool contains(const Subspace& other) const {
        for (const auto& r : other.rows_)
            if (!contains(r)) return false;
        return true;
    }

    /// Coordinates with respect to basis(); nullopt if v is not a member.
    std::optional<Vec<F>> coordinates(const Vec<F>& v) const {
        if (!contains(v)) return std::nullopt;
        Vec<F> c(rows_.size(), F(0));
        for (std::size_t r = 0; r < rows_.size(); ++r) c[r] = v[pivots_[r]];
        return c;
    }

    /// Inserts v; returns true when the dimension grew.
    bool add(const Vec<F>& v0) {
        Vec<F> v = reduce(v0);
        std::size_t p = 0;
        while (p < v.size() && is_zero(v[p])) ++p;
        if (p == v.size()) return false;
        const F inv = F(1) / v[p];
        for (auto& x : v) x *= inv;
        for (auto& row : rows_) {
            const F c = row[p];
            if (!is_zero(c)) axpy(row, F(-c), v);
        }
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, p);
        rows_.insert(rows_.begin() + pos, std::move(v));
        return true;
    }

    Subspace sum(const Subspace& o) const {
        check_same(o);
        Subspace s = *this;
        for (const auto& r : o.rows_) s.add(r);
        return s;
    }

    /// Zassenhaus intersection.
    Subspace intersection(const Subspace& o) const {
        check_same(o);
        const std::size_t n = ambient_;
        Subspace big(2 * n);
        for (const auto& r : rows_) {
            Vec<F> w(2 * n, F(0));
            std::copy(r.begin(), r.end(), w.begin());
            std::copy(r.begin(), r.end(), w.begin() + n);
            big.add(w);
        }
        for (const auto& r : o.rows_) {
            Vec<F> w(2 * n, F(0));
            std::copy(r.begin(), r.end(), w.begin());
            big.add(w);
        }
        Subspace out(n);
        for (std::size_t r = 0; r < big.rows_.size(); ++r)
            if (big.pivots_[r] >= n) out.add(Vec<F>(big.rows_[r].begin() + n, big.rows_[r].end()));
        return out;
    }

    std::size_t quotient_dim() const { return ambient_ - dim(); }

    /// dim(this / sub) for a subspace sub of this.
    std::size_t quotient_dim(const Subspace& sub) const {
        check_same(sub);
        if (!contains(sub)) throw std::invalid_argument("quotient_dim: argument is not a subspace");
        return dim() - sub.dim();
    }

    /// Standard basis indices complementing the pivots.
    std::vector<std::size_t> non_pivots() const {
        std::vector<std::size_t> out;
        std::size_t r = 0;
        for (std::size_t c = 0; c < ambient_; ++c) {
            if (r < pivots_.size() && pivots_[r] == c) {
                ++r;
                continue;
            }
            out.push_back(c);
        }
        return out;
    }

    SparseMatrix<F> as_matrix() const { return SparseMatrix<F>::from_rows(ambient_, rows_); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
    }

private:
    void check_len(const Vec<F>& v) const {
        if (v.size() != ambient_) throw std::invalid_argument("vector length does not match ambient dimension");
    }
    void check_same(const Subspace& o) const {
        if (o.ambient_ != ambient_) throw std::invalid_argument("subspace ambient dimensions differ");
    }

    std::size_t ambient_ = 0;
    std::vector<Vec<F>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Row space of m as a Subspace.
template <class F>
Subspace<F> row_reduce(SparseMatrix<F> m) {
    m.canonicalize();
    return Subspace<F>::span(m.cols, m.dense_rows());
}

/// Coordinates with respect to an explicit linearly independent family.
template <class F>
class BasisSolver {
public:
    BasisSolver() = default;
    BasisSolver(std::size_t ambient, const std::vector<Vec<F>>& basis) : ambient_(ambient), k_(basis.size()) {
        space_.emplace(ambient + k_);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].size() != ambient) throw std::invalid_argument("basis vector length mismatch");
            Vec<F> v = basis[i];
            v.resize(ambient + k_, F(0));
            v[ambient + i] = F(1);
            space_->add(v);
        }
        for (std::size_t p : space_->pivots())
            if (p >= ambient) throw std::invalid_argument("BasisSolver: family is linearly dependent");
    }

    std::size_t size() const { return k_; }

    std::optional<Vec<F>> solve(const Vec<F>& v) const {
        if (v.size() != ambient_) throw std::invalid_argument("vector length mismatch");
        Vec<F> w = v;
        w.resize(ambient_ + k_, F(0));
        w = space_->reduce(std::move(w));
        for (std::size_t i = 0; i < ambient_; ++i)
            if (!is_zero(w[i])) return std::nullopt;
        Vec<F> c(k_);
        for (std::size_t i = 0; i < k_; ++i) c[i] = -w[ambient_ + i];
        return c;
    }

private:
    std::size_t ambient_ = 0;
    std::size_t k_ = 0;
    std::optional<Subspace<F>> space_;
};

/// Dense row-major matrix.
template <class F>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    Vec<F> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, F(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    F& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    Matrix operator*(const Matrix& b) const {
        if (cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
        Matrix c(rows, b.cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < cols; ++k) {
                const F& x = (*this)(i, k);
                if (is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols; ++j)
                    if (!is_zero(b(k, j))) c(i, j) += x * b(k, j);
            }
        return c;
    }

    Vec<F> operator*(const Vec<F>& v) const {
        Vec<F> out(rows, F(0));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (!is_zero((*this)(i, j)) && !is_zero(v[j])) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    Matrix& operator+=(const Matrix& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b.a[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b.a[i];
        return *this;
    }
    Matrix scaled(const F& s) const {
        Matrix m = *this;
        for (auto& x : m.a) x *= s;
        return m;
    }

    bool is_zero_matrix() const { return is_zero_vec(a); }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }

    std::vector<Vec<F>> row_vectors() const {
        std::vector<Vec<F>> out;
        for (std::size_t i = 0; i < rows; ++i) out.emplace_back(a.begin() + i * cols, a.begin() + (i + 1) * cols);
        return out;
    }

    std::size_t rank() const { return Subspace<F>::span(cols, row_vectors()).dim(); }
};

/// Incremental sparse echelon form. Rows are kept with leading coefficient 1
/// and distinct leading columns; reduction scans columns in increasing order,
/// so the column order is the elimination priority.
template <class F>
class Echelon {
public:
    explicit Echelon(std::size_t ncols = 0) : ncols_(ncols), pivot_row_(ncols, -1), acc_(ncols, F(0)), mark_(ncols, 0) {}

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }
    const SparseVec<F>& row(std::size_t i) const { return rows_[i]; }
    std::uint32_t pivot(std::size_t i) const { return rows_[i].front().first; }
    bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }

    /// Normal form of v: supported on non-pivot columns only.
    SparseVec<F> reduce(const SparseVec<F>& v) const {
        std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
        for (const auto& [c, x] : v) {
            if (c >= ncols_) throw std::out_of_range("echelon column out of range");
            acc_[c] += x;
            if (!mark_[c]) {
                mark_[c] = 1;
                heap.push(c);
            }
        }
        SparseVec<F> out;
        while (!heap.empty()) {
            const std::uint32_t c = heap.top();
            heap.pop();
            mark_[c] = 0;
            if (is_zero(acc_[c])) continue;
            const long r = pivot_row_[c];
            if (r < 0) {
                out.emplace_back(c, acc_[c]);
                acc_[c] = F(0);
                continue;
            }
            const F f = acc_[c];
            acc_[c] = F(0);
            const auto& row = rows_[r];
            for (std::size_t t = 1; t < row.size(); ++t) {
                const std::uint32_t cc = row[t].first;
                acc_[cc] -= f * row[t].second;
                if (!mark_[cc]) {
                    mark_[cc] = 1;
                    heap.push(cc);
                }
            }
        }
        return out;
    }

    bool contains(const SparseVec<F>& v) const { return reduce(v).empty(); }

    /// Inserts v; returns the new row index or -1 when v is already in the span.
    long insert(const SparseVec<F>& v) {
        SparseVec<F> r = reduce(v);
        if (r.empty()) return -1;
        const F inv = F(1) / r.front().second;
        for (auto& e : r) e.second *= inv;
        pivot_row_[r.front().first] = static_cast<long>(rows_.size());
        rows_.push_back(std::move(r));
        return static_cast<long>(rows_.size()) - 1;
    }

private:
    std::size_t ncols_;
    std::vector<SparseVec<F>> rows_;
    std::vector<long> pivot_row_;
    mutable Vec<F> acc_;
    mutable std::vector<char> mark_;
};

}  // namespace sela
