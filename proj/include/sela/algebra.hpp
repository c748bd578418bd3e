#pragma once

/**
 * @file algebra.hpp
 * @brief Finite-dimensional unital associative algebras given by structure
 *        constants, with the unit as basis element 0.
 */

#include "json.hpp"
#include "sela/exactla.hpp"

#include <map>
#include <string>
#include <vector>

namespace sela {

template <class F>
class Algebra {
public:
    Algebra() = default;

    /// table[i*dim+j] holds the coordinates of b_i*b_j. Checks the unit and
    /// associativity laws unless check is false.
    Algebra(std::vector<std::string> labels, std::vector<SparseVec<F>> table, bool check = true)
        : dim_(labels.size()), labels_(std::move(labels)), table_(std::move(table)) {
        if (table_.size() != dim_ * dim_) throw std::invalid_argument("structure table has wrong size");
        for (const auto& s : table_)
            for (const auto& [k, v] : s)
                if (k >= dim_) throw std::invalid_argument("structure constant index out of range");
        if (check) verify();
    }

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<SparseVec<F>>& table() const { return table_; }
    const SparseVec<F>& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

    Vec<F> zero() const { return Vec<F>(dim_, F(0)); }
    Vec<F> one() const { return dim_ ? unit_vec<F>(dim_, 0) : Vec<F>{}; }
    Vec<F> basis(std::size_t i) const { return unit_vec<F>(dim_, i); }

    Vec<F> mul(const Vec<F>& a, const Vec<F>& b) const {
        Vec<F> out(dim_, F(0));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (is_zero(a[i])) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (is_zero(b[j])) continue;
                const F c = a[i] * b[j];
                for (const auto& [k, v] : table_[i * dim_ + j]) out[k] += c * v;
            }
        }
        return out;
    }

    Vec<F> commutator(const Vec<F>& a, const Vec<F>& b) const {
        Vec<F> x = mul(a, b);
        axpy(x, F(-1), mul(b, a));
        return x;
    }

    Vec<F> power(const Vec<F>& a, unsigned k) const {
        Vec<F> r = one();
        for (unsigned t = 0; t < k; ++t) r = mul(r, a);
        return r;
    }

    bool is_commutative() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                if (product(i, j) != product(j, i)) return false;
        return true;
    }

    /// Matrix of x -> a*x.
    Matrix<F> left_mult(const Vec<F>& a) const {
        Matrix<F> m(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            Vec<F> c = mul(a, basis(j));
            for (std::size_t i = 0; i < dim_; ++i) m(i, j) = c[i];
        }
        return m;
    }

    /// Throws naming the first violated law.
    void verify() const {
        if (dim_ == 0) return;
        for (std::size_t j = 0; j < dim_; ++j) {
            const SparseVec<F> bj{{static_cast<std::uint32_t>(j), F(1)}};
            if (product(0, j) != bj || product(j, 0) != bj)
                throw std::invalid_argument("unit law fails for basis element " + labels_[j]);
        }
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k) {
                    SparseVec<F> l, r;
                    for (const auto& [p, x] : product(i, j)) l = sparse_axpy(l, x, product(p, k));
                    for (const auto& [q, y] : product(j, k)) r = sparse_axpy(r, y, product(i, q));
                    if (l != r)
                        throw std::invalid_argument("associativity fails on (" + labels_[i] + ", " + labels_[j] +
                                                    ", " + labels_[k] + ")");
                }
    }

    template <class G>
    Algebra<G> convert() const {
        std::vector<SparseVec<G>> t(table_.size());
        for (std::size_t s = 0; s < table_.size(); ++s)
            for (const auto& [k, v] : table_[s]) {
                G g = field_cast<G>(v);
                if (!is_zero(g)) t[s].emplace_back(k, g);
            }
        return Algebra<G>(labels_, std::move(t), false);
    }

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.labels_ == b.labels_ && a.table_ == b.table_;
    }

private:
    template <class G>
    static G field_cast(const F& v) {
        if constexpr (std::is_same_v<F, G>)
            return v;
        else if constexpr (std::is_same_v<F, Rational>)
            return from_rational<G>(v);
        else
            static_assert(std::is_same_v<F, G>, "only conversions out of the rationals are supported");
    }

    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<SparseVec<F>> table_;
};

/// Linear map between coordinate spaces, stored as a dst x src matrix.
template <class F>
struct LinearMap {
    Matrix<F> m;

    LinearMap() = default;
    explicit LinearMap(Matrix<F> mat) : m(std::move(mat)) {}

    static LinearMap from_images(std::size_t dst, const std::vector<Vec<F>>& images) {
        Matrix<F> mat(dst, images.size());
        for (std::size_t j = 0; j < images.size(); ++j)
            for (std::size_t i = 0; i < dst; ++i) mat(i, j) = images[j].at(i);
        return LinearMap(std::move(mat));
    }

    std::size_t src_dim() const { return m.cols; }
    std::size_t dst_dim() const { return m.rows; }
    Vec<F> operator()(const Vec<F>& v) const { return m * v; }
    Vec<F> image(std::size_t j) const {
        Vec<F> v(m.rows);
        for (std::size_t i = 0; i < m.rows; ++i) v[i] = m(i, j);
        return v;
    }
    LinearMap operator*(const LinearMap& o) const { return LinearMap(m * o.m); }
};

template <class F>
struct RebasedAlgebra {
    Algebra<F> algebra;
    Matrix<F> to_new;  ///< new coordinates = to_new * old coordinates
};

/// Builds an algebra from a table whose unit u need not be basis vector 0:
/// the new basis is u followed by the old basis vectors except the first one
/// on which u is supported.
template <class F>
RebasedAlgebra<F> rebase_unit(const std::vector<std::string>& labels, const std::vector<SparseVec<F>>& table,
                              const Vec<F>& unit) {
    const std::size_t n = labels.size();
    std::size_t j0 = 0;
    while (j0 < n && is_zero(unit[j0])) ++j0;
    if (j0 == n) throw std::invalid_argument("unit vector is zero");
    std::vector<Vec<F>> newb{unit};
    std::vector<std::string> newl{"1"};
    for (std::size_t j = 0; j < n; ++j)
        if (j != j0) {
            newb.push_back(unit_vec<F>(n, j));
            newl.push_back(labels[j]);
        }
    BasisSolver<F> solver(n, newb);
    Algebra<F> raw(labels, table, false);
    std::vector<SparseVec<F>> t(n * n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t r = 0; r < n; ++r) t[s * n + r] = to_sparse(*solver.solve(raw.mul(newb[s], newb[r])));
    Matrix<F> to_new(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec<F> c = *solver.solve(unit_vec<F>(n, j));
        for (std::size_t i = 0; i < n; ++i) to_new(i, j) = c[i];
    }
    return {Algebra<F>(std::move(newl), std::move(t)), std::move(to_new)};
}

template <class F>
Algebra<F> matrix_algebra(std::size_t d) {
    if (d < 1) throw std::invalid_argument("matrix algebra needs d >= 1");
    const std::size_t n = d * d;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    std::vector<SparseVec<F>> t(n * n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t l = 0; l < d; ++l) t[(i * d + j) * n + (j * d + l)] = {{static_cast<std::uint32_t>(i * d + l), F(1)}};
    Vec<F> unit(n, F(0));
    for (std::size_t i = 0; i < d; ++i) unit[i * d + i] = F(1);
    if (d == 1) return Algebra<F>({"1"}, t);
    return rebase_unit(labels, t, unit).algebra;
}

/// Generalized quaternion algebra (a,b): i^2 = a, j^2 = b, ij = -ji = k.
template <class F>
Algebra<F> quaternion_algebra(const Rational& a, const Rational& b) {
    if (sgn(a) == 0 || sgn(b) == 0) throw std::invalid_argument("quaternion parameters must be nonzero");
    const F A = from_rational<F>(a), B = from_rational<F>(b);
    if (is_zero(A) || is_zero(B)) throw std::invalid_argument("quaternion parameters vanish in this field");
    std::vector<SparseVec<F>> t(16);
    auto set = [&](int x, int y, int z, F c) { t[x * 4 + y] = {{static_cast<std::uint32_t>(z), c}}; };
    for (int x = 0; x < 4; ++x) {
        set(0, x, x, F(1));
        set(x, 0, x, F(1));
    }
    set(1, 1, 0, A);
    set(1, 2, 3, F(1));
    set(1, 3, 2, A);
    set(2, 1, 3, F(-1));
    set(2, 2, 0, B);
    set(2, 3, 1, -B);
    set(3, 1, 2, -A);
    set(3, 2, 1, B);
    set(3, 3, 0, -(A * B));
    return Algebra<F>({"1", "i", "j", "k"}, std::move(t));
}

/// k[x]/(x^m).
template <class F>
Algebra<F> trunc_poly(std::size_t m) {
    if (m < 1) throw std::invalid_argument("trunc_poly needs m >= 1");
    std::vector<std::string> labels{"1"};
    for (std::size_t i = 1; i < m; ++i) labels.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
    std::vector<SparseVec<F>> t(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; i + j < m; ++j) t[i * m + j] = {{static_cast<std::uint32_t>(i + j), F(1)}};
    return Algebra<F>(std::move(labels), std::move(t));
}

template <class F>
Algebra<F> opposite(const Algebra<F>& a) {
    const std::size_t n = a.dim();
    std::vector<SparseVec<F>> t(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i * n + j] = a.product(j, i);
    return Algebra<F>(a.labels(), std::move(t), false);
}

template <class F>
Algebra<F> tensor_product(const Algebra<F>& a, const Algebra<F>& b, bool tuple_labels = false) {
    const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            labels.push_back(tuple_labels ? a.labels()[i] + "," + b.labels()[j] : a.labels()[i] + "⊗" + b.labels()[j]);
    std::vector<SparseVec<F>> t(n * n);
    for (std::size_t i1 = 0; i1 < na; ++i1)
        for (std::size_t j1 = 0; j1 < nb; ++j1)
            for (std::size_t i2 = 0; i2 < na; ++i2)
                for (std::size_t j2 = 0; j2 < nb; ++j2) {
                    SparseVec<F> out;
                    for (const auto& [p, x] : a.product(i1, i2))
                        for (const auto& [q, y] : b.product(j1, j2))
                            out.emplace_back(static_cast<std::uint32_t>(p * nb + q), x * y);
                    std::sort(out.begin(), out.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
                    t[(i1 * nb + j1) * n + (i2 * nb + j2)] = std::move(out);
                }
    return Algebra<F>(std::move(labels), std::move(t), n <= 64);
}

/// Tensor product of a list of algebras (k for the empty list).
template <class F>
Algebra<F> tensor_product(const std::vector<Algebra<F>>& parts) {
    Algebra<F> acc({"1"}, {{{0u, F(1)}}});
    bool first = true;
    for (const auto& p : parts) {
        acc = first ? p : tensor_product(acc, p);
        first = false;
    }
    return acc;
}

/// A^{⊗ell} with coordinate-wise product; basis labelled by index tuples.
template <class F>
Algebra<F> tensor_power(const Algebra<F>& a, std::size_t ell, std::size_t guard = 1000000) {
    if (ell < 1) throw std::invalid_argument("tensor power needs ell >= 1");
    double size = 1;
    for (std::size_t t = 0; t < ell; ++t) size *= static_cast<double>(a.dim());
    if (size > static_cast<double>(guard))
        throw std::length_error("tensor power dimension " + std::to_string(static_cast<long long>(size)) +
                                " exceeds guard " + std::to_string(guard));
    std::vector<std::string> idx;
    for (std::size_t i = 0; i < a.dim(); ++i) idx.push_back(std::to_string(i));
    Algebra<F> indexed(idx, a.table(), false);
    Algebra<F> acc = indexed;
    for (std::size_t t = 1; t < ell; ++t) acc = tensor_product(acc, indexed, true);
    std::vector<std::string> labels;
    for (const auto& l : acc.labels()) labels.push_back("(" + l + ")");
    return Algebra<F>(std::move(labels), acc.table(), false);
}

/// Solution space of the homogeneous system rows * x = 0.
template <class F>
std::vector<Vec<F>> null_space(std::size_t n, const std::vector<Vec<F>>& rows) {
    Subspace<F> s = Subspace<F>::span(n, rows);
    std::vector<Vec<F>> out;
    const auto& piv = s.pivots();
    for (std::size_t f : s.non_pivots()) {
        Vec<F> x(n, F(0));
        x[f] = F(1);
        for (std::size_t r = 0; r < s.dim(); ++r) x[piv[r]] = -s.basis()[r][f];
        out.push_back(std::move(x));
    }
    return out;
}

/// Smallest two-sided ideal containing the given vectors.
template <class F>
Subspace<F> ideal_generated(const Algebra<F>& a, const std::vector<Vec<F>>& gens) {
    Subspace<F> s = Subspace<F>::span(a.dim(), gens);
    for (;;) {
        const std::size_t before = s.dim();
        const auto rows = s.basis();
        for (const auto& v : rows)
            for (std::size_t i = 0; i < a.dim(); ++i) {
                s.add(a.mul(a.basis(i), v));
                s.add(a.mul(v, a.basis(i)));
            }
        if (s.dim() == before) return s;
    }
}

/// Unital subalgebra generated by the given vectors.
template <class F>
Subspace<F> subalgebra_generated(const Algebra<F>& a, const std::vector<Vec<F>>& gens) {
    Subspace<F> s(a.dim());
    if (a.dim()) s.add(a.one());
    for (const auto& g : gens) s.add(g);
    for (;;) {
        const std::size_t before = s.dim();
        const auto rows = s.basis();
        for (const auto& u : rows)
            for (const auto& g : gens) {
                s.add(a.mul(u, g));
                s.add(a.mul(g, u));
            }
        if (s.dim() == before) return s;
    }
}

template <class F>
struct DerivedSpaces {
    Subspace<F> commutator;
    Subspace<F> commutator_ideal;
    Subspace<F> center;
};

template <class F>
DerivedSpaces<F> derived_spaces(const Algebra<F>& a) {
    const std::size_t n = a.dim();
    std::vector<Vec<F>> comms;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) comms.push_back(a.commutator(a.basis(i), a.basis(j)));
    Subspace<F> comm = Subspace<F>::span(n, comms);
    Subspace<F> ideal = ideal_generated(a, comm.basis());
    std::vector<Vec<F>> eqs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            Vec<F> row(n, F(0));
            for (std::size_t j = 0; j < n; ++j) {
                F c(0);
                for (const auto& [kk, v] : a.product(j, i))
                    if (kk == k) c += v;
                for (const auto& [kk, v] : a.product(i, j))
                    if (kk == k) c -= v;
                row[j] = c;
            }
            if (!is_zero_vec(row)) eqs.push_back(std::move(row));
        }
    return {std::move(comm), std::move(ideal), Subspace<F>::span(n, null_space(n, eqs))};
}

/// Algebra structure on an explicit basis of a subalgebra; basis[0] must be the unit.
template <class F>
Algebra<F> subalgebra_on_basis(const Algebra<F>& a, const std::vector<Vec<F>>& basis,
                               std::vector<std::string> labels) {
    const std::size_t k = basis.size();
    BasisSolver<F> solver(a.dim(), basis);
    std::vector<SparseVec<F>> t(k * k);
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t r = 0; r < k; ++r) {
            auto c = solver.solve(a.mul(basis[s], basis[r]));
            if (!c) throw std::invalid_argument("basis does not span a subalgebra");
            t[s * k + r] = to_sparse(*c);
        }
    return Algebra<F>(std::move(labels), std::move(t), k <= 64);
}

template <class F>
struct QuotientAlgebra {
    Algebra<F> algebra;
    Matrix<F> projection;  ///< dim(A/I) x dim(A)
};

/// A/I on the complement of the pivots of I, rebased so that the unit is first.
template <class F>
QuotientAlgebra<F> quotient_algebra(const Algebra<F>& a, const Subspace<F>& ideal) {
    const std::size_t n = a.dim();
    const auto comp = ideal.non_pivots();
    const std::size_t q = comp.size();
    auto coords = [&](const Vec<F>& v) {
        Vec<F> r = ideal.reduce(v);
        Vec<F> c(q);
        for (std::size_t t = 0; t < q; ++t) c[t] = r[comp[t]];
        return c;
    };
    Matrix<F> proj(q, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec<F> c = coords(a.basis(j));
        for (std::size_t i = 0; i < q; ++i) proj(i, j) = c[i];
    }
    if (q == 0) return {Algebra<F>(), proj};
    std::vector<std::string> labels;
    for (std::size_t c : comp) labels.push_back(a.labels()[c]);
    std::vector<SparseVec<F>> t(q * q);
    for (std::size_t s = 0; s < q; ++s)
        for (std::size_t r = 0; r < q; ++r) t[s * q + r] = to_sparse(coords(a.mul(a.basis(comp[s]), a.basis(comp[r]))));
    auto rb = rebase_unit(labels, t, coords(a.one()));
    return {std::move(rb.algebra), rb.to_new * proj};
}

/// a -> a* = trd(a) - a for a four-dimensional central simple algebra, with
/// the reduced trace computed as half the trace of left multiplication.
template <class F>
LinearMap<F> standard_involution(const Algebra<F>& a) {
    if (a.dim() != 4) throw std::invalid_argument("standard involution is defined here for dimension 4 only");
    std::vector<Vec<F>> images;
    const F half = F(1) / F(2);
    for (std::size_t j = 0; j < 4; ++j) {
        Matrix<F> l = a.left_mult(a.basis(j));
        F tr(0);
        for (std::size_t i = 0; i < 4; ++i) tr += l(i, i);
        Vec<F> v = scaled(tr * half, a.one());
        v[j] -= F(1);
        images.push_back(std::move(v));
    }
    return LinearMap<F>::from_images(4, images);
}

/// Checks that f: A -> B is unital and multiplicative on basis pairs.
template <class F>
bool is_algebra_hom(const Algebra<F>& a, const Algebra<F>& b, const LinearMap<F>& f) {
    if (a.dim() && f(a.one()) != b.one()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (f(to_dense(a.product(i, j), a.dim())) != b.mul(f.image(i), f.image(j))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// JSON algebra format: {"dim", "labels", "unit", "mul": [[i, j, k, "p/q"], ...]}

inline Rational json_scalar(const nlohmann::json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw std::invalid_argument("scalar must be an integer or a \"p/q\" string");
}

template <class F>
nlohmann::json to_json(const Algebra<F>& a) {
    nlohmann::json j;
    j["dim"] = a.dim();
    j["labels"] = a.labels();
    auto unit = nlohmann::json::array();
    for (const auto& x : a.one()) unit.push_back(Field<F>::to_string(x));
    j["unit"] = unit;
    auto mul = nlohmann::json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < a.dim(); ++k)
            for (const auto& [c, v] : a.product(i, k)) mul.push_back({i, k, c, Field<F>::to_string(v)});
    j["mul"] = mul;
    return j;
}

template <class F>
Algebra<F> algebra_from_json(const nlohmann::json& j) {
    const std::size_t n = j.at("dim").get<std::size_t>();
    if (n == 0) throw std::invalid_argument("algebra dimension must be positive");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    else
        for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
    if (labels.size() != n) throw std::invalid_argument("label count differs from dim");
    Vec<F> unit(n, F(0));
    const auto& u = j.at("unit");
    if (u.size() != n) throw std::invalid_argument("unit vector has wrong length");
    for (std::size_t i = 0; i < n; ++i) unit[i] = from_rational<F>(json_scalar(u[i]));
    std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, F>> acc;
    for (const auto& e : j.at("mul")) {
        if (e.size() != 4) throw std::invalid_argument("mul entries are [i, j, k, value]");
        const std::size_t a = e[0].get<std::size_t>(), b = e[1].get<std::size_t>(), c = e[2].get<std::size_t>();
        if (a >= n || b >= n || c >= n) throw std::invalid_argument("mul index out of range");
        auto& slot = acc[{a, b}];
        if (slot.count(c)) throw std::invalid_argument("duplicate mul entry");
        slot[c] = from_rational<F>(json_scalar(e[3]));
    }
    std::vector<SparseVec<F>> t(n * n);
    for (const auto& [ij, m] : acc)
        for (const auto& [c, v] : m)
            if (!is_zero(v)) t[ij.first * n + ij.second].emplace_back(static_cast<std::uint32_t>(c), v);
    if (unit == unit_vec<F>(n, 0)) return Algebra<F>(std::move(labels), std::move(t));
    return rebase_unit(labels, t, unit).algebra;
}

}  // namespace sela
