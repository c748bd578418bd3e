#pragma once

/**
 * @file liealg.hpp
 * @brief Type A root data and the root-graded Lie algebra sl_n(A) over a
 *        finite-dimensional unital associative algebra A.
 *
 * The basis of sl_n(A) is ordered for PBW use: the negative root spaces
 * E_ij(b_p) (i > j) come first, then L_0, then the positive root spaces.
 * L_0 is coordinatized as (+) h_i(A) (+) [A,A]E_kk.
 */

#include "sela/algebra.hpp"

#include <random>
#include <string>
#include <vector>

namespace sela {

/// Root datum of A_{n-1}: weights are integer vectors in the basis of
/// fundamental weights.
struct RootDatumA {
    std::size_t n = 2;

    explicit RootDatumA(std::size_t n_) : n(n_) {
        if (n < 2) throw std::invalid_argument("root datum needs n >= 2");
    }

    std::size_t rank() const { return n - 1; }

    long cartan(std::size_t i, std::size_t j) const {
        if (i == j) return 2;
        return (i + 1 == j || j + 1 == i) ? -1 : 0;
    }

    /// alpha_i in fundamental weight coordinates (row i of the Cartan matrix).
    std::vector<long> simple_root(std::size_t i) const {
        std::vector<long> v(rank());
        for (std::size_t j = 0; j < rank(); ++j) v[j] = cartan(i, j);
        return v;
    }

    /// Fundamental weight coordinates of lambda - sum k_i alpha_i.
    std::vector<long> shift(const std::vector<long>& lambda, const std::vector<long>& k) const {
        std::vector<long> out = lambda;
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j) out[j] -= k[i] * cartan(i, j);
        return out;
    }

    static bool dominant(const std::vector<long>& w) {
        for (long x : w)
            if (x < 0) return false;
        return true;
    }

    /// mu <= lambda iff lambda - mu lies in the N-span of the simple roots.
    bool leq(const std::vector<long>& mu, const std::vector<long>& lambda) const {
        const std::size_t r = rank();
        std::vector<Vec<Rational>> rows;
        for (std::size_t i = 0; i < r; ++i) {
            Vec<Rational> row(r + 1);
            for (std::size_t j = 0; j < r; ++j) row[j] = cartan(j, i);
            row[r] = lambda[i] - mu[i];
            rows.push_back(std::move(row));
        }
        Subspace<Rational> s = Subspace<Rational>::span(r + 1, rows);
        for (std::size_t t = 0; t < s.dim(); ++t) {
            const Rational& k = s.basis()[t][r];
            if (k < 0 || k.get_den() != 1) return false;
        }
        return true;
    }

    /// theta^*(varpi_i) = varpi_{n-i}.
    static std::vector<long> theta_star(std::vector<long> w) {
        std::reverse(w.begin(), w.end());
        return w;
    }
};

/// Lie algebra given by bracket structure constants.
template <class F>
class LieAlgebra {
public:
    LieAlgebra() = default;
    LieAlgebra(std::vector<std::string> labels, std::vector<SparseVec<F>> table)
        : dim_(labels.size()), labels_(std::move(labels)), table_(std::move(table)) {
        if (table_.size() != dim_ * dim_) throw std::invalid_argument("bracket table has wrong size");
    }

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const SparseVec<F>& bracket(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

    Vec<F> bracket(const Vec<F>& x, const Vec<F>& y) const {
        Vec<F> out(dim_, F(0));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (is_zero(x[i])) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (is_zero(y[j])) continue;
                const F c = x[i] * y[j];
                for (const auto& [k, v] : bracket(i, j)) out[k] += c * v;
            }
        }
        return out;
    }

    /// Antisymmetry on all pairs and the Jacobi identity on `samples` random
    /// basis triples (all triples when samples is 0).
    bool check_laws(std::size_t samples = 500, std::uint32_t seed = 7) const {
        for (std::size_t i = 0; i < dim_; ++i) {
            if (!bracket(i, i).empty()) return false;
            for (std::size_t j = i + 1; j < dim_; ++j) {
                SparseVec<F> s = sparse_axpy(bracket(i, j), F(1), bracket(j, i));
                if (!s.empty()) return false;
            }
        }
        auto jacobi = [&](std::size_t a, std::size_t b, std::size_t c) {
            Vec<F> x = unit_vec<F>(dim_, a), y = unit_vec<F>(dim_, b), z = unit_vec<F>(dim_, c);
            Vec<F> s = bracket(x, bracket(y, z));
            axpy(s, F(1), bracket(y, bracket(z, x)));
            axpy(s, F(1), bracket(z, bracket(x, y)));
            return is_zero_vec(s);
        };
        if (samples == 0) {
            for (std::size_t a = 0; a < dim_; ++a)
                for (std::size_t b = a + 1; b < dim_; ++b)
                    for (std::size_t c = b + 1; c < dim_; ++c)
                        if (!jacobi(a, b, c)) return false;
            return true;
        }
        std::mt19937 gen(seed);
        std::uniform_int_distribution<std::size_t> pick(0, dim_ - 1);
        for (std::size_t s = 0; s < samples; ++s)
            if (!jacobi(pick(gen), pick(gen), pick(gen))) return false;
        return true;
    }

private:
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<SparseVec<F>> table_;
};

enum class Block { negative, zero, positive };

/// One basis vector of sl_n(A).
struct Letter {
    Block block = Block::zero;
    std::size_t i = 0, j = 0;   ///< root E_ij (1-based) or h_i index (j = 0)
    std::size_t p = 0;          ///< A basis index, or [A,A] basis index for c-letters
    bool central_part = false;  ///< true for the [A,A]E_kk letters
    std::vector<int> weight;    ///< simple root coordinates
    std::size_t height() const {
        int h = 0;
        for (int w : weight) h += w;
        return static_cast<std::size_t>(h < 0 ? -h : h);
    }
};

template <class F>
struct L0Coordinates {
    Vec<F> c;               ///< element of [A,A] (A coordinates)
    std::vector<Vec<F>> a;  ///< a_1 .. a_{n-1}
};

/// sl_n(A) with a fixed PBW-ordered basis. Elements are coordinate vectors;
/// a matrix form with A-valued entries is used to compute brackets.
template <class F>
class GradedLie {
public:
    GradedLie(const Algebra<F>& a, std::size_t n, std::size_t k = 1, std::size_t max_dim = 5000)
        : a_(a), n_(n), k_(k), roots_(n) {
        if (k < 1 || k >= n) throw std::invalid_argument("L0 split index k must lie in 1..n-1");
        const std::size_t d = a.dim();
        comm_ = derived_spaces(a).commutator;
        const std::size_t total = n * n * d - (d - comm_.dim());
        if (total > max_dim)
            throw std::length_error("dim sl_n(A) = " + std::to_string(total) + " exceeds guard " +
                                    std::to_string(max_dim));
        auto root_weight = [&](std::size_t i, std::size_t j) {
            std::vector<int> w(n - 1, 0);
            const int s = i < j ? 1 : -1;
            for (std::size_t t = std::min(i, j); t < std::max(i, j); ++t) w[t - 1] = s;
            return w;
        };
        auto add_root = [&](std::size_t i, std::size_t j, Block b) {
            for (std::size_t p = 0; p < d; ++p) {
                Letter l;
                l.block = b;
                l.i = i;
                l.j = j;
                l.p = p;
                l.weight = root_weight(i, j);
                root_index_[(i - 1) * n + (j - 1)].push_back(letters_.size());
                labels_.push_back("E" + std::to_string(i) + std::to_string(j) + "(" + a.labels()[p] + ")");
                letters_.push_back(std::move(l));
            }
        };
        root_index_.assign(n * n, {});
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j < i; ++j) add_root(i, j, Block::negative);
        l0_begin_ = letters_.size();
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t p = 0; p < d; ++p) {
                Letter l;
                l.i = i;
                l.p = p;
                l.weight.assign(n - 1, 0);
                labels_.push_back("h" + std::to_string(i) + "(" + a.labels()[p] + ")");
                letters_.push_back(std::move(l));
            }
        for (std::size_t q = 0; q < comm_.dim(); ++q) {
            Letter l;
            l.i = k;
            l.p = q;
            l.central_part = true;
            l.weight.assign(n - 1, 0);
            labels_.push_back("c" + std::to_string(q + 1) + "E" + std::to_string(k) + std::to_string(k));
            letters_.push_back(std::move(l));
        }
        l0_end_ = letters_.size();
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j) add_root(i, j, Block::positive);

        const std::size_t m = letters_.size();
        std::vector<Vec<F>> mats(m);
        for (std::size_t x = 0; x < m; ++x) mats[x] = letter_matrix(x);
        std::vector<SparseVec<F>> table(m * m);
        for (std::size_t x = 0; x < m; ++x)
            for (std::size_t y = x + 1; y < m; ++y) {
                SparseVec<F> b = to_sparse(from_matrix(matrix_bracket(mats[x], mats[y])));
                SparseVec<F> nb;
                for (const auto& [c, v] : b) nb.emplace_back(c, -v);
                table[x * m + y] = std::move(b);
                table[y * m + x] = std::move(nb);
            }
        lie_ = LieAlgebra<F>(labels_, std::move(table));
    }

    const Algebra<F>& coeff() const { return a_; }
    std::size_t n() const { return n_; }
    std::size_t split_index() const { return k_; }
    const RootDatumA& roots() const { return roots_; }
    const LieAlgebra<F>& lie() const { return lie_; }
    std::size_t dim() const { return letters_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Letter>& letters() const { return letters_; }
    const Letter& letter(std::size_t x) const { return letters_[x]; }
    const Subspace<F>& commutator_space() const { return comm_; }

    std::size_t l0_begin() const { return l0_begin_; }
    std::size_t l0_end() const { return l0_end_; }
    std::size_t l0_dim() const { return l0_end_ - l0_begin_; }
    bool in_l0(std::size_t x) const { return x >= l0_begin_ && x < l0_end_; }

    std::size_t root_letter(std::size_t i, std::size_t j, std::size_t p) const {
        check_root(i, j);
        return root_index_[(i - 1) * n_ + (j - 1)].at(p);
    }
    std::size_t h_letter(std::size_t i, std::size_t p) const {
        if (i < 1 || i >= n_) throw std::out_of_range("h index out of range");
        return l0_begin_ + (i - 1) * a_.dim() + p;
    }
    std::size_t c_letter(std::size_t q) const { return l0_begin_ + (n_ - 1) * a_.dim() + q; }

    Vec<F> zero() const { return Vec<F>(dim(), F(0)); }

    Vec<F> E(std::size_t i, std::size_t j, const Vec<F>& a) const {
        check_root(i, j);
        Vec<F> v = zero();
        for (std::size_t p = 0; p < a_.dim(); ++p) v[root_letter(i, j, p)] = a[p];
        return v;
    }
    Vec<F> e(std::size_t i, const Vec<F>& a) const { return E(i, i + 1, a); }
    Vec<F> f(std::size_t i, const Vec<F>& a) const { return E(i + 1, i, a); }
    Vec<F> h(std::size_t i, const Vec<F>& a) const {
        Vec<F> v = zero();
        for (std::size_t p = 0; p < a_.dim(); ++p) v[h_letter(i, p)] = a[p];
        return v;
    }
    /// H_i(a,b) = [e_i(a), f_i(b)] = ab E_ii - ba E_{i+1,i+1}.
    Vec<F> H(std::size_t i, const Vec<F>& a, const Vec<F>& b) const {
        Vec<F> m(n_ * n_ * a_.dim(), F(0));
        set_entry(m, i, i, a_.mul(a, b));
        set_entry(m, i + 1, i + 1, scaled(F(-1), a_.mul(b, a)));
        return from_matrix(m);
    }
    /// c E_kk for c in [A,A].
    Vec<F> central(const Vec<F>& c) const {
        Vec<F> m(n_ * n_ * a_.dim(), F(0));
        set_entry(m, k_, k_, c);
        return from_matrix(m);
    }
    /// The diagonal matrix element x = diag(x_1..x_n); requires tr(x) in [A,A].
    Vec<F> diagonal(const std::vector<Vec<F>>& x) const {
        Vec<F> m(n_ * n_ * a_.dim(), F(0));
        for (std::size_t i = 1; i <= n_; ++i) set_entry(m, i, i, x.at(i - 1));
        return from_matrix(m);
    }

    Vec<F> bracket(const Vec<F>& x, const Vec<F>& y) const { return lie_.bracket(x, y); }

    /// n x n matrix with A-valued entries, entry (i,j) at ((i-1)n + (j-1))*dim A.
    Vec<F> to_matrix(const Vec<F>& v) const {
        Vec<F> m(n_ * n_ * a_.dim(), F(0));
        for (std::size_t x = 0; x < dim(); ++x)
            if (!is_zero(v[x])) axpy(m, v[x], letter_matrix(x));
        return m;
    }

    Vec<F> entry(const Vec<F>& m, std::size_t i, std::size_t j) const {
        const std::size_t d = a_.dim(), off = ((i - 1) * n_ + (j - 1)) * d;
        return Vec<F>(m.begin() + off, m.begin() + off + d);
    }

    /// Coordinates of a matrix in sl_n(A); throws if tr(x) is not in [A,A].
    Vec<F> from_matrix(const Vec<F>& m) const {
        Vec<F> v = zero();
        for (std::size_t i = 1; i <= n_; ++i)
            for (std::size_t j = 1; j <= n_; ++j) {
                if (i == j) continue;
                Vec<F> x = entry(m, i, j);
                for (std::size_t p = 0; p < a_.dim(); ++p) v[root_letter(i, j, p)] = x[p];
            }
        std::vector<Vec<F>> diag;
        for (std::size_t i = 1; i <= n_; ++i) diag.push_back(entry(m, i, i));
        auto co = diag_coordinates(diag);
        for (std::size_t i = 1; i < n_; ++i)
            for (std::size_t p = 0; p < a_.dim(); ++p) v[h_letter(i, p)] = co.a[i - 1][p];
        auto cc = comm_.coordinates(co.c);
        for (std::size_t q = 0; q < comm_.dim(); ++q) v[c_letter(q)] = (*cc)[q];
        return v;
    }

    /// x = cE_kk + sum h_i(a_i) for x in L_0.
    L0Coordinates<F> l0_coordinates(const Vec<F>& x) const {
        for (std::size_t t = 0; t < dim(); ++t)
            if (!in_l0(t) && !is_zero(x[t])) throw std::invalid_argument("element is not in L0");
        L0Coordinates<F> out;
        out.c = a_.zero();
        for (std::size_t q = 0; q < comm_.dim(); ++q) axpy(out.c, x[c_letter(q)], comm_.basis()[q]);
        for (std::size_t i = 1; i < n_; ++i) {
            Vec<F> ai(a_.dim());
            for (std::size_t p = 0; p < a_.dim(); ++p) ai[p] = x[h_letter(i, p)];
            out.a.push_back(std::move(ai));
        }
        return out;
    }

    /// Inverse of l0_coordinates.
    Vec<F> assemble_l0(const L0Coordinates<F>& co) const {
        Vec<F> v = zero();
        if (!comm_.contains(co.c)) throw std::invalid_argument("c is not in [A,A]");
        auto cc = comm_.coordinates(co.c);
        for (std::size_t q = 0; q < comm_.dim(); ++q) v[c_letter(q)] = (*cc)[q];
        for (std::size_t i = 1; i < n_; ++i)
            for (std::size_t p = 0; p < a_.dim(); ++p) v[h_letter(i, p)] = co.a.at(i - 1)[p];
        return v;
    }

    /// Diagonal entries x_1..x_n of an element of L_0.
    std::vector<Vec<F>> diagonal_entries(const Vec<F>& x) const {
        Vec<F> m = to_matrix(x);
        std::vector<Vec<F>> out;
        for (std::size_t i = 1; i <= n_; ++i) out.push_back(entry(m, i, i));
        return out;
    }

    /// L_0 = sum_i [L_{alpha_i}, L_{-alpha_i}], checked by rank.
    bool l0_generated_by_sl2s() const {
        std::vector<Vec<F>> brs;
        for (std::size_t i = 1; i < n_; ++i)
            for (std::size_t p = 0; p < a_.dim(); ++p)
                for (std::size_t q = 0; q < a_.dim(); ++q)
                    brs.push_back(to_dense(lie_.bracket(root_letter(i, i + 1, p), root_letter(i + 1, i, q)), dim()));
        Subspace<F> s = Subspace<F>::span(dim(), brs);
        if (s.dim() != l0_dim()) return false;
        for (std::size_t x = l0_begin_; x < l0_end_; ++x)
            if (!s.contains(unit_vec<F>(dim(), x))) return false;
        return true;
    }

    /// [L_alpha, L_beta] lies in L_{alpha+beta} for all basis pairs.
    bool weights_additive() const {
        for (std::size_t x = 0; x < dim(); ++x)
            for (std::size_t y = 0; y < dim(); ++y)
                for (const auto& [z, v] : lie_.bracket(x, y)) {
                    for (std::size_t t = 0; t + 1 < n_; ++t)
                        if (letters_[z].weight[t] != letters_[x].weight[t] + letters_[y].weight[t]) return false;
                }
        return true;
    }

private:
    void check_root(std::size_t i, std::size_t j) const {
        if (i < 1 || j < 1 || i > n_ || j > n_ || i == j) throw std::out_of_range("root index out of range");
    }

    void set_entry(Vec<F>& m, std::size_t i, std::size_t j, const Vec<F>& a) const {
        const std::size_t d = a_.dim(), off = ((i - 1) * n_ + (j - 1)) * d;
        for (std::size_t p = 0; p < d; ++p) m[off + p] += a[p];
    }

    Vec<F> letter_matrix(std::size_t x) const {
        const Letter& l = letters_[x];
        Vec<F> m(n_ * n_ * a_.dim(), F(0));
        if (l.block != Block::zero) {
            set_entry(m, l.i, l.j, a_.basis(l.p));
        } else if (l.central_part) {
            set_entry(m, k_, k_, comm_.basis()[l.p]);
        } else {
            set_entry(m, l.i, l.i, a_.basis(l.p));
            set_entry(m, l.i + 1, l.i + 1, scaled(F(-1), a_.basis(l.p)));
        }
        return m;
    }

    Vec<F> matrix_bracket(const Vec<F>& x, const Vec<F>& y) const {
        Vec<F> out(x.size(), F(0));
        for (std::size_t i = 1; i <= n_; ++i)
            for (std::size_t t = 1; t <= n_; ++t) {
                Vec<F> xit = entry(x, i, t), yit = entry(y, i, t);
                const bool xz = is_zero_vec(xit), yz = is_zero_vec(yit);
                if (xz && yz) continue;
                for (std::size_t j = 1; j <= n_; ++j) {
                    if (!xz) {
                        Vec<F> ytj = entry(y, t, j);
                        if (!is_zero_vec(ytj)) set_entry(out, i, j, a_.mul(xit, ytj));
                    }
                    if (!yz) {
                        Vec<F> xtj = entry(x, t, j);
                        if (!is_zero_vec(xtj)) set_entry(out, i, j, scaled(F(-1), a_.mul(yit, xtj)));
                    }
                }
            }
        return out;
    }

    /// c = tr(x), a_i = sum_{m <= i} x_m - [i >= k] c.
    L0Coordinates<F> diag_coordinates(const std::vector<Vec<F>>& x) const {
        L0Coordinates<F> out;
        out.c = a_.zero();
        for (const auto& xm : x) axpy(out.c, F(1), xm);
        if (!comm_.contains(out.c)) throw std::invalid_argument("trace of the diagonal part is not in [A,A]");
        Vec<F> run = a_.zero();
        for (std::size_t i = 1; i < n_; ++i) {
            axpy(run, F(1), x[i - 1]);
            Vec<F> ai = run;
            if (i >= k_) axpy(ai, F(-1), out.c);
            out.a.push_back(std::move(ai));
        }
        return out;
    }

    Algebra<F> a_;
    std::size_t n_, k_;
    RootDatumA roots_;
    Subspace<F> comm_;
    std::vector<Letter> letters_;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::size_t>> root_index_;
    std::size_t l0_begin_ = 0, l0_end_ = 0;
    LieAlgebra<F> lie_;
};

/// theta: sl_n(A) -> sl_n(A^op), x -> -d x^t d, as a matrix between the
/// coordinate spaces of `from` and `to` (to must be built over A^op).
template <class F>
LinearMap<F> theta_map(const GradedLie<F>& from, const GradedLie<F>& to) {
    const std::size_t n = from.n();
    if (to.n() != n || to.coeff().dim() != from.coeff().dim()) throw std::invalid_argument("theta: shape mismatch");
    const std::size_t d = from.coeff().dim();
    std::vector<Vec<F>> images;
    for (std::size_t x = 0; x < from.dim(); ++x) {
        Vec<F> m = from.to_matrix(unit_vec<F>(from.dim(), x));
        Vec<F> t(m.size(), F(0));
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j) {
                Vec<F> src = from.entry(m, n + 1 - j, n + 1 - i);
                const std::size_t off = ((i - 1) * n + (j - 1)) * d;
                for (std::size_t p = 0; p < d; ++p) t[off + p] = -src[p];
            }
        images.push_back(to.from_matrix(t));
    }
    return LinearMap<F>::from_images(to.dim(), images);
}

/// theta([x,y]) = [theta x, theta y] on all basis pairs.
template <class F>
bool theta_is_lie_hom(const GradedLie<F>& from, const GradedLie<F>& to, const LinearMap<F>& th) {
    for (std::size_t x = 0; x < from.dim(); ++x)
        for (std::size_t y = x + 1; y < from.dim(); ++y) {
            Vec<F> lhs = th(to_dense(from.lie().bracket(x, y), from.dim()));
            if (lhs != to.bracket(th.image(x), th.image(y))) return false;
        }
    return true;
}

}  // namespace sela
