#pragma once

/**
 * @file weylmod.hpp
 * @brief Bounded-depth slices of induced modules I(M) = (U(L) ⊗_{U(L_0+L_+)} M)/N~,
 *        global Weyl modules W(lambda) = I(reg Se^lambda), and the truncated
 *        comparison of J^lambda with Ann_{U(L_0)}(w_lambda).
 *
 * The window of height W is spanned by u ⊗ m with u a PBW monomial in L_- of
 * height <= W. N~ is generated by f_i(1)^{ell_i+1} ⊗ m and is closed under all
 * letters of L as long as results stay in the window. Parts of N~ reached only
 * through higher depth are missed, so the computed quotient dimensions are
 * upper bounds; they are compared between windows W and W+1.
 */

#include "sela/seligman.hpp"

namespace sela {

/// An Se^lambda-module: one matrix per L_0 letter (local index).
template <class F>
struct SeModule {
    std::size_t dim = 0;
    std::vector<Matrix<F>> letters;
};

/// Checks the bracket relations of L_0 and that every generator acts by zero.
template <class F>
std::string verify_module(const GradedLie<F>& L, const std::vector<PbwElement<F>>& gens, const SeModule<F>& M) {
    const std::size_t b0 = L.l0_begin(), q = M.dim;
    if (M.letters.size() != L.l0_dim()) return "wrong number of action matrices";
    for (const auto& m : M.letters)
        if (m.rows != q || m.cols != q) return "action matrix has wrong shape";
    for (std::size_t x = b0; x < L.l0_end(); ++x)
        for (std::size_t y = x + 1; y < L.l0_end(); ++y) {
            Matrix<F> lhs = M.letters[x - b0] * M.letters[y - b0];
            lhs -= M.letters[y - b0] * M.letters[x - b0];
            Matrix<F> rhs(q, q);
            for (const auto& [z, c] : L.lie().bracket(x, y)) rhs += M.letters[z - b0].scaled(c);
            if (!(lhs == rhs)) return "bracket relation fails on (" + L.labels()[x] + ", " + L.labels()[y] + ")";
        }
    for (const auto& g : gens)
        for (std::size_t b = 0; b < q; ++b) {
            Vec<F> out(q, F(0));
            for (const auto& [m, c] : g) {
                Vec<F> t = unit_vec<F>(q, b);
                for (std::size_t s = m.size(); s-- > 0;) t = M.letters[static_cast<std::size_t>(m[s]) - b0] * t;
                axpy(out, c, t);
            }
            if (!is_zero_vec(out)) return "a generator of J^lambda acts nontrivially";
        }
    return {};
}

/// The left-regular module of a certified Se^lambda.
template <class F>
SeModule<F> regular_module(const QuotientResult<F>& r) {
    if (!r.has_structure()) throw std::invalid_argument("regular module needs a certified Se^lambda");
    SeModule<F> M;
    M.dim = r.quotient_dim;
    for (const auto& img : r.letter_images)
        M.letters.push_back(M.dim ? r.algebra.left_mult(img) : Matrix<F>(0, 0));
    return M;
}

struct WeightSpaceInfo {
    std::vector<long> k;  ///< lambda - mu = sum k_i alpha_i
    std::size_t depth = 0;
    std::size_t dim = 0;
    std::string status;   ///< exact | certified | stable | inconclusive
};

/// N~ and the quotient inside one window.
template <class F>
class InducedWindow {
public:
    InducedWindow(const GradedLie<F>& L, const std::vector<long>& lambda, const SeModule<F>& M, std::size_t window,
                  double guard = 2e5)
        : L_(&L), lambda_(lambda), M_(&M), window_(window), env_(L) {
        std::vector<std::size_t> neg;
        for (std::size_t x = 0; x < L.l0_begin(); ++x) neg.push_back(x);
        for (const auto& u : monomial_enumerate(neg, window)) {
            std::size_t h = 0;
            for (char16_t x : u) h += L.letter(x).height();
            if (h <= window) {
                index_[u] = monos_.size();
                monos_.push_back(u);
                heights_.push_back(h);
            }
        }
        if (static_cast<double>(monos_.size()) * static_cast<double>(M.dim) > guard)
            throw std::length_error("induced window exceeds guard; lower the depth");
        ech_ = Echelon<F>(size());
        close();
    }

    std::size_t size() const { return monos_.size() * M_->dim; }
    std::size_t window() const { return window_; }
    const std::vector<Mono>& monomials() const { return monos_; }

    /// x . (u ⊗ m) for a letter x, or nullopt when the result leaves the window.
    std::optional<SparseVec<F>> act(std::size_t x, const SparseVec<F>& v) {
        const std::size_t q = M_->dim, b0 = L_->l0_begin();
        std::map<std::uint32_t, F> acc;
        for (const auto& [col, c] : v) {
            const Mono& u = monos_[col / q];
            const std::size_t j = col % q;
            for (const auto& [w, d] : env_.straightener().leftmul(x, u)) {
                std::size_t cut = 0;
                while (cut < w.size() && static_cast<std::size_t>(w[cut]) < b0) ++cut;
                auto it = index_.find(w.substr(0, cut));
                if (it == index_.end()) return std::nullopt;
                Vec<F> t = unit_vec<F>(q, j);
                for (std::size_t s = w.size(); s-- > cut;) t = M_->letters[static_cast<std::size_t>(w[s]) - b0] * t;
                for (std::size_t r = 0; r < q; ++r)
                    if (!is_zero(t[r])) {
                        auto [pos, fresh] = acc.emplace(static_cast<std::uint32_t>(it->second * q + r), c * d * t[r]);
                        if (!fresh) pos->second += c * d * t[r];
                    }
            }
        }
        SparseVec<F> out;
        for (const auto& [k, val] : acc)
            if (!is_zero(val)) out.emplace_back(k, val);
        return out;
    }

    /// Normal form modulo the computed N~.
    SparseVec<F> reduce(const SparseVec<F>& v) const { return ech_.reduce(v); }

    /// Quotient dimension per weight of depth <= max_depth.
    std::map<std::vector<long>, std::size_t> weight_dims(std::size_t max_depth) const {
        std::map<std::vector<long>, std::size_t> out;
        const std::size_t q = M_->dim;
        for (std::size_t s = 0; s < monos_.size(); ++s) {
            if (heights_[s] > max_depth) continue;
            auto k = weight_k(monos_[s]);
            auto& slot = out[k];
            for (std::size_t j = 0; j < q; ++j)
                if (!ech_.is_pivot(s * q + j)) ++slot;
        }
        return out;
    }

    std::vector<long> weight_k(const Mono& u) const {
        auto w = mono_weight(*L_, u);
        std::vector<long> k(w.size());
        for (std::size_t t = 0; t < w.size(); ++t) k[t] = -w[t];
        return k;
    }

    /// Position of 1 ⊗ m_j.
    std::uint32_t top(std::size_t j) const { return static_cast<std::uint32_t>(index_.at(Mono{}) * M_->dim + j); }

private:
    void close() {
        const auto& L = *L_;
        const auto& A = L.coeff();
        std::vector<SparseVec<F>> work;
        auto push = [&](const SparseVec<F>& v) {
            const long r = ech_.insert(v);
            if (r >= 0) work.push_back(ech_.row(static_cast<std::size_t>(r)));
        };
        for (std::size_t i = 1; i < L.n(); ++i) {
            const std::size_t p = static_cast<std::size_t>(lambda_[i - 1]) + 1;
            std::vector<Vec<F>> word(p, L.f(i, A.one()));
            PbwElement<F> fp = env_.straightener().word(word);
            for (std::size_t j = 0; j < M_->dim; ++j) {
                SparseVec<F> v;
                bool inside = true;
                for (const auto& [u, c] : fp) {
                    auto it = index_.find(u);
                    if (it == index_.end()) inside = false;
                    else v.emplace_back(static_cast<std::uint32_t>(it->second * M_->dim + j), c);
                }
                if (!inside) continue;
                std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                push(v);
            }
        }
        while (!work.empty()) {
            SparseVec<F> row = std::move(work.back());
            work.pop_back();
            for (std::size_t x = 0; x < L.dim(); ++x)
                if (auto r = act(x, row)) push(*r);
        }
    }

    const GradedLie<F>* L_;
    std::vector<long> lambda_;
    const SeModule<F>* M_;
    std::size_t window_;
    Envelope<F> env_;
    std::vector<Mono> monos_;
    std::vector<std::size_t> heights_;
    std::unordered_map<Mono, std::size_t> index_;
    Echelon<F> ech_;
};

template <class F>
struct InducedModuleSlice {
    std::vector<long> lambda;
    std::size_t depth = 0;
    std::size_t window = 0;
    std::size_t module_dim = 0;
    std::vector<WeightSpaceInfo> spaces;  ///< by depth, then weight
    bool stable = false;

    std::size_t dim_at(const std::vector<long>& k) const {
        for (const auto& s : spaces)
            if (s.k == k) return s.dim;
        return 0;
    }
    std::size_t total_at_depth(std::size_t d) const {
        std::size_t t = 0;
        for (const auto& s : spaces)
            if (s.depth == d) t += s.dim;
        return t;
    }
};

/// Slice of I(M) to the given depth, computed in windows depth+2 and depth+3.
template <class F>
InducedModuleSlice<F> induce_bounded(const GradedLie<F>& L, const std::vector<long>& lambda, const SeModule<F>& M,
                                     std::size_t depth) {
    check_lambda(L.n(), lambda);
    InducedModuleSlice<F> s;
    s.lambda = lambda;
    s.depth = depth;
    s.window = depth + 2;
    s.module_dim = M.dim;
    InducedWindow<F> w1(L, lambda, M, depth + 2);
    InducedWindow<F> w2(L, lambda, M, depth + 3);
    const auto d1 = w1.weight_dims(depth), d2 = w2.weight_dims(depth);
    s.stable = d1 == d2;
    for (const auto& [k, dim] : d1) {
        WeightSpaceInfo info;
        info.k = k;
        for (long t : k) info.depth += static_cast<std::size_t>(t);
        info.dim = dim;
        if (info.depth == 0) info.status = "exact";
        else if (dim == 0) info.status = "certified";
        else info.status = d2.at(k) == dim ? "stable" : "inconclusive";
        s.spaces.push_back(std::move(info));
    }
    std::stable_sort(s.spaces.begin(), s.spaces.end(),
                     [](const auto& a, const auto& b) { return a.depth < b.depth; });
    return s;
}

template <class F>
struct WeylModuleResult {
    QuotientResult<F> se;
    SeModule<F> module;
    InducedModuleSlice<F> slice;
    bool relations_hold = false;  ///< e_i(1)w = 0, hw = lambda(h)w, f_i(1)^{ell_i+1}w = 0 on depth 0
    bool cyclic = false;          ///< the slice is generated by 1 ⊗ 1
    std::string failure;
};

/// W(lambda) = I(reg Se^lambda) to the given depth, with the defining
/// relations checked on the depth-0 slice and cyclicity checked by rank.
template <class F>
WeylModuleResult<F> weyl_module(const GradedLie<F>& L, const std::vector<long>& lambda, std::size_t depth,
                                const SeligmanOptions<F>& opt = {}) {
    WeylModuleResult<F> res;
    res.se = compute_seligman(L, lambda, opt);
    if (!res.se.has_structure())
        throw std::runtime_error("Se^lambda is " + status_name(res.se.status) + "; the Weyl slice needs a certified result");
    res.module = regular_module(res.se);
    if (res.module.dim > 0) {
        auto gens = compress(jlambda_generators(L, lambda, 0, false).elements);
        if (auto f = verify_module(L, gens, res.module); !f.empty())
            throw std::logic_error("regular module check failed: " + f);
    }
    res.slice = induce_bounded(L, lambda, res.module, depth);
    res.relations_hold = true;
    res.cyclic = true;
    if (res.module.dim == 0) return res;

    InducedWindow<F> win(L, lambda, res.module, depth + 2);
    const std::size_t q = res.module.dim;
    auto is_zero_mod = [&](const std::optional<SparseVec<F>>& v) { return v && win.reduce(*v).empty(); };
    for (std::size_t j = 0; j < q && res.relations_hold; ++j) {
        const SparseVec<F> w{{win.top(j), F(1)}};
        for (std::size_t i = 1; i < L.n(); ++i) {
            auto ev = win.act(L.root_letter(i, i + 1, 0), w);
            if (!is_zero_mod(ev)) {
                res.relations_hold = false;
                res.failure = "e_" + std::to_string(i) + "(1) does not kill the top";
                break;
            }
            auto hv = win.act(L.h_letter(i, 0), w);
            if (!hv) {
                res.relations_hold = false;
                break;
            }
            SparseVec<F> diff = sparse_axpy(*hv, F(-lambda[i - 1]), w);
            if (!win.reduce(diff).empty()) {
                res.relations_hold = false;
                res.failure = "h_" + std::to_string(i) + "(1) does not act by lambda";
                break;
            }
            std::optional<SparseVec<F>> fv = w;
            for (long t = 0; t <= lambda[i - 1] && fv; ++t) fv = win.act(L.root_letter(i + 1, i, 0), *fv);
            if (fv && !win.reduce(*fv).empty()) {
                res.relations_hold = false;
                res.failure = "f_" + std::to_string(i) + "(1)^(ell+1) does not kill the top";
                break;
            }
        }
    }

    // Cyclicity: U(L) (1 ⊗ 1) covers every weight of depth <= depth in the window.
    Echelon<F> span(win.size());
    std::vector<SparseVec<F>> work;
    auto push = [&](const SparseVec<F>& v) {
        SparseVec<F> r = win.reduce(v);
        if (r.empty()) return;
        if (span.insert(r) >= 0) work.push_back(std::move(r));
    };
    push(SparseVec<F>{{win.top(0), F(1)}});
    while (!work.empty()) {
        SparseVec<F> v = std::move(work.back());
        work.pop_back();
        for (std::size_t x = 0; x < L.dim(); ++x)
            if (auto r = win.act(x, v)) push(*r);
    }
    const auto dims = win.weight_dims(depth);
    std::size_t expected = 0;
    for (const auto& [k, d] : dims) expected += d;
    std::size_t got = 0;
    for (std::size_t r = 0; r < span.rank(); ++r) {
        const auto& u = win.monomials()[span.pivot(r) / q];
        std::size_t h = 0;
        for (char16_t x : u) h += L.letter(x).height();
        if (h <= depth) ++got;
    }
    res.cyclic = got == expected;
    if (!res.cyclic && res.failure.empty()) res.failure = "slice is not generated by the top";
    return res;
}

template <class F>
struct AnnComparison {
    std::size_t N = 0;
    bool j_in_ann = false;       ///< J_N ⊆ Ann_N
    bool ann_in_j = false;       ///< Ann_N ⊆ J_N
    bool generators_in_ann = false;
    std::size_t j_reps = 0, ann_reps = 0;
    bool ann_closed = false;
    std::optional<std::size_t> se_dim;  ///< certified dim Se^lambda, when available
    bool exact = false;          ///< Ann = J as ideals (not only truncated)
    std::string witness;
};

/// Compares J^lambda with Lambda = Ann_{U(L_0)}(w_lambda) in U(L_0)_(N) modulo
/// the central relations h_i(1) - ell_i. Lambda is the left ideal given by the
/// presentation of W(lambda); it is contained in J by its generators, so
/// equality of quotient dimensions with a certified Se^lambda gives exact
/// equality.
template <class F>
AnnComparison<F> ann_vs_J(const GradedLie<F>& L, const std::vector<long>& lambda, std::size_t N) {
    check_lambda(L.n(), lambda);
    AnnComparison<F> res;
    res.N = N;
    std::vector<PbwElement<F>> central;
    for (std::size_t i = 1; i < L.n(); ++i) {
        PbwElement<F> h;
        add_to(h, Mono(1, static_cast<char16_t>(L.h_letter(i, 0))), F(1));
        add_to(h, Mono{}, F(-lambda[i - 1]));
        central.push_back(std::move(h));
    }
    auto jg = compress(jlambda_generators(L, lambda, 0, false).elements);
    auto ag = compress(annihilator_generators(L, lambda).elements);
    Saturation<F> J(L, jg, true, central, false);
    Saturation<F> Ann(L, ag, false, central, false);
    auto tj = J.run(N);
    auto ta = Ann.run(N);
    res.j_reps = tj.reps;
    res.ann_reps = ta.reps;
    res.ann_closed = ta.closed;
    res.generators_in_ann = true;
    for (const auto& g : jg)
        if (pbw_degree(g) <= N && !Ann.contains(g)) {
            res.generators_in_ann = false;
            res.witness = "generator not in Ann_N: " + pbw_to_string(g, L.labels());
            break;
        }
    if (J.one_in_J() || Ann.one_in_J()) {
        res.j_in_ann = Ann.one_in_J() || !J.one_in_J();
        res.ann_in_j = J.one_in_J() || !Ann.one_in_J();
    } else {
        auto sj = J.ideal_subspace(), sa = Ann.ideal_subspace();
        res.j_in_ann = sa.sum(sj).dim() == sa.dim();
        res.ann_in_j = sj.sum(sa).dim() == sj.dim();
        if (!res.j_in_ann && res.witness.empty()) {
            for (const auto& v : sj.basis())
                if (!sa.contains(v)) {
                    PbwElement<F> e;
                    for (std::size_t c = 0; c < v.size(); ++c)
                        if (!is_zero(v[c])) e.emplace(J.column_monomials()[c], v[c]);
                    res.witness = "element of J_N outside Ann_N: " + pbw_to_string(e, L.labels());
                    break;
                }
        }
    }
    auto se = compute_seligman(L, lambda);
    if (se.has_structure()) {
        res.se_dim = se.quotient_dim;
        res.exact = (Ann.one_in_J() && se.quotient_dim == 0) || (ta.closed && ta.reps == se.quotient_dim);
    }
    return res;
}

}  // namespace sela
