#pragma once

/**
 * @file seligman.hpp
 * @brief The ideal J^lambda of U(L_0), the algebra Se^lambda = U(L_0)/J^lambda
 *        by truncated saturation, and its certification.
 *
 * Method. Degree <= 1 elements of J (closed under ad L_0) are eliminated
 * first: they form an affine space w - chi(w) with w in an ideal W of L_0,
 * and U(L_0) modulo them has a PBW basis of monomials in the remaining free
 * letters. In that quotient Q the ideal is saturated up to degree N by
 * multiplying echelon rows of degree <= N-1 by free letters on both sides.
 * Columns are ordered by decreasing degree, so pivots absorb the high-degree
 * monomials and the non-pivot monomials of degree <= N-1 are the candidate
 * representatives R.
 *
 * If c*R reduces into span R for every free letter c, then span R + J is a
 * left ideal containing 1, so dim Se <= |R|. The reductions define matrices
 * M_c on span R; if they satisfy the bracket relations of L_0 and kill every
 * generator, span R is an Se-module, cyclic on the class of 1, so
 * dim Se >= |R| and the structure constants are read off the matrices.
 */

#include "sela/envelope.hpp"
#include "sela/symtensor.hpp"

#include <chrono>
#include <memory>
#include <unordered_map>

namespace sela {

/// All multisets of size t from {0..d-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> multisets(std::size_t d, std::size_t t) {
    std::vector<std::vector<std::size_t>> out;
    if (t == 0) return {{}};
    std::vector<std::size_t> cur(t, 0);
    for (;;) {
        out.push_back(cur);
        int s = static_cast<int>(t) - 1;
        while (s >= 0 && cur[s] == d - 1) --s;
        if (s < 0) break;
        ++cur[s];
        for (std::size_t r = s + 1; r < t; ++r) cur[r] = cur[s];
    }
    return out;
}

inline void check_lambda(std::size_t n, const std::vector<long>& lambda) {
    if (lambda.size() != n - 1)
        throw std::invalid_argument("lambda needs " + std::to_string(n - 1) + " coordinates");
    if (!RootDatumA::dominant(lambda)) throw std::invalid_argument("lambda must be dominant");
}

template <class F>
struct JLambdaGenerators {
    std::vector<long> lambda;
    bool relaxed = false;
    std::vector<PbwElement<F>> elements;  ///< in U(L_0), letters are GradedLie indices
};

/// pi_0(e_i(a_1)..e_i(a_r) f_i(b_1)..f_i(b_r)) for basis multisets a and b
/// (both families of factors commute, so multisets suffice).
template <class F>
void push_string_generators(const GradedLie<F>& L, Envelope<F>& env, std::size_t i, std::size_t r, bool b_unit,
                            std::vector<PbwElement<F>>& out) {
    const auto& A = L.coeff();
    const auto ams = multisets(A.dim(), r);
    const auto bms = b_unit ? std::vector<std::vector<std::size_t>>{std::vector<std::size_t>(r, 0)} : ams;
    for (const auto& am : ams)
        for (const auto& bm : bms) {
            std::vector<Vec<F>> word;
            for (auto p : am) word.push_back(L.e(i, A.basis(p)));
            for (auto q : bm) word.push_back(L.f(i, A.basis(q)));
            auto g = env.pi0(word);
            if (!g.empty()) out.push_back(std::move(g));
        }
}

/// Generators of J^lambda: h_i(1) - ell_i and the strings of length ell_i+1;
/// the relaxed family adds strings of length ell_i+2..m_cap.
template <class F>
JLambdaGenerators<F> jlambda_generators(const GradedLie<F>& L, const std::vector<long>& lambda, std::size_t m_cap,
                                        bool relaxed) {
    check_lambda(L.n(), lambda);
    long lmax = *std::max_element(lambda.begin(), lambda.end());
    if (m_cap < static_cast<std::size_t>(lmax) + 1) m_cap = static_cast<std::size_t>(lmax) + 1;
    JLambdaGenerators<F> g;
    g.lambda = lambda;
    g.relaxed = relaxed;
    Envelope<F> env(L);
    for (std::size_t i = 1; i < L.n(); ++i) {
        PbwElement<F> h;
        add_to(h, Mono(1, static_cast<char16_t>(L.h_letter(i, 0))), F(1));
        add_to(h, Mono{}, F(-lambda[i - 1]));
        g.elements.push_back(std::move(h));
        const std::size_t r = static_cast<std::size_t>(lambda[i - 1]) + 1;
        push_string_generators(L, env, i, r, false, g.elements);
        if (relaxed)
            for (std::size_t s = r + 1; s <= m_cap; ++s) push_string_generators(L, env, i, s, true, g.elements);
    }
    return g;
}

/// Generators of the left ideal Lambda = U(L_0)(h - lambda(h)) + sum U(L_0) pi_0(e_i(a..) f_i(1)^{ell_i+1}),
/// which is Ann_{U(L_0)}(w_lambda) in the global Weyl module.
template <class F>
JLambdaGenerators<F> annihilator_generators(const GradedLie<F>& L, const std::vector<long>& lambda) {
    check_lambda(L.n(), lambda);
    JLambdaGenerators<F> g;
    g.lambda = lambda;
    Envelope<F> env(L);
    for (std::size_t i = 1; i < L.n(); ++i) {
        PbwElement<F> h;
        add_to(h, Mono(1, static_cast<char16_t>(L.h_letter(i, 0))), F(1));
        add_to(h, Mono{}, F(-lambda[i - 1]));
        g.elements.push_back(std::move(h));
        push_string_generators(L, env, i, static_cast<std::size_t>(lambda[i - 1]) + 1, true, g.elements);
    }
    return g;
}

/// Row-reduces a family of PBW elements (highest degree monomials first).
template <class F>
std::vector<PbwElement<F>> compress(const std::vector<PbwElement<F>>& xs) {
    std::vector<Mono> monos;
    for (const auto& x : xs)
        for (const auto& [m, c] : x) monos.push_back(m);
    std::sort(monos.begin(), monos.end(), [](const Mono& a, const Mono& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a > b;
    });
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    std::unordered_map<Mono, std::uint32_t> col;
    for (std::size_t t = 0; t < monos.size(); ++t) col[monos[t]] = static_cast<std::uint32_t>(t);
    Echelon<F> ech(monos.size());
    for (const auto& x : xs) {
        SparseVec<F> v;
        for (const auto& [m, c] : x) v.emplace_back(col[m], c);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        ech.insert(v);
    }
    std::vector<PbwElement<F>> out;
    for (std::size_t r = 0; r < ech.rank(); ++r) {
        PbwElement<F> e;
        for (const auto& [c, v] : ech.row(r)) e.emplace(monos[c], v);
        out.push_back(std::move(e));
    }
    return out;
}

/// (ell_max+1)^(dim L_0 - dim h).
template <class F>
mpz_class dim_bound(const GradedLie<F>& L, const std::vector<long>& lambda) {
    check_lambda(L.n(), lambda);
    const long lmax = *std::max_element(lambda.begin(), lambda.end());
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(lmax + 1),
                  static_cast<unsigned long>(L.l0_dim() - (L.n() - 1)));
    return r;
}

// ---------------------------------------------------------------------------
// Targets: an algebra B with a Lie homomorphism eta_0: L_0 -> B^-.

template <class F>
struct Target {
    std::string name;
    Algebra<F> algebra;
    std::vector<Vec<F>> eta0;  ///< image of each L_0 letter (local index)
};

/// Image of a U(L_0) element under the extension of eta_0.
template <class F>
Vec<F> eval_target(const GradedLie<F>& L, const Target<F>& t, const PbwElement<F>& u) {
    const auto& B = t.algebra;
    Vec<F> out = B.zero();
    for (const auto& [m, c] : u) {
        Vec<F> v = B.one();
        for (char16_t x : m) v = B.mul(v, t.eta0.at(static_cast<std::size_t>(x) - L.l0_begin()));
        axpy(out, c, v);
    }
    return out;
}

template <class F>
struct SandwichResult {
    bool lie_hom = false;
    bool is_admissible = false;
    std::size_t image_dim = 0;
    std::string failure;
};

/// Checks eta_0 is a Lie homomorphism and kills every generator; the image
/// dimension is then a lower bound for dim Se^lambda.
template <class F>
SandwichResult<F> sandwich_certify(const GradedLie<F>& L, const std::vector<PbwElement<F>>& gens,
                                   const Target<F>& t) {
    SandwichResult<F> res;
    const auto& B = t.algebra;
    const std::size_t b0 = L.l0_begin();
    if (t.eta0.size() != L.l0_dim()) throw std::invalid_argument("target eta0 has wrong length");
    for (std::size_t x = b0; x < L.l0_end(); ++x)
        for (std::size_t y = x + 1; y < L.l0_end(); ++y) {
            Vec<F> lhs = B.zero();
            for (const auto& [z, c] : L.lie().bracket(x, y)) axpy(lhs, c, t.eta0[z - b0]);
            if (lhs != B.commutator(t.eta0[x - b0], t.eta0[y - b0])) {
                res.failure = "eta0 is not a Lie homomorphism on (" + L.labels()[x] + ", " + L.labels()[y] + ")";
                return res;
            }
        }
    res.lie_hom = true;
    for (const auto& g : gens)
        if (!is_zero_vec(eval_target(L, t, g))) {
            res.failure = "a generator of J^lambda does not vanish in the target";
            return res;
        }
    res.is_admissible = true;
    if (B.dim() == 0) return res;
    res.image_dim = subalgebra_generated(B, t.eta0).dim();
    return res;
}

/// Coordinates of a letter of L_0 in the split cE_kk + sum h_i(a_i) for an
/// arbitrary k (the GradedLie itself may use another k).
template <class F>
L0Coordinates<F> l0_coordinates_at(const GradedLie<F>& L, const Vec<F>& x, std::size_t k) {
    const auto diag = L.diagonal_entries(x);
    const auto& A = L.coeff();
    L0Coordinates<F> out;
    out.c = A.zero();
    for (const auto& xm : diag) axpy(out.c, F(1), xm);
    Vec<F> run = A.zero();
    for (std::size_t i = 1; i < L.n(); ++i) {
        axpy(run, F(1), diag[i - 1]);
        Vec<F> ai = run;
        if (i >= k) axpy(ai, F(-1), out.c);
        out.a.push_back(std::move(ai));
    }
    return out;
}

/// eta_0(cE_kk + sum h_i(a_i)) = sum rho_i(a_i); rho_i may be empty (zero map).
template <class F>
Target<F> assemble_target(const GradedLie<F>& L, std::string name, Algebra<F> B,
                          const std::vector<std::optional<LinearMap<F>>>& rho, std::size_t k) {
    Target<F> t;
    t.name = std::move(name);
    for (std::size_t x = L.l0_begin(); x < L.l0_end(); ++x) {
        auto co = l0_coordinates_at(L, unit_vec<F>(L.dim(), x), k);
        Vec<F> v = B.zero();
        for (std::size_t i = 1; i < L.n(); ++i)
            if (rho[i - 1]) axpy(v, F(1), (*rho[i - 1])(co.a[i - 1]));
        t.eta0.push_back(std::move(v));
    }
    t.algebra = std::move(B);
    return t;
}

/// eta_0(diag(x_1..x_n)) = sum_m phi_m(x_m).
template <class F>
Target<F> diagonal_target(const GradedLie<F>& L, std::string name, Algebra<F> B,
                          const std::vector<std::optional<LinearMap<F>>>& phi) {
    Target<F> t;
    t.name = std::move(name);
    for (std::size_t x = L.l0_begin(); x < L.l0_end(); ++x) {
        auto diag = L.diagonal_entries(unit_vec<F>(L.dim(), x));
        Vec<F> v = B.zero();
        for (std::size_t m = 0; m < L.n(); ++m)
            if (m < phi.size() && phi[m]) axpy(v, F(1), (*phi[m])(diag[m]));
        t.eta0.push_back(std::move(v));
    }
    t.algebra = std::move(B);
    return t;
}

/// Linear maps A -> B_1 (x) ... (x) B_r placing f_s(a) in factor s.
template <class F>
std::vector<LinearMap<F>> factor_embeddings(const std::vector<Algebra<F>>& parts,
                                            const std::vector<LinearMap<F>>& maps) {
    std::size_t total = 1;
    for (const auto& p : parts) total *= p.dim();
    std::vector<LinearMap<F>> out;
    for (std::size_t s = 0; s < parts.size(); ++s) {
        std::size_t stride = 1;
        for (std::size_t t = s + 1; t < parts.size(); ++t) stride *= parts[t].dim();
        std::vector<Vec<F>> images;
        for (std::size_t j = 0; j < maps[s].src_dim(); ++j) {
            Vec<F> img = maps[s].image(j);
            Vec<F> v(total, F(0));
            for (std::size_t q = 0; q < img.size(); ++q) v[q * stride] = img[q];
            images.push_back(std::move(v));
        }
        out.push_back(LinearMap<F>::from_images(total, images));
    }
    return out;
}

template <class F>
LinearMap<F> zero_map(std::size_t src, std::size_t dst) {
    return LinearMap<F>(Matrix<F>(dst, src));
}

/// The explicit target for lambda: k for lambda = 0; the tensor product of
/// TS^{ell_i}(A) over the support for commutative A; for totally disconnected
/// lambda the product of TS^{ell_1}(A), TS^{ell_i}(A)/C_i and TS^{ell_{n-1}}(A^op).
template <class F>
Target<F> ts_lambda_target(const GradedLie<F>& L, const std::vector<long>& lambda) {
    check_lambda(L.n(), lambda);
    const std::size_t n = L.n();
    const auto& A = L.coeff();
    std::vector<std::optional<LinearMap<F>>> rho(n - 1);
    bool zero = true;
    for (long l : lambda) zero = zero && l == 0;
    if (zero) return assemble_target(L, "k", ground_field<F>(), rho, 1);

    std::vector<Algebra<F>> parts;
    std::vector<LinearMap<F>> maps;
    std::vector<std::size_t> which;
    std::size_t k = 1;
    std::string name;
    if (A.is_commutative()) {
        for (std::size_t i = 1; i < n; ++i) {
            if (lambda[i - 1] == 0) continue;
            SymTensorAlgebra<F> ts(A, static_cast<std::size_t>(lambda[i - 1]));
            parts.push_back(ts.algebra());
            maps.push_back(ts.sym_map());
            which.push_back(i);
            name += (name.empty() ? "" : " ⊗ ") + std::string("TS^") + std::to_string(lambda[i - 1]) + "(A)";
        }
    } else {
        for (std::size_t i = 1; i + 1 < n; ++i)
            if (lambda[i - 1] > 0 && lambda[i] > 0)
                throw std::invalid_argument("explicit target needs commutative A or totally disconnected lambda");
        std::size_t kk = 0;
        for (std::size_t i = 1; i < n && !kk; ++i)
            if (lambda[i - 1] == 0) kk = i;
        if (!kk) throw std::invalid_argument("explicit target needs some ell_k = 0 for noncommutative A");
        k = kk;
        for (std::size_t i = 1; i < n; ++i) {
            const long l = lambda[i - 1];
            if (l == 0) continue;
            if (i == n - 1) {
                SymTensorAlgebra<F> ts(opposite(A), static_cast<std::size_t>(l));
                parts.push_back(ts.algebra());
                maps.push_back(ts.sym_map());
                name += (name.empty() ? "" : " ⊗ ") + std::string("TS^") + std::to_string(l) + "(A^op)";
            } else if (i == 1) {
                SymTensorAlgebra<F> ts(A, static_cast<std::size_t>(l));
                parts.push_back(ts.algebra());
                maps.push_back(ts.sym_map());
                name += (name.empty() ? "" : " ⊗ ") + std::string("TS^") + std::to_string(l) + "(A)";
            } else {
                SymTensorAlgebra<F> ts(A, static_cast<std::size_t>(l));
                auto ds = derived_spaces(ts.algebra());
                auto q = quotient_algebra(ts.algebra(), ds.commutator_ideal);
                if (q.algebra.dim() == 0) {
                    Target<F> t;
                    t.name = "0";
                    t.eta0.assign(L.l0_dim(), Vec<F>{});
                    return t;
                }
                parts.push_back(q.algebra);
                maps.push_back(LinearMap<F>(q.projection) * ts.sym_map());
                name += (name.empty() ? "" : " ⊗ ") + std::string("TS^") + std::to_string(l) + "(A)/C";
            }
            which.push_back(i);
        }
    }
    auto emb = factor_embeddings(parts, maps);
    for (std::size_t s = 0; s < which.size(); ++s) rho[which[s] - 1] = emb[s];
    return assemble_target(L, name, tensor_product(parts), rho, k);
}

/// Target k with eta_0 = ell * tau(a_i) in the k = 1 split (A = k1 + [A,A]).
template <class F>
Target<F> trace_target(const GradedLie<F>& L, std::size_t i, long ell) {
    std::vector<std::optional<LinearMap<F>>> rho(L.n() - 1);
    LinearMap<F> tau = center_projection(L.coeff());
    rho[i - 1] = LinearMap<F>(tau.m.scaled(F(ell)));
    return assemble_target(L, std::to_string(ell) + "τ on k", ground_field<F>(), rho, 1);
}

/// Target A for sl_4 of a four-dimensional algebra with an involution:
/// diag(x_1..x_4) -> x_1^* + x_1 + x_2.
template <class F>
Target<F> quaternion_target(const GradedLie<F>& L) {
    const auto& A = L.coeff();
    LinearMap<F> star = standard_involution(A);
    Matrix<F> m = star.m;
    m += Matrix<F>::identity(A.dim());
    std::vector<std::optional<LinearMap<F>>> phi(L.n());
    phi[0] = LinearMap<F>(m);
    phi[1] = LinearMap<F>(Matrix<F>::identity(A.dim()));
    return diagonal_target(L, "A via x1* + x1 + x2", A, phi);
}

// ---------------------------------------------------------------------------
// Saturation

template <class F>
struct LevelTrace {
    std::size_t N = 0;
    std::size_t free_letters = 0;
    std::size_t rank = 0;      ///< dim of the truncated ideal in Q_(N)
    std::size_t reps = 0;      ///< non-pivot monomials of degree <= N-1
    bool closed = false;
    bool one_in_J = false;
};

template <class F>
struct RegularWitness {
    bool ok = false;
    std::string failure;
    std::vector<Matrix<F>> letter_matrices;  ///< per L_0 letter (local)
    Algebra<F> algebra;
    std::vector<Vec<F>> letter_images;       ///< class of each L_0 letter
};

template <class F>
class Saturation {
public:
    /// two_sided: J is the two-sided ideal generated by gens, and degree <= 1
    /// relations are eliminated. Otherwise the left ideal generated by gens in
    /// U(L_0) modulo the central relations `central`.
    /// absorb = false keeps degree <= 1 generators as ordinary rows, so two
    /// saturations with the same `central` share their coordinates.
    Saturation(const GradedLie<F>& L, std::vector<PbwElement<F>> gens, bool two_sided,
               const std::vector<PbwElement<F>>& central = {}, bool absorb = true)
        : L_(&L), two_sided_(two_sided), absorb_(two_sided && absorb), v1_(L.l0_dim() + 1) {
        for (auto& g : gens) {
            if (absorb_ && pbw_degree(g) <= 1) add_linear(g);
            else high_.push_back(std::move(g));
        }
        for (const auto& c : central) add_linear(c);
        rebuild();
    }

    bool one_in_J() const { return one_in_J_; }
    const std::vector<std::size_t>& free_letters() const { return free_; }
    std::size_t level() const { return N_; }
    Straightener<F>& straightener() { return *st_; }
    const std::vector<PbwElement<F>>& generators() const { return high_; }

    /// Affine relations eliminated so far, as rows over (L_0 letters, 1).
    const Subspace<F>& linear_relations() const { return v1_; }

    /// Builds the truncated ideal in degree <= N.
    LevelTrace<F> run(std::size_t N) {
        for (;;) {
            build(N);
            if (one_in_J_) break;
            std::vector<SparseVec<F>> low;
            for (std::size_t r = 0; r < ech_.rank(); ++r)
                if (monos_[ech_.pivot(r)].size() <= 1) low.push_back(ech_.row(r));
            if (!absorb_ || low.empty()) break;
            for (const auto& row : low) {
                PbwElement<F> g;
                for (const auto& [c, v] : row) g.emplace(monos_[c], v);
                add_linear(g);
            }
            rebuild();
            if (one_in_J_) break;
        }
        LevelTrace<F> t;
        t.N = N;
        t.free_letters = free_.size();
        t.one_in_J = one_in_J_;
        if (one_in_J_) {
            t.closed = true;
            return t;
        }
        t.rank = ech_.rank();
        reps_.clear();
        for (std::size_t c = monos_.size(); c-- > 0;)
            if (!ech_.is_pivot(c) && monos_[c].size() + 1 <= N) reps_.push_back(static_cast<std::uint32_t>(c));
        t.reps = reps_.size();
        t.closed = closed();
        return t;
    }

    /// Representatives (degree ascending, "1" first) after run().
    std::vector<Mono> representatives() const {
        std::vector<Mono> out;
        for (auto c : reps_) out.push_back(monos_[c]);
        return out;
    }

    /// Image in Q of a U(L_0) element (as a PBW element over free letters).
    PbwElement<F> to_quotient(const PbwElement<F>& u) {
        PbwElement<F> out;
        for (const auto& [m, c] : u) add_scaled(out, c, st_->word_letters(m));
        return out;
    }

    /// Normal form modulo the truncated ideal, in coordinates of the
    /// representatives; nullopt if it leaves their span.
    std::optional<Vec<F>> reduce_to_reps(const PbwElement<F>& q) const {
        SparseVec<F> v;
        for (const auto& [m, c] : q) {
            auto it = col_.find(m);
            if (it == col_.end()) return std::nullopt;
            v.emplace_back(it->second, c);
        }
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseVec<F> r = ech_.reduce(v);
        Vec<F> out(reps_.size(), F(0));
        for (const auto& [c, x] : r) {
            auto it = rep_pos_.find(c);
            if (it == rep_pos_.end()) return std::nullopt;
            out[it->second] = x;
        }
        return out;
    }

    /// Whether a U(L_0) element lies in the truncated ideal of the last run.
    bool contains(const PbwElement<F>& u) {
        if (one_in_J_) return true;
        PbwElement<F> q = to_quotient(u);
        SparseVec<F> v;
        for (const auto& [m, c] : q) {
            auto it = col_.find(m);
            if (it == col_.end()) return false;
            v.emplace_back(it->second, c);
        }
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return ech_.contains(v);
    }

    /// The truncated ideal of the last run as a subspace of Q_(N).
    Subspace<F> ideal_subspace() const {
        std::vector<Vec<F>> rows;
        for (std::size_t r = 0; r < ech_.rank(); ++r) rows.push_back(to_dense(ech_.row(r), monos_.size()));
        return Subspace<F>::span(monos_.size(), rows);
    }
    const std::vector<Mono>& column_monomials() const { return monos_; }

    /// Regular representation on span R (see the file comment).
    RegularWitness<F> regular_witness(const std::vector<PbwElement<F>>& all_gens, std::size_t cap = 64) {
        RegularWitness<F> w;
        const std::size_t q = reps_.size();
        if (one_in_J_ || q == 0) {
            w.failure = "no representatives";
            return w;
        }
        if (q > cap) {
            w.failure = "representative count " + std::to_string(q) + " exceeds witness cap";
            return w;
        }
        const auto& L = *L_;
        const std::size_t b0 = L.l0_begin();
        std::vector<std::optional<Matrix<F>>> free_m(L.dim());
        for (std::size_t c : free_) {
            Matrix<F> m(q, q);
            for (std::size_t b = 0; b < q; ++b) {
                auto col = reduce_to_reps(st_->leftmul(c, monos_[reps_[b]]));
                if (!col) {
                    w.failure = "closure fails";
                    return w;
                }
                for (std::size_t a = 0; a < q; ++a) m(a, b) = (*col)[a];
            }
            free_m[c] = std::move(m);
        }
        const Matrix<F> I = Matrix<F>::identity(q);
        for (std::size_t x = b0; x < L.l0_end(); ++x) {
            if (st_->mode(x) == Straightener<F>::Mode::free) {
                w.letter_matrices.push_back(*free_m[x]);
                continue;
            }
            const auto& row = sigma_.at(x);
            Matrix<F> m = I.scaled(row.second);
            for (const auto& [y, c] : row.first) m += free_m[y]->scaled(c);
            w.letter_matrices.push_back(std::move(m));
        }
        const auto& M = w.letter_matrices;
        for (std::size_t x = b0; x < L.l0_end(); ++x)
            for (std::size_t y = x + 1; y < L.l0_end(); ++y) {
                Matrix<F> lhs = M[x - b0] * M[y - b0];
                lhs -= M[y - b0] * M[x - b0];
                Matrix<F> rhs(q, q);
                for (const auto& [z, c] : L.lie().bracket(x, y)) rhs += M[z - b0].scaled(c);
                if (!(lhs == rhs)) {
                    w.failure = "bracket relation fails on (" + L.labels()[x] + ", " + L.labels()[y] + ")";
                    return w;
                }
            }
        auto act = [&](const PbwElement<F>& u, const Vec<F>& v) {
            Vec<F> out(q, F(0));
            for (const auto& [m, c] : u) {
                Vec<F> t = v;
                for (std::size_t s = m.size(); s-- > 0;) t = M[static_cast<std::size_t>(m[s]) - b0] * t;
                axpy(out, c, t);
            }
            return out;
        };
        for (const auto& g : all_gens)
            for (std::size_t b = 0; b < q; ++b)
                if (!is_zero_vec(act(g, unit_vec<F>(q, b)))) {
                    w.failure = "a generator acts nontrivially";
                    return w;
                }
        Subspace<F> cyc(q);
        std::vector<Vec<F>> frontier{unit_vec<F>(q, 0)};
        cyc.add(frontier[0]);
        while (!frontier.empty()) {
            std::vector<Vec<F>> next;
            for (const auto& v : frontier)
                for (std::size_t c : free_) {
                    Vec<F> u = *free_m[c] * v;
                    if (cyc.add(u)) next.push_back(std::move(u));
                }
            frontier = std::move(next);
        }
        if (cyc.dim() != q) {
            w.failure = "the class of 1 does not generate";
            return w;
        }
        std::vector<std::string> labels;
        std::vector<SparseVec<F>> table(q * q);
        for (std::size_t a = 0; a < q; ++a) {
            const Mono& ma = monos_[reps_[a]];
            labels.push_back(mono_label(ma, L.labels()));
            Matrix<F> P = I;
            for (char16_t x : ma) P = P * M[static_cast<std::size_t>(x) - b0];
            for (std::size_t b = 0; b < q; ++b) {
                Vec<F> col(q);
                for (std::size_t r = 0; r < q; ++r) col[r] = P(r, b);
                table[a * q + b] = to_sparse(col);
            }
        }
        w.algebra = Algebra<F>(std::move(labels), std::move(table), q <= 40);
        for (const auto& m : M) {
            Vec<F> col(q);
            for (std::size_t r = 0; r < q; ++r) col[r] = m(r, 0);
            w.letter_images.push_back(std::move(col));
        }
        w.ok = true;
        return w;
    }

private:
    void add_linear(const PbwElement<F>& g) {
        const std::size_t d0 = L_->l0_dim();
        Vec<F> v(d0 + 1, F(0));
        for (const auto& [m, c] : g) {
            if (m.size() > 1) throw std::logic_error("linear relation of degree > 1");
            if (m.empty()) v[d0] += c;
            else v[static_cast<std::size_t>(m[0]) - L_->l0_begin()] += c;
        }
        v1_.add(v);
    }

    /// Closes the affine relations under ad L_0 and rebuilds the straightener.
    void rebuild() {
        const auto& L = *L_;
        const std::size_t d0 = L.l0_dim(), b0 = L.l0_begin();
        for (;;) {
            const std::size_t before = v1_.dim();
            const auto rows = v1_.basis();
            for (const auto& r : rows)
                for (std::size_t x = 0; x < d0; ++x) {
                    Vec<F> v(d0 + 1, F(0));
                    for (std::size_t y = 0; y < d0; ++y) {
                        if (is_zero(r[y])) continue;
                        for (const auto& [z, c] : L.lie().bracket(b0 + x, b0 + y)) v[z - b0] += r[y] * c;
                    }
                    v1_.add(v);
                }
            if (v1_.dim() == before) break;
        }
        st_ = std::make_unique<Straightener<F>>(L.lie());
        sigma_.clear();
        free_.clear();
        std::vector<char> piv(d0 + 1, 0);
        for (std::size_t r = 0; r < v1_.dim(); ++r) {
            const std::size_t p = v1_.pivots()[r];
            if (p == d0) one_in_J_ = true;
            piv[p] = 1;
        }
        for (std::size_t x = 0; x < d0; ++x)
            if (!piv[x]) free_.push_back(b0 + x);
        for (std::size_t r = 0; r < v1_.dim(); ++r) {
            const std::size_t p = v1_.pivots()[r];
            if (p == d0) continue;
            const auto& row = v1_.basis()[r];
            SparseVec<F> ls;
            for (std::size_t y : free_)
                if (!is_zero(row[y - b0])) ls.emplace_back(static_cast<std::uint32_t>(y), -row[y - b0]);
            st_->substitute(b0 + p, ls, -row[d0]);
            sigma_[b0 + p] = {ls, -row[d0]};
        }
    }

    SparseVec<F> to_columns(const PbwElement<F>& q) const {
        SparseVec<F> v;
        for (const auto& [m, c] : q) {
            auto it = col_.find(m);
            if (it == col_.end()) throw std::logic_error("monomial outside the truncation");
            v.emplace_back(it->second, c);
        }
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    }

    void build(std::size_t N) {
        N_ = N;
        ech_ = Echelon<F>();
        monos_.clear();
        col_.clear();
        reps_.clear();
        rep_pos_.clear();
        if (one_in_J_) return;
        monos_ = monomial_enumerate(free_, N);
        std::reverse(monos_.begin(), monos_.end());
        for (std::size_t c = 0; c < monos_.size(); ++c) col_[monos_[c]] = static_cast<std::uint32_t>(c);
        ech_ = Echelon<F>(monos_.size());
        std::vector<SparseVec<F>> work;
        auto push = [&](const PbwElement<F>& q) {
            if (q.empty()) return;
            const long r = ech_.insert(to_columns(q));
            if (r >= 0 && monos_[ech_.pivot(static_cast<std::size_t>(r))].size() + 1 <= N)
                work.push_back(ech_.row(static_cast<std::size_t>(r)));
        };
        for (const auto& g : high_)
            if (pbw_degree(g) <= N) push(to_quotient(g));
        while (!work.empty()) {
            SparseVec<F> row = std::move(work.back());
            work.pop_back();
            for (std::size_t c : free_) {
                PbwElement<F> lp;
                for (const auto& [col, v] : row) add_scaled(lp, v, st_->leftmul(c, monos_[col]));
                push(lp);
                if (two_sided_) {
                    PbwElement<F> rp;
                    const PbwElement<F> cm{{Mono(1, static_cast<char16_t>(c)), F(1)}};
                    for (const auto& [col, v] : row) add_scaled(rp, v, st_->mul_mono(monos_[col], cm));
                    push(rp);
                }
            }
            if (ech_.rank() > 0 && ech_.is_pivot(monos_.size() - 1)) {
                one_in_J_ = true;
                return;
            }
        }
        if (ech_.rank() > 0 && ech_.is_pivot(monos_.size() - 1)) one_in_J_ = true;
    }

    bool closed() {
        rep_pos_.clear();
        for (std::size_t t = 0; t < reps_.size(); ++t) rep_pos_[reps_[t]] = t;
        for (std::size_t c : free_)
            for (auto r : reps_)
                if (!reduce_to_reps(st_->leftmul(c, monos_[r]))) return false;
        return true;
    }

    const GradedLie<F>* L_;
    bool two_sided_;
    bool absorb_;
    Subspace<F> v1_;
    bool one_in_J_ = false;
    std::vector<PbwElement<F>> high_;
    std::unique_ptr<Straightener<F>> st_;
    std::map<std::size_t, std::pair<SparseVec<F>, F>> sigma_;
    std::vector<std::size_t> free_;
    std::size_t N_ = 0;
    Echelon<F> ech_;
    std::vector<Mono> monos_;
    std::unordered_map<Mono, std::uint32_t> col_;
    std::vector<std::uint32_t> reps_;
    std::unordered_map<std::uint32_t, std::size_t> rep_pos_;
};

// ---------------------------------------------------------------------------
// Se^lambda

enum class QuotientStatus { certified, certified_zero, stable, inconclusive };

inline std::string status_name(QuotientStatus s) {
    switch (s) {
        case QuotientStatus::certified: return "certified";
        case QuotientStatus::certified_zero: return "certified-zero";
        case QuotientStatus::stable: return "stable";
        default: return "inconclusive";
    }
}

template <class F>
struct SeligmanOptions {
    std::size_t n_max = 0;  ///< 0 means max(3, ell_max + 2)
    bool relaxed = true;
    std::size_t m_cap = 0;  ///< 0 means ell_max + 2
    std::size_t witness_cap = 64;
    std::optional<Target<F>> target;
};

template <class F>
struct QuotientResult {
    std::vector<long> lambda;
    std::string scalar_mode;
    QuotientStatus status = QuotientStatus::inconclusive;
    std::size_t quotient_dim = 0;
    std::size_t N = 0;
    std::vector<LevelTrace<F>> trace;
    std::vector<Mono> basis;
    std::vector<std::string> basis_labels;
    Algebra<F> algebra;                ///< structure constants (certified results)
    std::vector<Vec<F>> letter_images; ///< class of each L_0 letter in the basis
    bool regular_witness = false;
    std::optional<SandwichResult<F>> sandwich;
    std::string target_name;
    std::string diagnostics;
    mpz_class bound;
    std::size_t generator_count = 0;

    bool has_structure() const {
        return status == QuotientStatus::certified || status == QuotientStatus::certified_zero;
    }
};

template <class F>
QuotientResult<F> compute_seligman(const GradedLie<F>& L, const std::vector<long>& lambda,
                                   const SeligmanOptions<F>& opt = {}) {
    check_lambda(L.n(), lambda);
    QuotientResult<F> res;
    res.lambda = lambda;
    res.scalar_mode = Field<F>::name();
    res.bound = dim_bound(L, lambda);
    const long lmax = *std::max_element(lambda.begin(), lambda.end());
    const std::size_t n_max = opt.n_max ? opt.n_max : std::max<std::size_t>(3, static_cast<std::size_t>(lmax) + 2);
    const std::size_t m_cap = opt.m_cap ? opt.m_cap : static_cast<std::size_t>(lmax) + 2;
    auto gens = jlambda_generators(L, lambda, m_cap, opt.relaxed);
    auto comp = compress(gens.elements);
    res.generator_count = comp.size();
    if (opt.target) {
        res.sandwich = sandwich_certify(L, comp, *opt.target);
        res.target_name = opt.target->name;
    }
    const bool lower_ok = res.sandwich && res.sandwich->is_admissible;
    Saturation<F> sat(L, comp, true);
    std::optional<std::size_t> last_closed;
    bool stable = false;
    for (std::size_t N = 1; N <= n_max; ++N) {
        LevelTrace<F> t = sat.run(N);
        res.trace.push_back(t);
        res.N = N;
        if (t.one_in_J) {
            if (lower_ok && res.sandwich->image_dim > 0)
                throw std::logic_error("soundness failure: admissible target with nonzero image but 1 in J");
            res.status = QuotientStatus::certified_zero;
            res.quotient_dim = 0;
            res.algebra = Algebra<F>();
            res.letter_images.assign(L.l0_dim(), Vec<F>{});
            return res;
        }
        if (!t.closed) continue;
        if (lower_ok && res.sandwich->image_dim > t.reps)
            throw std::logic_error("soundness failure: lower bound exceeds upper bound");
        if (t.reps > res.bound) throw std::logic_error("quotient dimension exceeds the spanning bound");
        if (last_closed && t.reps > *last_closed)
            throw std::logic_error("closed-level dimensions increased with N");
        stable = last_closed && *last_closed == t.reps;
        last_closed = t.reps;
        res.quotient_dim = t.reps;
        res.basis = sat.representatives();
        res.basis_labels.clear();
        for (const auto& m : res.basis) res.basis_labels.push_back(mono_label(m, L.labels()));
        auto w = sat.regular_witness(comp, opt.witness_cap);
        if (w.ok) {
            res.diagnostics.clear();
            res.regular_witness = true;
            res.status = QuotientStatus::certified;
            res.algebra = std::move(w.algebra);
            res.letter_images = std::move(w.letter_images);
            return res;
        }
        res.diagnostics = w.failure;
        if (lower_ok && res.sandwich->image_dim == t.reps) {
            // eta induces Se -> image bijectively; transport the structure.
            const auto& B = opt.target->algebra;
            std::vector<Vec<F>> images;
            for (const auto& m : res.basis) images.push_back(eval_target(L, *opt.target, PbwElement<F>{{m, F(1)}}));
            if (images.empty() || images[0] != B.one()) throw std::logic_error("first representative is not 1");
            res.algebra = subalgebra_on_basis(B, images, res.basis_labels);
            BasisSolver<F> solver(B.dim(), images);
            res.letter_images.clear();
            for (const auto& v : opt.target->eta0) res.letter_images.push_back(*solver.solve(v));
            res.status = QuotientStatus::certified;
            return res;
        }
    }
    res.status = stable ? QuotientStatus::stable : QuotientStatus::inconclusive;
    if (!last_closed) res.diagnostics = "no closed level up to N = " + std::to_string(n_max);
    return res;
}

/// Class in Se of an element of L_0 (coordinates in L).
template <class F>
Vec<F> can(const GradedLie<F>& L, const QuotientResult<F>& r, const Vec<F>& x) {
    Vec<F> out(r.quotient_dim, F(0));
    if (r.quotient_dim == 0) return out;
    for (std::size_t t = L.l0_begin(); t < L.l0_end(); ++t)
        if (!is_zero(x[t])) axpy(out, x[t], r.letter_images.at(t - L.l0_begin()));
    for (std::size_t t = 0; t < L.dim(); ++t)
        if (!L.in_l0(t) && !is_zero(x[t])) throw std::invalid_argument("can: element is not in L0");
    return out;
}

template <class F>
struct IsoCheck {
    bool ok = false;
    std::string failure;
    LinearMap<F> eta_bar;  ///< Se -> B
};

/// Verifies that eta_0 induces an isomorphism Se^lambda -> B: equal
/// dimensions, invertible matrix, unital and multiplicative on basis pairs.
template <class F>
IsoCheck<F> check_iso(const GradedLie<F>& L, const QuotientResult<F>& r, const Target<F>& t) {
    IsoCheck<F> res;
    const auto& B = t.algebra;
    if (!r.has_structure()) {
        res.failure = "result carries no certified structure constants";
        return res;
    }
    if (r.quotient_dim != B.dim()) {
        res.failure = "dimension mismatch: Se has " + std::to_string(r.quotient_dim) + ", target has " +
                      std::to_string(B.dim());
        return res;
    }
    if (B.dim() == 0) {
        res.ok = true;
        return res;
    }
    std::vector<Vec<F>> images;
    for (const auto& m : r.basis) {
        PbwElement<F> u{{m, F(1)}};
        images.push_back(eval_target(L, t, u));
    }
    res.eta_bar = LinearMap<F>::from_images(B.dim(), images);
    if (res.eta_bar.m.rank() != B.dim()) {
        res.failure = "induced map is not bijective";
        return res;
    }
    if (res.eta_bar(r.algebra.one()) != B.one()) {
        res.failure = "induced map is not unital";
        return res;
    }
    for (std::size_t a = 0; a < B.dim(); ++a)
        for (std::size_t b = 0; b < B.dim(); ++b)
            if (res.eta_bar(to_dense(r.algebra.product(a, b), B.dim())) != B.mul(images[a], images[b])) {
                res.failure = "not multiplicative on (" + r.basis_labels[a] + ", " + r.basis_labels[b] + ")";
                return res;
            }
    for (std::size_t x = L.l0_begin(); x < L.l0_end(); ++x)
        if (res.eta_bar(r.letter_images[x - L.l0_begin()]) != t.eta0[x - L.l0_begin()]) {
            res.failure = "induced map disagrees with eta0 on " + L.labels()[x];
            return res;
        }
    res.ok = true;
    return res;
}

template <class F>
struct SubalgebraInfo {
    Subspace<F> space;
    bool commutative = false;
};

/// Se_i: the unital subalgebra generated by the classes of H_i(A,A).
template <class F>
SubalgebraInfo<F> subalgebra_Se_i(const GradedLie<F>& L, const QuotientResult<F>& r, std::size_t i) {
    if (!r.has_structure()) throw std::invalid_argument("Se_i needs a certified result");
    const auto& A = L.coeff();
    std::vector<Vec<F>> gens;
    for (std::size_t p = 0; p < A.dim(); ++p)
        for (std::size_t q = 0; q < A.dim(); ++q) gens.push_back(can(L, r, L.H(i, A.basis(p), A.basis(q))));
    SubalgebraInfo<F> info;
    if (r.quotient_dim == 0) {
        info.space = Subspace<F>(0);
        info.commutative = true;
        return info;
    }
    info.space = subalgebra_generated(r.algebra, gens);
    info.commutative = true;
    const auto& bs = info.space.basis();
    for (std::size_t s = 0; s < bs.size() && info.commutative; ++s)
        for (std::size_t t = s + 1; t < bs.size(); ++t)
            if (!is_zero_vec(r.algebra.commutator(bs[s], bs[t]))) {
                info.commutative = false;
                break;
            }
    return info;
}

template <class F>
bool subalgebras_commute(const Algebra<F>& a, const Subspace<F>& u, const Subspace<F>& v) {
    for (const auto& x : u.basis())
        for (const auto& y : v.basis())
            if (!is_zero_vec(a.commutator(x, y))) return false;
    return true;
}

template <class F>
struct CriterionResult {
    bool identity_holds = false;   ///< rho satisfies the ell-th symmetric identity
    bool strings_vanish = false;   ///< (eta o pi_0)(e_i(a..) f_i(b..)) = 0 for all a, b
    bool agree() const { return identity_holds == strings_vanish; }
};

/// Evaluates both sides of the criterion for rho(a) = eta(h_i(a)).
template <class F>
CriterionResult<F> symmetric_identity_criterion(const GradedLie<F>& L, std::size_t i, const Target<F>& eta,
                                                unsigned ell) {
    const auto& A = L.coeff();
    const auto& B = eta.algebra;
    std::vector<Vec<F>> rho_images;
    for (std::size_t p = 0; p < A.dim(); ++p) {
        PbwElement<F> u{{Mono(1, static_cast<char16_t>(L.h_letter(i, p))), F(1)}};
        rho_images.push_back(eval_target(L, eta, u));
    }
    LinearMap<F> rho = LinearMap<F>::from_images(B.dim(), rho_images);
    for (std::size_t p = 0; p < A.dim(); ++p)
        for (std::size_t q = p + 1; q < A.dim(); ++q)
            if (rho(A.commutator(A.basis(p), A.basis(q))) != B.commutator(rho.image(p), rho.image(q)))
                throw std::invalid_argument("rho = eta o h_i is not a Lie homomorphism");
    CriterionResult<F> res;
    res.identity_holds = check_symmetric_identity(A, B, rho, ell).holds;
    std::vector<PbwElement<F>> strings;
    Envelope<F> env(L);
    push_string_generators(L, env, i, ell, false, strings);
    res.strings_vanish = true;
    for (const auto& s : strings)
        if (!is_zero_vec(eval_target(L, eta, s))) {
            res.strings_vanish = false;
            break;
        }
    return res;
}

}  // namespace sela
