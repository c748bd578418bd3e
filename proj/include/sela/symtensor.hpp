#pragma once

/**
 * @file symtensor.hpp
 * @brief Symmetric tensor algebras TS^ell(A) inside A^{⊗ell}, the
 *        symmetrization map and the universal property of TS^ell(A).
 */

#include "sela/symid.hpp"

#include <string>
#include <vector>

namespace sela {

template <class F>
class SymTensorAlgebra {
public:
    SymTensorAlgebra(const Algebra<F>& base, std::size_t ell) : base_(base), ell_(ell) {
        if (ell < 1) throw std::invalid_argument("TS needs ell >= 1");
        if (base.dim() == 0) throw std::invalid_argument("TS of the zero algebra");
        ambient_ = tensor_power(base, ell);
        const std::size_t d = base.dim();
        stride_.assign(ell, 1);
        for (std::size_t i = ell - 1; i-- > 0;) stride_[i] = stride_[i + 1] * d;

        tb_.push_back(ambient_.one());
        multisets_.push_back({});
        labels_.push_back("1");
        std::vector<std::size_t> cur;
        for (std::size_t j = 1; j <= ell && d > 1; ++j) {
            cur.assign(j, 1);
            for (;;) {
                Vec<F> v = ambient_.one();
                std::string label;
                for (std::size_t p : cur) {
                    v = ambient_.mul(v, sym_ambient(base.basis(p)));
                    label += "s(" + base.labels()[p] + ")";
                }
                tb_.push_back(std::move(v));
                multisets_.push_back(cur);
                labels_.push_back(std::move(label));
                int t = static_cast<int>(j) - 1;
                while (t >= 0 && cur[t] == d - 1) --t;
                if (t < 0) break;
                ++cur[t];
                for (std::size_t s = t + 1; s < j; ++s) cur[s] = cur[t];
            }
        }
        for (std::size_t s = 0; s < tb_.size(); ++s)
            if (!is_invariant(tb_[s]))
                throw std::logic_error("TS basis element " + labels_[s] + " is not symmetric");
        try {
            solver_ = BasisSolver<F>(ambient_.dim(), tb_);
        } catch (const std::invalid_argument&) {
            throw std::logic_error("TS basis is linearly dependent");
        }
        space_ = Subspace<F>::span(ambient_.dim(), tb_);
        const std::size_t n = tb_.size();
        std::vector<SparseVec<F>> t(n * n);
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t r = 0; r < n; ++r) {
                auto c = solver_.solve(ambient_.mul(tb_[s], tb_[r]));
                if (!c) throw std::logic_error("TS basis is not closed under multiplication");
                t[s * n + r] = to_sparse(*c);
            }
        algebra_ = Algebra<F>(labels_, std::move(t), n <= 40);
    }

    const Algebra<F>& base() const { return base_; }
    std::size_t ell() const { return ell_; }
    std::size_t dim() const { return tb_.size(); }
    const Algebra<F>& ambient() const { return ambient_; }
    const Subspace<F>& space() const { return space_; }
    const std::vector<Vec<F>>& tb_basis() const { return tb_; }
    const std::vector<std::vector<std::size_t>>& tb_multisets() const { return multisets_; }
    /// TS^ell(A) with structure constants in the TB basis.
    const Algebra<F>& algebra() const { return algebra_; }

    /// sym(a) = sum_i 1⊗..⊗a⊗..⊗1 in ambient coordinates.
    Vec<F> sym_ambient(const Vec<F>& a) const {
        Vec<F> v = ambient_.zero();
        for (std::size_t i = 0; i < ell_; ++i)
            for (std::size_t p = 0; p < base_.dim(); ++p)
                if (!is_zero(a[p])) v[p * stride_[i]] += a[p];
        return v;
    }

    /// sym(a) in TB coordinates.
    Vec<F> sym(const Vec<F>& a) const { return *solver_.solve(sym_ambient(a)); }

    /// Coordinates in TB of a symmetric tensor; nullopt if not in TS.
    std::optional<Vec<F>> coordinates(const Vec<F>& ambient_vec) const { return solver_.solve(ambient_vec); }

    LinearMap<F> sym_map() const {
        std::vector<Vec<F>> images;
        for (std::size_t p = 0; p < base_.dim(); ++p) images.push_back(sym(base_.basis(p)));
        return LinearMap<F>::from_images(dim(), images);
    }

    /// Invariance under the adjacent transpositions of tensor factors.
    bool is_invariant(const Vec<F>& v) const {
        const std::size_t d = base_.dim();
        for (std::size_t i = 0; i + 1 < ell_; ++i)
            for (std::size_t idx = 0; idx < v.size(); ++idx) {
                const std::size_t x = idx / stride_[i] % d, y = idx / stride_[i + 1] % d;
                const std::size_t swapped = idx - x * stride_[i] - y * stride_[i + 1] + y * stride_[i] + x * stride_[i + 1];
                if (v[idx] != v[swapped]) return false;
            }
        return true;
    }

    /// Applies the permutation perm of tensor factors to v.
    Vec<F> permute(const Vec<F>& v, const std::vector<std::size_t>& perm) const {
        const std::size_t d = base_.dim();
        Vec<F> out(v.size(), F(0));
        for (std::size_t idx = 0; idx < v.size(); ++idx) {
            std::size_t target = 0;
            for (std::size_t i = 0; i < ell_; ++i) target += (idx / stride_[i] % d) * stride_[perm[i]];
            out[target] = v[idx];
        }
        return out;
    }

private:
    Algebra<F> base_;
    std::size_t ell_;
    Algebra<F> ambient_;
    std::vector<std::size_t> stride_;
    std::vector<Vec<F>> tb_;
    std::vector<std::vector<std::size_t>> multisets_;
    std::vector<std::string> labels_;
    BasisSolver<F> solver_;
    Subspace<F> space_;
    Algebra<F> algebra_;
};

template <class F>
struct UniversalResult {
    bool ok = false;
    std::string failure;
    LinearMap<F> phi;               ///< TS^ell(A) (TB coordinates) -> B
    std::optional<Vec<F>> witness;  ///< violating element of A
};

/// Constructs phi: TS^ell(A) -> B with phi∘sym = rho, or reports why it cannot exist.
template <class F>
UniversalResult<F> check_universal_property(const SymTensorAlgebra<F>& ts, const Algebra<F>& b,
                                            const LinearMap<F>& rho) {
    UniversalResult<F> res;
    const auto& a = ts.base();
    const F ell(static_cast<long>(ts.ell()));
    if (rho(a.one()) != scaled(ell, b.one())) {
        res.failure = "rho(1) != ell*1";
        return res;
    }
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            if (rho(a.commutator(a.basis(i), a.basis(j))) != b.commutator(rho.image(i), rho.image(j))) {
                res.failure = "rho is not a Lie homomorphism on (" + a.labels()[i] + ", " + a.labels()[j] + ")";
                return res;
            }
    auto id = check_symmetric_identity(a, b, rho, static_cast<unsigned>(ts.ell() + 1));
    if (!id.holds) {
        res.failure = "rho violates the symmetric identity of order " + std::to_string(ts.ell() + 1);
        res.witness = id.witness;
        return res;
    }
    std::vector<Vec<F>> images;
    for (const auto& ms : ts.tb_multisets()) {
        Vec<F> v = b.one();
        for (std::size_t p : ms) v = b.mul(v, rho.image(p));
        images.push_back(std::move(v));
    }
    res.phi = LinearMap<F>::from_images(b.dim(), images);
    for (std::size_t p = 0; p < a.dim(); ++p)
        if (res.phi(ts.sym(a.basis(p))) != rho.image(p)) {
            res.failure = "phi∘sym differs from rho at " + a.labels()[p];
            return res;
        }
    if (!is_algebra_hom(ts.algebra(), b, res.phi)) {
        res.failure = "phi is not multiplicative";
        return res;
    }
    res.ok = true;
    return res;
}

}  // namespace sela
