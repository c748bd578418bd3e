#pragma once

/**
 * @file envelope.hpp
 * @brief PBW normal forms in enveloping algebras: a memoized straightening
 *        rewriter, products of PBW elements and the Harish-Chandra
 *        projection pi_0 for sl_n(A).
 *
 * A monomial is the sorted sequence of its letters (basis indices of the Lie
 * algebra), stored as a u16string. The letter order is the index order, so
 * for GradedLie the blocks L_- < L_0 < L_+ are respected.
 *
 * Letters can be marked as
 *  - pruned: monomials containing them are dropped. Used for the positive
 *    block, where U(L)L_+ is a left ideal and dropping it is exact for left
 *    multiplication.
 *  - substituted: replaced by an affine combination of free letters. Used to
 *    work in U(L_0) modulo an ideal generated by degree one relations.
 */

#include "sela/liealg.hpp"

#include <map>
#include <type_traits>
#include <string>
#include <unordered_map>
#include <vector>

namespace sela {

using Mono = std::u16string;

template <class F>
using PbwElement = std::map<Mono, F>;

template <class F>
void add_to(PbwElement<F>& acc, const Mono& m, const std::type_identity_t<F>& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = acc.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (is_zero(it->second)) acc.erase(it);
    }
}

template <class F>
void add_scaled(PbwElement<F>& acc, const std::type_identity_t<F>& c, const PbwElement<F>& x) {
    if (is_zero(c)) return;
    for (const auto& [m, v] : x) add_to(acc, m, c * v);
}

template <class F>
PbwElement<F> pbw_one() {
    return {{Mono{}, F(1)}};
}

template <class F>
std::size_t pbw_degree(const PbwElement<F>& x) {
    std::size_t d = 0;
    for (const auto& [m, v] : x) d = std::max(d, m.size());
    return d;
}

/// Drops the monomials of degree > deg.
template <class F>
PbwElement<F> truncate(const PbwElement<F>& x, std::size_t deg) {
    PbwElement<F> out;
    for (const auto& [m, v] : x)
        if (m.size() <= deg) out.emplace(m, v);
    return out;
}

inline Mono make_mono(std::vector<std::size_t> letters) {
    std::sort(letters.begin(), letters.end());
    Mono m;
    for (auto x : letters) m.push_back(static_cast<char16_t>(x));
    return m;
}

inline std::string mono_label(const Mono& m, const std::vector<std::string>& labels) {
    if (m.empty()) return "1";
    std::string s;
    for (char16_t x : m) s += labels[static_cast<std::size_t>(x)];
    return s;
}

template <class F>
class Straightener {
public:
    enum class Mode : char { free, pruned, substituted };

    explicit Straightener(const LieAlgebra<F>& lie) : lie_(&lie), mode_(lie.dim(), Mode::free), subst_(lie.dim()) {
        if (lie.dim() >= 0xFFFF) throw std::length_error("too many letters for the monomial encoding");
    }

    const LieAlgebra<F>& lie() const { return *lie_; }
    Mode mode(std::size_t x) const { return mode_[x]; }

    void prune(std::size_t x) {
        mode_[x] = Mode::pruned;
        memo_.clear();
    }

    /// x is replaced by sum c_y y + constant; the y must be free letters.
    void substitute(std::size_t x, SparseVec<F> letters, F constant) {
        mode_[x] = Mode::substituted;
        subst_[x] = {std::move(letters), constant};
        memo_.clear();
    }

    std::size_t memo_size() const { return memo_.size(); }

    /// Normal form of x * m for a letter x and a normal monomial m.
    const PbwElement<F>& leftmul(std::size_t x, const Mono& m) {
        Mono key;
        key.reserve(m.size() + 1);
        key.push_back(static_cast<char16_t>(x));
        key += m;
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        PbwElement<F> res;
        if (mode_[x] == Mode::substituted) {
            const auto& [ls, c0] = subst_[x];
            add_to(res, m, c0);
            for (const auto& [y, c] : ls) add_scaled(res, c, leftmul(y, m));
        } else if (m.empty() || x <= static_cast<std::size_t>(m[0])) {
            if (mode_[x] == Mode::free) res.emplace(key, F(1));
        } else {
            const std::size_t y = m[0];
            const Mono rest = m.substr(1);
            const PbwElement<F> t = leftmul(x, rest);
            for (const auto& [u, c] : t) add_scaled(res, c, leftmul(y, u));
            for (const auto& [z, c] : lie_->bracket(x, y)) add_scaled(res, c, leftmul(z, rest));
        }
        return memo_.emplace(std::move(key), std::move(res)).first->second;
    }

    /// x * u for a Lie element x (coordinates) and a PBW element u.
    PbwElement<F> mul_lie(const Vec<F>& x, const PbwElement<F>& u) {
        PbwElement<F> out;
        for (std::size_t t = 0; t < x.size(); ++t) {
            if (is_zero(x[t])) continue;
            for (const auto& [m, c] : u) add_scaled(out, x[t] * c, leftmul(t, m));
        }
        return out;
    }

    PbwElement<F> mul_letter(std::size_t x, const PbwElement<F>& u) {
        PbwElement<F> out;
        for (const auto& [m, c] : u) add_scaled(out, c, leftmul(x, m));
        return out;
    }

    /// Normal form of the product of Lie elements x_1 x_2 ... x_r.
    PbwElement<F> word(const std::vector<Vec<F>>& factors) {
        PbwElement<F> acc = pbw_one<F>();
        for (std::size_t t = factors.size(); t-- > 0;) acc = mul_lie(factors[t], acc);
        return acc;
    }

    /// Normal form of a word of letters (not necessarily sorted).
    PbwElement<F> word_letters(const Mono& w) {
        PbwElement<F> acc = pbw_one<F>();
        for (std::size_t t = w.size(); t-- > 0;) acc = mul_letter(w[t], acc);
        return acc;
    }

    /// m * u for a normal monomial m (letters multiplied right to left).
    PbwElement<F> mul_mono(const Mono& m, const PbwElement<F>& u) {
        PbwElement<F> acc = u;
        for (std::size_t t = m.size(); t-- > 0;) acc = mul_letter(m[t], acc);
        return acc;
    }

    /// x * y. Straightening never raises degree, so the result is exact when
    /// cap >= deg x + deg y; a smaller cap is rejected.
    PbwElement<F> multiply(const PbwElement<F>& x, const PbwElement<F>& y, std::size_t cap) {
        if (pbw_degree(x) + pbw_degree(y) > cap)
            throw std::length_error("pbw_multiply: degree cap " + std::to_string(cap) + " too small");
        PbwElement<F> out;
        for (const auto& [m, c] : x) add_scaled(out, c, mul_mono(m, y));
        return out;
    }

private:
    const LieAlgebra<F>* lie_;
    std::vector<Mode> mode_;
    std::vector<std::pair<SparseVec<F>, F>> subst_;
    std::unordered_map<Mono, PbwElement<F>> memo_;
};

/// Sum of letter weights of a monomial.
template <class F>
std::vector<int> mono_weight(const GradedLie<F>& L, const Mono& m) {
    std::vector<int> w(L.n() - 1, 0);
    for (char16_t x : m)
        for (std::size_t t = 0; t + 1 < L.n(); ++t) w[t] += L.letter(x).weight[t];
    return w;
}

/// Weight of a homogeneous Lie element; throws if it is not homogeneous.
template <class F>
std::vector<int> element_weight(const GradedLie<F>& L, const Vec<F>& x) {
    std::optional<std::vector<int>> w;
    for (std::size_t t = 0; t < x.size(); ++t) {
        if (is_zero(x[t])) continue;
        if (!w) w = L.letter(t).weight;
        else if (*w != L.letter(t).weight) throw std::invalid_argument("element is not weight homogeneous");
    }
    return w ? *w : std::vector<int>(L.n() - 1, 0);
}

/// U(sl_n(A)) with the positive block pruned: normal forms modulo U(L)L_+,
/// which is all that pi_0 needs.
template <class F>
class Envelope {
public:
    explicit Envelope(const GradedLie<F>& L, bool prune_positive = true) : L_(&L), st_(L.lie()) {
        if (prune_positive)
            for (std::size_t x = L.l0_end(); x < L.dim(); ++x) st_.prune(x);
    }

    const GradedLie<F>& lie() const { return *L_; }
    Straightener<F>& straightener() { return st_; }

    /// pi_0 of the product of homogeneous Lie elements of total weight 0.
    PbwElement<F> pi0(const std::vector<Vec<F>>& factors) {
        std::vector<int> w(L_->n() - 1, 0);
        for (const auto& x : factors) {
            auto wx = element_weight(*L_, x);
            for (std::size_t t = 0; t < w.size(); ++t) w[t] += wx[t];
        }
        for (int c : w)
            if (c != 0) throw std::invalid_argument("pi0: argument has nonzero weight");
        return keep_l0(st_.word(factors));
    }

    /// pi_0 of a weight zero PBW element given in full normal form.
    PbwElement<F> pi0(const PbwElement<F>& x) const {
        for (const auto& [m, c] : x)
            for (int t : mono_weight(*L_, m))
                if (t != 0) throw std::invalid_argument("pi0: argument has nonzero weight");
        return keep_l0(x);
    }

private:
    PbwElement<F> keep_l0(const PbwElement<F>& x) const {
        PbwElement<F> out;
        for (const auto& [m, c] : x) {
            bool ok = true;
            for (char16_t t : m)
                if (!L_->in_l0(t)) ok = false;
            if (ok) out.emplace(m, c);
        }
        return out;
    }

    const GradedLie<F>* L_;
    Straightener<F> st_;
};

/// All sorted monomials of degree <= max_deg in the given letters, by degree
/// and then lexicographically.
inline std::vector<Mono> monomial_enumerate(const std::vector<std::size_t>& letters, std::size_t max_deg,
                                            double guard = 5e6) {
    double count = 0, term = 1;
    const double k = static_cast<double>(letters.size());
    for (std::size_t d = 0; d <= max_deg; ++d) {
        count += term;
        term = term * (k + static_cast<double>(d)) / static_cast<double>(d + 1);
    }
    if (count > guard)
        throw std::length_error("monomial count " + std::to_string(static_cast<long long>(count)) +
                                " exceeds guard; lower the degree cap or use prime-field mode");
    std::vector<std::size_t> ls = letters;
    std::sort(ls.begin(), ls.end());
    std::vector<Mono> out{Mono{}};
    std::vector<Mono> layer{Mono{}};
    std::vector<std::size_t> last_idx{0};
    for (std::size_t d = 1; d <= max_deg; ++d) {
        std::vector<Mono> next;
        std::vector<std::size_t> next_idx;
        for (std::size_t s = 0; s < layer.size(); ++s)
            for (std::size_t t = last_idx[s]; t < ls.size(); ++t) {
                next.push_back(layer[s] + static_cast<char16_t>(ls[t]));
                next_idx.push_back(t);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
        last_idx = std::move(next_idx);
    }
    return out;
}

template <class F>
std::string pbw_to_string(const PbwElement<F>& x, const std::vector<std::string>& labels) {
    if (x.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : x) {
        if (!s.empty()) s += " + ";
        s += "(" + Field<F>::to_string(c) + ")" + mono_label(m, labels);
    }
    return s;
}

}  // namespace sela
