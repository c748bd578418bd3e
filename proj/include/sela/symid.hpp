#pragma once

/**
 * @file symid.hpp
 * @brief Partitions of ell, the ell-th symmetric identity and Seligman's
 *        recursion for it.
 */

#include "sela/algebra.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace sela {

/// A partition of ell by multiplicities: p[i-1] parts of size i.
struct PartitionDatum {
    std::vector<unsigned> p;
    std::uint64_t class_size = 0;
    int sign = 1;
};

inline std::uint64_t factorial(unsigned n) {
    std::uint64_t r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

/// All partitions of ell, largest parts first, with conjugacy class data.
inline std::vector<PartitionDatum> partitions(unsigned ell) {
    if (ell < 1 || ell > 12) throw std::invalid_argument("partitions: ell must lie in 1..12");
    std::vector<PartitionDatum> out;
    std::vector<unsigned> parts;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned maxpart) {
        if (rest == 0) {
            PartitionDatum d;
            d.p.assign(ell, 0);
            for (unsigned x : parts) ++d.p[x - 1];
            std::uint64_t denom = 1;
            unsigned exponent = 0;
            for (unsigned i = 1; i <= ell; ++i) {
                for (unsigned k = 0; k < d.p[i - 1]; ++k) denom *= i;
                denom *= factorial(d.p[i - 1]);
                exponent += (i - 1) * d.p[i - 1];
            }
            d.class_size = factorial(ell) / denom;
            d.sign = exponent % 2 ? -1 : 1;
            out.push_back(std::move(d));
            return;
        }
        for (unsigned x = std::min(rest, maxpart); x >= 1; --x) {
            parts.push_back(x);
            rec(rest - x, x);
            parts.pop_back();
        }
    };
    rec(ell, ell);
    return out;
}

/// Left hand side of the ell-th symmetric identity:
/// sum over partitions of sgn * |class| * rho(a)^{p1} rho(a^2)^{p2} ... rho(a^ell)^{p_ell}.
template <class F>
Vec<F> sym_identity_lhs(const Algebra<F>& a, const Algebra<F>& b, const LinearMap<F>& rho, const Vec<F>& x,
                        unsigned ell) {
    std::vector<Vec<F>> r;
    Vec<F> pw = x;
    for (unsigned i = 1; i <= ell; ++i) {
        r.push_back(rho(pw));
        pw = a.mul(pw, x);
    }
    Vec<F> out = b.zero();
    for (const auto& d : partitions(ell)) {
        Vec<F> term = b.one();
        for (unsigned i = 1; i <= ell; ++i)
            for (unsigned k = 0; k < d.p[i - 1]; ++k) term = b.mul(term, r[i - 1]);
        axpy(out, F(d.sign) * F(static_cast<long>(d.class_size)), term);
    }
    return out;
}

/// Seligman's recursion g_1 = rho,
/// g_{t+1}(a_1..a_{t+1}) = sum_j rho(a_j) g_t(..^a_j..) - 2 sum_{j<m} g_t(a_j a_m, ..^a_j..^a_m..).
/// Arguments must commute pairwise; rho must keep them commuting.
template <class F>
class SeligmanRecursion {
public:
    SeligmanRecursion(const Algebra<F>& a, const Algebra<F>& b, const LinearMap<F>& rho) : a_(a), b_(b), rho_(rho) {}

    Vec<F> operator()(const std::vector<Vec<F>>& args) {
        if (args.empty()) throw std::invalid_argument("recursion needs at least one argument");
        for (std::size_t i = 0; i < args.size(); ++i)
            for (std::size_t j = i + 1; j < args.size(); ++j) {
                if (!is_zero_vec(a_.commutator(args[i], args[j])))
                    throw std::invalid_argument("recursion arguments " + std::to_string(i) + " and " +
                                                std::to_string(j) + " do not commute");
                if (!is_zero_vec(b_.commutator(rho_(args[i]), rho_(args[j]))))
                    throw std::invalid_argument("rho does not keep arguments " + std::to_string(i) + " and " +
                                                std::to_string(j) + " commuting");
            }
        return eval(args);
    }

private:
    static std::string key(std::vector<Vec<F>> args) {
        std::vector<std::string> parts;
        for (const auto& v : args) {
            std::string s;
            for (const auto& x : v) s += Field<F>::to_string(x) + ",";
            parts.push_back(std::move(s));
        }
        std::sort(parts.begin(), parts.end());
        std::string k;
        for (const auto& p : parts) k += p + ";";
        return k;
    }

    Vec<F> eval(const std::vector<Vec<F>>& args) {
        if (args.size() == 1) return rho_(args[0]);
        const std::string k = key(args);
        if (auto it = memo_.find(k); it != memo_.end()) return it->second;
        const std::size_t n = args.size();
        Vec<F> out = b_.zero();
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Vec<F>> rest;
            for (std::size_t i = 0; i < n; ++i)
                if (i != j) rest.push_back(args[i]);
            axpy(out, F(1), b_.mul(rho_(args[j]), eval(rest)));
        }
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t m = j + 1; m < n; ++m) {
                std::vector<Vec<F>> rest{a_.mul(args[j], args[m])};
                for (std::size_t i = 0; i < n; ++i)
                    if (i != j && i != m) rest.push_back(args[i]);
                axpy(out, F(-2), eval(rest));
            }
        memo_.emplace(k, out);
        return out;
    }

    const Algebra<F>& a_;
    const Algebra<F>& b_;
    const LinearMap<F>& rho_;
    std::map<std::string, Vec<F>> memo_;
};

/// Sample family: all sum c_i b_i with c_i in {-2..2} (first `cap` in odometer
/// order) followed by `extra` pseudo-random integer vectors.
template <class F>
std::vector<Vec<F>> sample_family(std::size_t dim, std::size_t cap = 5000, std::size_t extra = 100,
                                  std::uint32_t seed = 12345) {
    std::vector<Vec<F>> out;
    std::vector<int> c(dim, -2);
    while (out.size() < cap) {
        Vec<F> v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = F(c[i]);
        out.push_back(std::move(v));
        std::size_t i = 0;
        while (i < dim && c[i] == 2) c[i++] = -2;
        if (i == dim) break;
        ++c[i];
    }
    std::mt19937 gen(seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (std::size_t s = 0; s < extra; ++s) {
        Vec<F> v(dim);
        for (auto& x : v) x = F(dist(gen));
        out.push_back(std::move(v));
    }
    return out;
}

template <class F>
struct IdentityCheck {
    bool holds = true;
    bool exhaustive = false;  ///< true when decided by full polarization
    std::size_t samples = 0;
    std::optional<Vec<F>> witness;
};

/// Decides the ell-th symmetric identity for rho exactly by polarization: the
/// left hand side is homogeneous of degree ell in a, so it vanishes
/// identically iff its polarization vanishes on all multisets of basis vectors.
template <class F>
IdentityCheck<F> identity_by_polarization(const Algebra<F>& a, const Algebra<F>& b, const LinearMap<F>& rho,
                                          unsigned ell) {
    IdentityCheck<F> res;
    res.exhaustive = true;
    const std::size_t d = a.dim();
    std::vector<std::size_t> idx(ell, 0);
    for (;;) {
        Vec<F> total = b.zero();
        for (unsigned mask = 1; mask < (1u << ell); ++mask) {
            Vec<F> x = a.zero();
            unsigned bits = 0;
            for (unsigned s = 0; s < ell; ++s)
                if (mask >> s & 1) {
                    x[idx[s]] += F(1);
                    ++bits;
                }
            axpy(total, F((ell - bits) % 2 ? -1 : 1), sym_identity_lhs(a, b, rho, x, ell));
        }
        ++res.samples;
        if (!is_zero_vec(total)) {
            res.holds = false;
            Vec<F> w = a.zero();
            for (auto i : idx) w[i] += F(1);
            res.witness = w;
            return res;
        }
        int t = static_cast<int>(ell) - 1;
        while (t >= 0 && idx[t] == d - 1) --t;
        if (t < 0) break;
        ++idx[t];
        for (unsigned s = t + 1; s < ell; ++s) idx[s] = idx[t];
    }
    return res;
}

/// Tests the identity on the sample family; also checks polarization when
/// ell <= 4 so that a pass there is a proof rather than evidence.
template <class F>
IdentityCheck<F> check_symmetric_identity(const Algebra<F>& a, const Algebra<F>& b, const LinearMap<F>& rho,
                                          unsigned ell, std::size_t cap = 5000) {
    IdentityCheck<F> res;
    for (const auto& x : sample_family<F>(a.dim(), cap)) {
        ++res.samples;
        if (!is_zero_vec(sym_identity_lhs(a, b, rho, x, ell))) {
            res.holds = false;
            res.witness = x;
            return res;
        }
    }
    if (ell <= 4) {
        auto pol = identity_by_polarization(a, b, rho, ell);
        pol.samples += res.samples;
        return pol;
    }
    return res;
}

/// tau: A -> k, the projection onto k*1 along [A,A] (A central simple).
template <class F>
LinearMap<F> center_projection(const Algebra<F>& a) {
    auto ds = derived_spaces(a);
    if (ds.center.dim() != 1 || ds.commutator.dim() + 1 != a.dim())
        throw std::invalid_argument("center projection needs A = k1 + [A,A]");
    std::vector<Vec<F>> basis{a.one()};
    for (const auto& r : ds.commutator.basis()) basis.push_back(r);
    BasisSolver<F> solver(a.dim(), basis);
    std::vector<Vec<F>> images;
    for (std::size_t j = 0; j < a.dim(); ++j) images.push_back({(*solver.solve(a.basis(j)))[0]});
    return LinearMap<F>::from_images(1, images);
}

/// The one-dimensional algebra k.
template <class F>
Algebra<F> ground_field() {
    return Algebra<F>({"1"}, {{{0u, F(1)}}});
}

}  // namespace sela
