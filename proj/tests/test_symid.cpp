#include "sela/sela.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>

using namespace sela;
using Q = Rational;

namespace {

// Cycle type of every permutation of {0..ell-1}, counted by brute force.
std::map<std::vector<unsigned>, std::pair<std::uint64_t, int>> brute_cycle_types(unsigned ell) {
    std::map<std::vector<unsigned>, std::pair<std::uint64_t, int>> out;
    std::vector<unsigned> perm(ell);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
        std::vector<unsigned> mult(ell, 0);
        std::vector<bool> seen(ell, false);
        unsigned transpositions = 0;
        for (unsigned s = 0; s < ell; ++s) {
            if (seen[s]) continue;
            unsigned len = 0;
            for (unsigned t = s; !seen[t]; t = perm[t]) {
                seen[t] = true;
                ++len;
            }
            ++mult[len - 1];
            transpositions += len - 1;
        }
        auto& e = out[mult];
        ++e.first;
        e.second = transpositions % 2 ? -1 : 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// tr: Mat_d -> k computed from the left regular representation, tr(L_a) = d tr(a).
LinearMap<Q> matrix_trace(const Algebra<Q>& A, std::size_t d) {
    std::vector<Vec<Q>> images;
    for (std::size_t j = 0; j < A.dim(); ++j) {
        const auto L = A.left_mult(A.basis(j));
        Q t = 0;
        for (std::size_t i = 0; i < A.dim(); ++i) t += L(i, i);
        images.push_back({t / Q(static_cast<long>(d))});
    }
    return LinearMap<Q>::from_images(1, images);
}

std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST(Partitions, MatchBruteForceCycleTypes) {
    for (unsigned ell = 1; ell <= 7; ++ell) {
        const auto brute = brute_cycle_types(ell);
        const auto ps = partitions(ell);
        ASSERT_EQ(ps.size(), brute.size()) << "ell " << ell;
        std::uint64_t total = 0;
        for (const auto& p : ps) {
            const auto it = brute.find(p.p);
            ASSERT_NE(it, brute.end());
            EXPECT_EQ(p.class_size, it->second.first);
            EXPECT_EQ(p.sign, it->second.second);
            total += p.class_size;
        }
        EXPECT_EQ(total, factorial(ell));
    }
}

TEST(SymmetricIdentity, TraceOfTwoByTwoMatricesSatisfiesOrderThree) {
    const auto A = matrix_algebra<Q>(2);
    const auto tr = matrix_trace(A, 2);
    const auto k = ground_field<Q>();
    EXPECT_TRUE(check_symmetric_identity(A, k, tr, 3).holds);
    EXPECT_TRUE(check_symmetric_identity(A, k, tr, 4).holds);
    const auto two = check_symmetric_identity(A, k, tr, 2);
    EXPECT_FALSE(two.holds);
    ASSERT_TRUE(two.witness.has_value());
}

TEST(SymmetricIdentity, OrderTwoOnTraceIsTwiceTheDeterminant) {
    // For a in Mat_2: tr(a)^2 - tr(a^2) = 2 det(a). Checked on 1 and on square-zero commutators.
    const auto A = matrix_algebra<Q>(2);
    const auto tr = matrix_trace(A, 2);
    const auto k = ground_field<Q>();
    EXPECT_EQ(sym_identity_lhs(A, k, tr, A.one(), 2), Vec<Q>{Q(2)});
    for (std::size_t i = 1; i < A.dim(); ++i) {
        for (std::size_t j = 1; j < A.dim(); ++j) {
            const auto c = A.commutator(A.basis(i), A.basis(j));
            if (is_zero_vec(c) || !is_zero_vec(A.mul(c, c))) continue;
            EXPECT_EQ(sym_identity_lhs(A, k, tr, c, 2), Vec<Q>{Q(0)});
        }
    }
}

TEST(SymmetricIdentity, IdentityMapSatisfiesOrderTwo) {
    const auto A = quaternion_algebra<Q>(-1, -1);
    const auto id = LinearMap<Q>(Matrix<Q>::identity(4));
    EXPECT_TRUE(check_symmetric_identity(A, A, id, 2).holds);
}

TEST(SymmetricIdentity, PolarizationAndSamplingAgree) {
    const auto A = matrix_algebra<Q>(2);
    SymTensorAlgebra<Q> ts(A, 2);
    const auto sym = ts.sym_map();
    for (unsigned order : {2u, 3u}) {
        const auto exact = identity_by_polarization(A, ts.algebra(), sym, order);
        bool sampled = true;
        for (const auto& a : sample_family<Q>(A.dim(), 300, 20))
            sampled = sampled && is_zero_vec(sym_identity_lhs(A, ts.algebra(), sym, a, order));
        EXPECT_EQ(exact.holds, sampled) << "order " << order;
    }
}

TEST(SeligmanRecursion, DiagonalIsFactorialTimesIdentity) {
    const auto A = matrix_algebra<Q>(2);
    SymTensorAlgebra<Q> ts(A, 2);
    const auto B = ts.algebra();
    const auto rho = ts.sym_map();
    for (unsigned t = 1; t <= 4; ++t) {
        for (const auto& a : sample_family<Q>(A.dim(), 40, 5)) {
            SeligmanRecursion<Q> g(A, B, rho);
            const auto lhs = sym_identity_lhs(A, B, rho, a, t);
            ASSERT_EQ(g(std::vector<Vec<Q>>(t, a)), scaled(Q(static_cast<long>(factorial(t))), lhs));
        }
    }
}

TEST(SeligmanRecursion, SymmetricInCommutingArguments) {
    const auto A = matrix_algebra<Q>(2);
    SymTensorAlgebra<Q> ts(A, 3);
    const auto B = ts.algebra();
    const auto rho = ts.sym_map();
    const Vec<Q> a{Q(1), Q(2), Q(-1), Q(3)};
    const auto a2 = A.mul(a, a);
    std::vector<Vec<Q>> args{a, a2, A.one()};
    SeligmanRecursion<Q> g(A, B, rho);
    const auto ref = g(args);
    std::sort(args.begin(), args.end());
    do {
        SeligmanRecursion<Q> h(A, B, rho);
        EXPECT_EQ(h(args), ref);
    } while (std::next_permutation(args.begin(), args.end()));
}

TEST(SeligmanRecursion, RejectsNonCommutingArguments) {
    const auto A = matrix_algebra<Q>(2);
    SeligmanRecursion<Q> g(A, A, LinearMap<Q>(Matrix<Q>::identity(4)));
    EXPECT_THROW(g({A.basis(1), A.basis(2)}), std::invalid_argument);
}

TEST(SymTensor, DimensionIsMultisetCount) {
    for (std::size_t ell = 1; ell <= 3; ++ell) {
        EXPECT_EQ(SymTensorAlgebra<Q>(matrix_algebra<Q>(2), ell).dim(), binomial(4 + ell - 1, ell));
        EXPECT_EQ(SymTensorAlgebra<Q>(trunc_poly<Q>(3), ell).dim(), binomial(3 + ell - 1, ell));
    }
    EXPECT_EQ(SymTensorAlgebra<Q>(ground_field<Q>(), 3).dim(), 1u);
}

TEST(SymTensor, SymIsUnitalUpToEllAndCommutativityIsInherited) {
    const auto A = trunc_poly<Q>(3);
    SymTensorAlgebra<Q> ts(A, 3);
    EXPECT_TRUE(ts.algebra().is_commutative());
    EXPECT_EQ(ts.sym(A.one()), scaled(Q(3), ts.algebra().one()));
    EXPECT_FALSE(SymTensorAlgebra<Q>(matrix_algebra<Q>(2), 2).algebra().is_commutative());
}

TEST(SymTensor, TbBasisElementsAreInvariant) {
    SymTensorAlgebra<Q> ts(quaternion_algebra<Q>(-1, -1), 2);
    for (const auto& v : ts.tb_basis()) EXPECT_TRUE(ts.is_invariant(v));
}

TEST(SymTensor, CenterOfSymmetricSquareOfMatrices) {
    // Partitions of 2 with at most 2 parts: {2}, {1,1}.
    EXPECT_EQ(derived_spaces(SymTensorAlgebra<Q>(matrix_algebra<Q>(2), 2).algebra()).center.dim(), 2u);
}

TEST(SymTensor, UniversalPropertyForSymAndForTrace) {
    const auto A = matrix_algebra<Q>(2);
    SymTensorAlgebra<Q> ts(A, 2);
    const auto self = check_universal_property(ts, ts.algebra(), ts.sym_map());
    ASSERT_TRUE(self.ok) << self.failure;
    EXPECT_EQ(self.phi.m, Matrix<Q>::identity(ts.dim()));

    // tr: Mat_2 -> k satisfies the order three identity, so it factors through TS^2.
    const auto tr = check_universal_property(ts, ground_field<Q>(), matrix_trace(A, 2));
    EXPECT_TRUE(tr.ok) << tr.failure;
    if (tr.ok) {
        EXPECT_TRUE(is_algebra_hom(ts.algebra(), ground_field<Q>(), tr.phi));
    }
}

TEST(SymTensor, UniversalPropertyRejectsWrongUnit) {
    const auto A = matrix_algebra<Q>(2);
    SymTensorAlgebra<Q> ts(A, 2);
    const auto r = check_universal_property(ts, A, LinearMap<Q>(Matrix<Q>::identity(4)));
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.failure, "rho(1) != ell*1");
}
