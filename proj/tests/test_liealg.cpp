#include "sela/sela.hpp"

#include <gtest/gtest.h>

using namespace sela;
using Q = Rational;

TEST(RootDatum, CartanAndShift) {
    RootDatumA r(4);
    EXPECT_EQ(r.simple_root(0), (std::vector<long>{2, -1, 0}));
    EXPECT_EQ(r.simple_root(1), (std::vector<long>{-1, 2, -1}));
    EXPECT_EQ(r.shift({1, 1, 0}, {1, 0, 0}), (std::vector<long>{-1, 2, 0}));
    EXPECT_TRUE(RootDatumA::dominant({0, 2, 1}));
    EXPECT_FALSE(RootDatumA::dominant({1, -1}));
}

TEST(RootDatum, DominanceOrder) {
    RootDatumA r(3);
    EXPECT_TRUE(r.leq({0, 0}, {1, 1}));   // varpi1 + varpi2 = alpha1 + alpha2
    EXPECT_FALSE(r.leq({1, 0}, {0, 0}));  // varpi1 is not in the root lattice
    EXPECT_TRUE(r.leq({0, 1}, {2, 0}));   // 2 varpi1 - varpi2 = alpha1
    EXPECT_FALSE(r.leq({2, 0}, {0, 1}));
}

TEST(RootDatum, ThetaStarReversesFundamentalWeights) {
    EXPECT_EQ(RootDatumA::theta_star({1, 2, 0}), (std::vector<long>{0, 2, 1}));
}

TEST(GradedLie, Dimension) {
    EXPECT_EQ(GradedLie<Q>(ground_field<Q>(), 2).dim(), 3u);
    EXPECT_EQ(GradedLie<Q>(ground_field<Q>(), 4).dim(), 15u);
    // n^2 d - (d - dim [A,A]).
    EXPECT_EQ(GradedLie<Q>(matrix_algebra<Q>(2), 3).dim(), 35u);
    EXPECT_EQ(GradedLie<Q>(trunc_poly<Q>(3), 2).dim(), 9u);
    EXPECT_EQ(GradedLie<Q>(quaternion_algebra<Q>(-1, -1), 2).dim(), 15u);
}

TEST(GradedLie, L0Dimension) {
    // L0 = h_i(A) for i < n plus [A,A] E_kk.
    GradedLie<Q> L(matrix_algebra<Q>(2), 3);
    EXPECT_EQ(L.l0_dim(), 2u * 4 + 3);
    for (std::size_t x = L.l0_begin(); x < L.l0_end(); ++x) EXPECT_EQ(L.letter(x).height(), 0u);
}

TEST(GradedLie, Sl2Relations) {
    GradedLie<Q> L(ground_field<Q>(), 2);
    const Vec<Q> one{Q(1)};
    const auto e = L.e(1, one), f = L.f(1, one), h = L.h(1, one);
    EXPECT_EQ(L.bracket(e, f), h);
    EXPECT_EQ(L.bracket(h, e), scaled(Q(2), e));
    EXPECT_EQ(L.bracket(h, f), scaled(Q(-2), f));
}

TEST(GradedLie, MatrixUnitBracketsAgainstHandComputation) {
    const auto A = matrix_algebra<Q>(2);
    GradedLie<Q> L(A, 3);
    const auto a = Vec<Q>{Q(1), Q(2), Q(0), Q(-1)}, b = Vec<Q>{Q(0), Q(1), Q(3), Q(1)};
    // [E12(a), E23(b)] = E13(ab), [E13(a), E31(b)] = ab E11 - ba E33.
    EXPECT_EQ(L.bracket(L.E(1, 2, a), L.E(2, 3, b)), L.E(1, 3, A.mul(a, b)));
    EXPECT_EQ(L.bracket(L.E(1, 2, a), L.E(1, 3, b)), L.zero());
    EXPECT_EQ(L.bracket(L.e(1, a), L.f(1, b)), L.H(1, a, b));
}

TEST(GradedLie, JacobiAndAntisymmetry) {
    EXPECT_TRUE(GradedLie<Q>(matrix_algebra<Q>(2), 3).lie().check_laws(300));
    EXPECT_TRUE(GradedLie<Q>(quaternion_algebra<Q>(-1, -1), 2).lie().check_laws(300));
    EXPECT_TRUE(GradedLie<FpA>(trunc_poly<FpA>(3), 3).lie().check_laws(300));
}

TEST(GradedLie, WeightsAndGeneration) {
    for (const auto& A : {ground_field<Q>(), matrix_algebra<Q>(2), trunc_poly<Q>(2)}) {
        GradedLie<Q> L(A, 3);
        EXPECT_TRUE(L.weights_additive());
        EXPECT_TRUE(L.l0_generated_by_sl2s());
    }
}

TEST(GradedLie, L0CoordinatesRoundTrip) {
    GradedLie<Q> L(matrix_algebra<Q>(2), 3);
    for (std::size_t x = L.l0_begin(); x < L.l0_end(); ++x) {
        const auto v = unit_vec<Q>(L.dim(), x);
        EXPECT_EQ(L.assemble_l0(L.l0_coordinates(v)), v);
    }
}

TEST(GradedLie, SizeGuard) {
    EXPECT_THROW(GradedLie<Q>(matrix_algebra<Q>(3), 6, 1, 100), std::length_error);
}

TEST(Theta, IsLieHomomorphismAndInvolution) {
    const auto A = matrix_algebra<Q>(2);
    const auto Aop = opposite(A);
    GradedLie<Q> L(A, 3), Lop(Aop, 3), Lopop(opposite(Aop), 3);
    const auto th = theta_map(L, Lop);
    EXPECT_TRUE(theta_is_lie_hom(L, Lop, th));
    const auto back = theta_map(Lop, Lopop);
    EXPECT_EQ((back.m * th.m), Matrix<Q>::identity(L.dim()));
}

TEST(Theta, SendsPositiveToPositiveWithReversedIndex) {
    const auto A = quaternion_algebra<Q>(-1, -1);
    GradedLie<Q> L(A, 3), Lop(opposite(A), 3);
    const auto th = theta_map(L, Lop);
    const auto i = A.basis(1);
    // theta(E12(a)) = -E23(a).
    EXPECT_EQ(th(L.e(1, i)), scaled(Q(-1), Lop.e(2, i)));
}
