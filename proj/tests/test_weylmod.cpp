#include "sela/sela.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace sela;
using Q = Rational;

namespace {

// V(ell) for sl_2(k) realized on homogeneous polynomials of degree ell in x, y:
// e = x d/dy, f = y d/dx, h = x d/dx - y d/dy. Returns dim of each h-eigenspace
// keyed by k where the eigenvalue is ell - 2k, after checking the relations.
std::map<long, std::size_t> sl2_irreducible_weights(long ell) {
    const std::size_t n = static_cast<std::size_t>(ell) + 1;  // basis x^(ell-j) y^j
    Matrix<Q> e(n, n), f(n, n), h(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const long a = ell - static_cast<long>(j), b = static_cast<long>(j);
        h(j, j) = Q(a - b);
        if (b > 0) e(j - 1, j) = Q(b);
        if (a > 0) f(j + 1, j) = Q(a);
    }
    Matrix<Q> ef = e * f;
    ef -= f * e;
    EXPECT_EQ(ef, h);
    std::map<long, std::size_t> out;
    for (std::size_t j = 0; j < n; ++j) {
        const long k = (ell - (h(j, j).get_num().get_si())) / 2;
        ++out[k];
    }
    return out;
}

}  // namespace

TEST(Weyl, Sl2MatchesIrreducibleModule) {
    GradedLie<Q> L(ground_field<Q>(), 2);
    for (long ell = 0; ell <= 3; ++ell) {
        const auto w = weyl_module(L, {ell}, static_cast<std::size_t>(ell) + 2);
        ASSERT_TRUE(w.relations_hold) << w.failure;
        EXPECT_TRUE(w.cyclic);
        EXPECT_TRUE(w.slice.stable);
        const auto oracle = sl2_irreducible_weights(ell);
        for (long k = 0; k <= ell + 2; ++k) {
            const auto it = oracle.find(k);
            EXPECT_EQ(w.slice.dim_at({k}), it == oracle.end() ? 0u : it->second) << "ell " << ell << " k " << k;
        }
    }
}

TEST(Weyl, Sl3AdjointWeightMultiplicities) {
    // W(theta) for sl_3(k) is the adjoint module; weight spaces are root spaces
    // of the Lie algebra itself, counted here from the letter weights.
    GradedLie<Q> L(ground_field<Q>(), 3);
    std::map<std::vector<long>, std::size_t> oracle;
    for (const auto& l : L.letters()) {
        // theta - weight = k1 alpha1 + k2 alpha2 with theta = (1,1) in root coordinates.
        ++oracle[{1 - l.weight[0], 1 - l.weight[1]}];
    }
    const auto w = weyl_module(L, {1, 1}, 4);
    ASSERT_TRUE(w.relations_hold) << w.failure;
    for (const auto& s : w.slice.spaces) {
        const auto it = oracle.find(s.k);
        EXPECT_EQ(s.dim, it == oracle.end() ? 0u : it->second);
    }
    EXPECT_EQ(w.slice.dim_at({1, 1}), 2u);
    std::size_t total = 0;
    for (std::size_t d = 0; d <= 4; ++d) total += w.slice.total_at_depth(d);
    EXPECT_EQ(total, 8u);
}

TEST(Weyl, Sl3StandardModule) {
    GradedLie<Q> L(ground_field<Q>(), 3);
    const auto w = weyl_module(L, {1, 0}, 3);
    EXPECT_EQ(w.slice.dim_at({0, 0}), 1u);
    EXPECT_EQ(w.slice.dim_at({1, 0}), 1u);
    EXPECT_EQ(w.slice.dim_at({1, 1}), 1u);
    EXPECT_EQ(w.slice.dim_at({0, 1}), 0u);
    EXPECT_EQ(w.slice.total_at_depth(3), 0u);
}

TEST(Weyl, TrivialWeight) {
    GradedLie<Q> L(matrix_algebra<Q>(2), 3);
    const auto w = weyl_module(L, {0, 0}, 2);
    EXPECT_EQ(w.slice.total_at_depth(0), 1u);
    EXPECT_EQ(w.slice.total_at_depth(1), 0u);
    EXPECT_EQ(w.slice.total_at_depth(2), 0u);
}

TEST(Weyl, TopIsSeligmanAlgebraForTruncatedPolynomials) {
    GradedLie<Q> L(trunc_poly<Q>(2), 2);
    const auto w = weyl_module(L, {1}, 3);
    ASSERT_TRUE(w.relations_hold) << w.failure;
    EXPECT_TRUE(w.cyclic);
    EXPECT_EQ(w.slice.dim_at({0}), 2u);
    EXPECT_EQ(w.slice.dim_at({0}), w.se.quotient_dim);
    // lambda - (ell+1) alpha vanishes.
    EXPECT_EQ(w.slice.dim_at({2}), 0u);
}

TEST(Weyl, IntegrableBoundAlongEachSimpleRoot) {
    GradedLie<Q> L(trunc_poly<Q>(2), 3);
    const auto w = weyl_module(L, {1, 2}, 4);
    EXPECT_EQ(w.slice.dim_at({2, 0}), 0u);
    EXPECT_EQ(w.slice.dim_at({0, 3}), 0u);
    EXPECT_GT(w.slice.dim_at({0, 2}), 0u);
}

TEST(Weyl, DepthZeroIsTheModule) {
    GradedLie<Q> L(matrix_algebra<Q>(2), 3);
    const auto r = compute_seligman(L, {1, 0});
    ASSERT_EQ(r.status, QuotientStatus::certified);
    const auto M = regular_module(r);
    const auto s = induce_bounded(L, {1, 0}, M, 1);
    EXPECT_EQ(s.dim_at({0, 0}), M.dim);
}

TEST(SeModule, RegularModuleVerifiesAndPerturbedOneDoesNot) {
    GradedLie<Q> L(trunc_poly<Q>(2), 2);
    const auto r = compute_seligman(L, {2});
    ASSERT_EQ(r.status, QuotientStatus::certified);
    const auto gens = jlambda_generators(L, {2}, 4, true).elements;
    auto M = regular_module(r);
    EXPECT_EQ(verify_module(L, gens, M), "");
    M.letters[0] = M.letters[0].scaled(Q(3));
    EXPECT_NE(verify_module(L, gens, M), "");
}

TEST(AnnVsJ, TrivialWeight) {
    GradedLie<Q> L(trunc_poly<Q>(2), 2);
    const auto a = ann_vs_J(L, {0}, 2);
    EXPECT_TRUE(a.j_in_ann);
    EXPECT_TRUE(a.ann_in_j);
    EXPECT_EQ(a.j_reps, 1u);
    EXPECT_EQ(a.ann_reps, 1u);
}

TEST(AnnVsJ, TruncatedPolynomialsAtFundamentalWeight) {
    GradedLie<Q> L(trunc_poly<Q>(2), 2);
    const auto a = ann_vs_J(L, {1}, 2);
    EXPECT_TRUE(a.generators_in_ann);
    EXPECT_TRUE(a.j_in_ann);
    EXPECT_TRUE(a.ann_in_j);
    EXPECT_TRUE(a.exact);
}

TEST(AnnVsJ, MatrixCoefficientsContainment) {
    GradedLie<Q> L(matrix_algebra<Q>(2), 3);
    const auto a = ann_vs_J(L, {1, 0}, 2);
    EXPECT_TRUE(a.generators_in_ann);
    EXPECT_TRUE(a.j_in_ann);
}
